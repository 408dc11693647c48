#include "swiptrelay/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "swiptrelay/errors.hpp"

namespace swiptrelay {

namespace {

// Gauss-Kronrod (7,15) abscissae and weights on [-1,1] (positive half).
constexpr int kGk = 8;
constexpr double kXgk[kGk] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[kGk] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double integral;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// One (7,15) rule application; error estimate is |K15 - G7|, which is a
// conservative bound for the Kronrod value.
Segment gk15(const std::function<double(double)>& f, double a, double b,
             std::size_t& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double res_k = 0.0, res_g = 0.0;
  for (int i = 0; i < kGk; ++i) {
    const double x = kXgk[i];
    double fsum;
    if (i == kGk - 1) {
      fsum = f(c);
      evals += 1;
    } else {
      fsum = f(c - h * x) + f(c + h * x);
      evals += 2;
    }
    res_k += kWgk[i] * fsum;
    if (i % 2 == 1) res_g += kWg[i / 2] * fsum;  // Gauss nodes sit at odd i
  }
  res_k *= h;
  res_g *= h;
  return Segment{a, b, res_k, std::fabs(res_k - res_g)};
}

}  // namespace

QuadResult adaptive_quad(const std::function<double(double)>& f, double a,
                         double b, double abs_tol, double rel_tol,
                         std::size_t max_intervals) {
  if (std::isnan(a) || std::isnan(b) || b < a)
    throw ValidationError("adaptive_quad: bad interval");
  QuadResult out;
  if (a == b) {
    out.value = 0.0;
    out.error_bound = 0.0;
    out.converged = true;
    return out;
  }

  // Map [a, inf) onto t in [0,1): x = a + t/(1-t), dx = dt/(1-t)^2.
  std::function<double(double)> g;
  double lo = a, hi = b;
  if (std::isinf(b)) {
    g = [&f, a](double t) {
      const double om = 1.0 - t;
      const double x = a + t / om;
      const double v = f(x);
      return v == 0.0 ? 0.0 : v / (om * om);
    };
    lo = 0.0;
    hi = 1.0;
  } else {
    g = f;
  }

  std::priority_queue<Segment> segs;
  std::size_t evals = 0;
  Segment whole = gk15(g, lo, hi, evals);
  double total = whole.integral;
  double err = whole.error;
  segs.push(whole);

  std::size_t intervals = 1;
  while (err > std::max(abs_tol, rel_tol * std::fabs(total)) &&
         intervals < max_intervals) {
    Segment worst = segs.top();
    segs.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval exhausted at machine resolution; keep its estimate
      err -= worst.error;
      worst.error = 0.0;
      segs.push(worst);
      continue;
    }
    Segment l = gk15(g, worst.a, mid, evals);
    Segment r = gk15(g, mid, worst.b, evals);
    total += l.integral + r.integral - worst.integral;
    err += l.error + r.error - worst.error;
    segs.push(l);
    segs.push(r);
    ++intervals;
  }

  out.value = total;
  out.error_bound = err;
  out.evaluations = evals;
  out.converged = err <= std::max(abs_tol, rel_tol * std::fabs(total));
  return out;
}

double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, double rel_tol,
                          std::size_t max_intervals) {
  QuadResult r = adaptive_quad(f, a, b, abs_tol, rel_tol, max_intervals);
  if (!r.converged)
    throw QuadratureError("adaptive_quad: tolerance not met within budget");
  return r.value;
}

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// E_1 for 0 < x <= 1:  -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k/(k k!)
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 80; ++k) {
    term *= -x / k;
    const double add = -term / k;
    sum += add;
    if (std::fabs(add) <= std::fabs(sum) * 1e-17) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// E_1 for x > 1 via the continued fraction
//   E_1(x) = e^{-x} / (x + 1/(1 + 1/(x + 2/(1 + 2/(x + ...)))))
// evaluated with the modified Lentz algorithm.
double e1_contfrac(double x) {
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 200; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= 1e-16) break;
  }
  return h * std::exp(-x);
}

double en_quadrature(int n, double x) {
  // integrand decays like e^{-xt} t^{-n}; the [1,inf) transform handles it
  auto f = [n, x](double t) {
    return std::exp(-x * t - static_cast<double>(n) * std::log(t));
  };
  return integrate_or_throw(f, 1.0, std::numeric_limits<double>::infinity(),
                            0.0, 1e-13, 6000);
}

// Relative roundoff amplification of the upward recurrence
// E_{k+1} = (e^{-x} - x E_k)/k carried from E_1 to E_n, roughly
// x^{n-1}/(n-1)! * (x+n)/(x+1). Above ~10 the recurrence result is no
// longer trustworthy at the 1e-12 level.
double recurrence_amplification(int n, double x) {
  const double lg = (n - 1) * std::log(x) - std::lgamma(static_cast<double>(n));
  return std::exp(lg) * (x + n) / (x + 1.0);
}

}  // namespace

ExpIntEval exp_integral_eval(int n, double x) {
  if (n < 0) throw ValidationError("exp_integral: order must be >= 0");
  if (x < 0.0 || std::isnan(x))
    throw std::domain_error("exp_integral: x must be nonnegative");
  if (x == 0.0) {
    if (n <= 1) throw std::domain_error("exp_integral: E_n(0) diverges for n <= 1");
    return {n, x, 1.0 / (n - 1.0), ExpIntMethod::closed_form};
  }

  if (n == 0) return {n, x, std::exp(-x) / x, ExpIntMethod::closed_form};
  if (n == 1) {
    const double v = x <= 1.0 ? e1_series(x) : e1_contfrac(x);
    return {n, x, v, ExpIntMethod::closed_form};
  }

  // n >= 2. The recurrence loses digits through the k ~ x region, so it is
  // used only when the predicted amplification is negligible; x < n/2 goes
  // straight to quadrature.
  if (x >= 0.5 * n && recurrence_amplification(n, x) < 10.0) {
    const double emx = std::exp(-x);
    double e = x <= 1.0 ? e1_series(x) : e1_contfrac(x);
    for (int k = 1; k < n; ++k) e = (emx - x * e) / k;
    return {n, x, e, ExpIntMethod::recurrence};
  }
  return {n, x, en_quadrature(n, x), ExpIntMethod::quadrature};
}

double exp_integral(int n, double x) { return exp_integral_eval(n, x).value; }

double exp_integral_asymptotic(int n, double x, int num_terms) {
  if (x <= 0.0) throw std::domain_error("exp_integral_asymptotic: x must be > 0");
  if (num_terms < 1)
    throw ValidationError("exp_integral_asymptotic: num_terms must be >= 1");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < num_terms; ++k) {
    term *= -static_cast<double>(n + k - 1) / x;
    sum += term;
  }
  return std::exp(-x) / x * sum;
}

}  // namespace swiptrelay
