#ifndef SWIPTRELAY_SPECIAL_FN_HPP
#define SWIPTRELAY_SPECIAL_FN_HPP

#include <cstddef>
#include <functional>
#include <limits>

namespace swiptrelay {

// Result of an adaptive quadrature. `error_bound` is a conservative estimate
// of the absolute error of `value`; `converged` is false when the requested
// tolerance could not be met within the interval budget.
struct QuadResult {
  double value = 0.0;
  double error_bound = std::numeric_limits<double>::infinity();
  bool converged = false;
  std::size_t evaluations = 0;
};

// Adaptive Gauss-Kronrod (7,15) integration of f over [a,b]. Pass
// b = +infinity for an improper upper limit; it is mapped onto [0,1) with
// x = a + t/(1-t). Subdivision stops once the summed error estimate drops
// below max(abs_tol, rel_tol*|integral|) or the interval budget runs out.
QuadResult adaptive_quad(const std::function<double(double)>& f, double a,
                         double b, double abs_tol = 1e-12,
                         double rel_tol = 1e-12,
                         std::size_t max_intervals = 4000);

// Same, but throws QuadratureError instead of returning converged = false.
double integrate_or_throw(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-12,
                          double rel_tol = 1e-12,
                          std::size_t max_intervals = 4000);

// How an exponential-integral value was obtained.
enum class ExpIntMethod { closed_form, recurrence, quadrature, asymptotic };

struct ExpIntEval {
  int order = 0;        // n
  double argument = 0;  // x
  double value = 0;
  ExpIntMethod method = ExpIntMethod::closed_form;
};

//             inf
//              /   -xt  -n
//    E (x) =  |   e    t   dt ,   x > 0  (x = 0 allowed for n >= 2)
//     n       /
//              1
//
// Relative accuracy ~1e-12 over n in [0,60], x in [1e-6, 50].
// Dispatch: E_0 closed form, E_1 series/continued fraction, n >= 2 upward
// recurrence from E_1 with a quadrature fallback whenever the predicted
// roundoff amplification of the recurrence would spoil the result.
double exp_integral(int n, double x);

// exp_integral plus the method tag actually used.
ExpIntEval exp_integral_eval(int n, double x);

// Truncated large-x expansion
//
//   E_n(x) ~ e^{-x}/x * ( 1 - n/x + n(n+1)/x^2 - ... )   (num_terms terms)
//
// Divergent for fixed x; useful only while the terms still shrink.
double exp_integral_asymptotic(int n, double x, int num_terms);

}  // namespace swiptrelay

#endif
