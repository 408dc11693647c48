#include "swiptrelay/exact_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "swiptrelay/csv.hpp"
#include "swiptrelay/errors.hpp"
#include "swiptrelay/special_fn.hpp"

namespace swiptrelay {

std::string to_string(CdfProvenance p) {
  switch (p) {
    case CdfProvenance::lemma1_series: return "lemma1_series";
    case CdfProvenance::lemma1_quadrature: return "lemma1_quadrature";
    case CdfProvenance::exact_product: return "exact_product";
    case CdfProvenance::empirical: return "empirical";
    case CdfProvenance::evt_approx: return "evt_approx";
  }
  return "unknown";
}

namespace {

void check_link_domain(double theta, double nu, double gamma) {
  if (!(theta > 0.0)) throw std::domain_error("link_cdf: theta must be > 0");
  if (nu < 0.0 || std::isnan(nu)) throw std::domain_error("link_cdf: nu must be >= 0");
  if (gamma < 0.0 || std::isnan(gamma))
    throw std::domain_error("link_cdf: gamma must be >= 0");
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double link_cdf_series(double theta, double nu, double gamma, double tol) {
  check_link_domain(theta, nu, gamma);
  if (gamma == 0.0) return 0.0;
  if (std::isinf(nu)) return 1.0;  // second hop pinned at zero
  const double x = theta * gamma;
  if (x > 700.0) return 1.0;                   // e^{-x} underflows
  if (nu == 0.0) return -std::expm1(-x);       // only k = 0 survives
  if (nu * gamma > 30.0) return link_cdf_quadrature(theta, nu, gamma);

  // E_k generated by the upward recurrence; the nu^k/k! weights keep the
  // accumulated absolute error at the 1e-13 level over the series range.
  const double emx = std::exp(-x);
  KahanSum s;
  s.add(emx / theta);  // k = 0: gamma E_0(theta gamma)
  double ek = exp_integral(1, x);
  double coeff = 1.0;  // (-nu)^k / k!
  bool converged = false;
  for (int k = 1; k <= 200; ++k) {
    coeff *= -nu / k;
    const double term = coeff * gamma * ek;
    s.add(term);
    // alternating and decreasing once k >= nu: first omitted term bounds the tail
    if (k >= nu && theta * std::fabs(term) <= tol) {
      converged = true;
      break;
    }
    ek = (emx - x * ek) / k;  // E_{k+1}
  }
  if (!converged)
    throw SeriesError("link_cdf_series: no convergence in 200 terms");
  const double f = 1.0 - theta * s.sum;
  return std::min(1.0, std::max(0.0, f));
}

double link_cdf_quadrature(double theta, double nu, double gamma) {
  check_link_domain(theta, nu, gamma);
  if (gamma == 0.0) return 0.0;
  if (std::isinf(nu)) return 1.0;
  if (theta * gamma > 700.0) return 1.0;
  const double ng = nu * gamma;
  auto integrand = [theta, ng](double x) {
    return std::exp(-theta * x - ng / x);
  };
  const double integral =
      integrate_or_throw(integrand, gamma,
                         std::numeric_limits<double>::infinity(),
                         1e-12 / theta, 1e-13, 6000);
  const double f = 1.0 - theta * integral;
  return std::min(1.0, std::max(0.0, f));
}

double exact_max_cdf(const std::vector<LinkParams>& links, double gamma) {
  if (links.empty()) throw ValidationError("exact_max_cdf: no links");
  KahanSum log_sum;
  for (const LinkParams& l : links) {
    const double f = link_cdf_series(l.theta, l.nu, gamma);
    if (f <= 0.0) return 0.0;
    log_sum.add(std::log(f));
  }
  return std::exp(log_sum.sum);
}

CdfCurve empirical_cdf(std::span<const double> samples,
                       std::vector<double> grid) {
  if (samples.empty()) throw ValidationError("empirical_cdf: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  CdfCurve curve;
  curve.provenance = CdfProvenance::empirical;
  curve.grid = std::move(grid);
  curve.values.reserve(curve.grid.size());
  const double n = static_cast<double>(sorted.size());
  for (double g : curve.grid) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), g);
    curve.values.push_back(static_cast<double>(it - sorted.begin()) / n);
  }
  return curve;
}

CdfCurve empirical_cdf(const SampleBatch& batch, std::vector<double> grid) {
  return empirical_cdf(std::span<const double>(batch.max_samples),
                       std::move(grid));
}

CdfCurve empirical_cdf(const SampleBatch& batch, std::size_t link,
                       std::vector<double> grid) {
  if (link >= batch.per_link.size())
    throw ValidationError("empirical_cdf: link index out of range");
  return empirical_cdf(std::span<const double>(batch.per_link[link]),
                       std::move(grid));
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (points < 2) throw ValidationError("geometric_grid: need >= 2 points");
  if (!(lo > 0.0) || !(hi > lo))
    throw ValidationError("geometric_grid: need 0 < lo < hi");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double ratio = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo * std::exp(ratio * i);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2) throw ValidationError("linear_grid: need >= 2 points");
  if (!(hi > lo)) throw ValidationError("linear_grid: need lo < hi");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo + step * i;
  grid.back() = hi;
  return grid;
}

double ks_statistic_vs_cdf(std::span<const double> samples,
                           const std::function<double(double)>& cdf) {
  if (samples.empty()) throw ValidationError("ks_statistic_vs_cdf: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    sup = std::max(sup, std::fabs(f - static_cast<double>(i) / n));
    sup = std::max(sup, std::fabs(f - static_cast<double>(i + 1) / n));
  }
  return sup;
}

std::vector<double> quantile_grid(std::span<const double> samples,
                                  int points) {
  if (samples.empty()) throw ValidationError("quantile_grid: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&sorted](double p) {
    const double idx = p * (sorted.size() - 1);
    return sorted[static_cast<std::size_t>(idx)];
  };
  double lo = quantile(0.001);
  double hi = quantile(0.999);
  if (!(hi > 0.0)) throw ValidationError("quantile_grid: all samples <= 0");
  lo = std::max(lo, hi * 1e-12);
  if (lo >= hi) lo = hi * 0.5;
  return geometric_grid(lo, hi, points);
}

namespace {

double interpolate(const CdfCurve& c, double x) {
  const auto& g = c.grid;
  if (x <= g.front()) return c.values.front();
  if (x >= g.back()) return c.values.back();
  const auto it = std::upper_bound(g.begin(), g.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - g.begin());
  const double w = (x - g[i - 1]) / (g[i] - g[i - 1]);
  return c.values[i - 1] + w * (c.values[i] - c.values[i - 1]);
}

}  // namespace

double ks_distance(const CdfCurve& a, const CdfCurve& b) {
  if (a.grid.empty() || b.grid.empty())
    throw ValidationError("ks_distance: empty curve");
  double sup = 0.0;
  if (a.grid == b.grid) {
    for (std::size_t i = 0; i < a.grid.size(); ++i)
      sup = std::max(sup, std::fabs(a.values[i] - b.values[i]));
    return sup;
  }
  std::vector<double> merged;
  merged.reserve(a.grid.size() + b.grid.size());
  std::merge(a.grid.begin(), a.grid.end(), b.grid.begin(), b.grid.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  for (double x : merged)
    sup = std::max(sup, std::fabs(interpolate(a, x) - interpolate(b, x)));
  return sup;
}

std::vector<LinkParams> mean_theta_iid_baseline(
    const std::vector<LinkParams>& links) {
  if (links.empty())
    throw ValidationError("mean_theta_iid_baseline: no links");
  double mean = 0.0;
  for (const LinkParams& l : links) mean += l.theta;
  mean /= static_cast<double>(links.size());
  std::vector<LinkParams> out = links;
  for (LinkParams& l : out) l.theta = mean;
  return out;
}

void write_csv(const CdfCurve& curve, std::ostream& os) {
  os << "gamma,value,provenance\n";
  const std::string prov = to_string(curve.provenance);
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    os << format_double(curve.grid[i]) << ',' << format_double(curve.values[i])
       << ',' << prov << '\n';
}

}  // namespace swiptrelay
