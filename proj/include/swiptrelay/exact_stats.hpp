#ifndef SWIPTRELAY_EXACT_STATS_HPP
#define SWIPTRELAY_EXACT_STATS_HPP

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swiptrelay/scenario.hpp"

namespace swiptrelay {

enum class CdfProvenance {
  lemma1_series,
  lemma1_quadrature,
  exact_product,
  empirical,
  evt_approx
};

std::string to_string(CdfProvenance p);

// A CDF sampled on a strictly increasing gamma grid.
struct CdfCurve {
  std::vector<double> grid;
  std::vector<double> values;
  CdfProvenance provenance = CdfProvenance::empirical;
};

// Per-link e2e SNR CDF, series form:
//
//   F(g) = 1 - theta * sum_{k>=0} (-nu)^k/k! * g E_k(theta g)
//
// The k = 0 term is e^{-theta g}/theta (finite at g = 0). Terms are
// accumulated with compensated summation and truncated once the alternating
// tail bound drops below tol; for nu*g > 30 the integral form is used
// instead. Throws SeriesError if 200 terms do not converge.
double link_cdf_series(double theta, double nu, double gamma,
                       double tol = 1e-12);

// Same CDF from the pre-series integral form
//
//   F(g) = 1 - theta * int_g^inf exp(-theta x - nu g / x) dx
//
// via adaptive quadrature (absolute error <= 1e-11). This is the in-repo
// oracle for link_cdf_series.
double link_cdf_quadrature(double theta, double nu, double gamma);

// Exact finite-L maximum CDF: prod_l F_l(gamma), accumulated in log space.
double exact_max_cdf(const std::vector<LinkParams>& links, double gamma);

// Right-continuous empirical CDF of the given samples on the grid.
CdfCurve empirical_cdf(std::span<const double> samples,
                       std::vector<double> grid);
// Convenience overloads: the batch maximum, or one link's samples.
CdfCurve empirical_cdf(const SampleBatch& batch, std::vector<double> grid);
CdfCurve empirical_cdf(const SampleBatch& batch, std::size_t link,
                       std::vector<double> grid);

// Geometric grid of `points` values on [lo, hi] (lo > 0).
std::vector<double> geometric_grid(double lo, double hi, int points);

// Evenly spaced grid (for quantities that may be negative, e.g. normalized
// maxima).
std::vector<double> linear_grid(double lo, double hi, int points);

// Geometric grid spanning the 0.1%..99.9% quantiles of the samples.
std::vector<double> quantile_grid(std::span<const double> samples, int points);

// Exact one-sample Kolmogorov-Smirnov statistic of the samples against a
// reference CDF (no grid discretization).
double ks_statistic_vs_cdf(std::span<const double> samples,
                           const std::function<double(double)>& cdf);

// sup |a - b|. Curves on the same grid are compared pointwise; otherwise
// both are linearly interpolated onto the merged grid (constant beyond the
// ends).
double ks_distance(const CdfCurve& a, const CdfCurve& b);

// The i.i.d. pitfall baseline: every theta replaced by the plain mean,
// nu kept per link.
std::vector<LinkParams> mean_theta_iid_baseline(
    const std::vector<LinkParams>& links);

// CSV export: "gamma,value,provenance" rows.
void write_csv(const CdfCurve& curve, std::ostream& os);

}  // namespace swiptrelay

#endif
