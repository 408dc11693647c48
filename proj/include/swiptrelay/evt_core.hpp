#ifndef SWIPTRELAY_EVT_CORE_HPP
#define SWIPTRELAY_EVT_CORE_HPP

#include <span>
#include <string>
#include <vector>

#include "swiptrelay/scenario.hpp"

namespace swiptrelay {

// Which of the four link-parameter layouts a scenario falls into.
enum class LinkCase { all_iid, first_hop_iid, second_hop_iid, fully_inid };

std::string to_string(LinkCase c);

// all theta within relative theta_tol and all nu within relative nu_tol ->
// all_iid; only theta uniform -> first_hop_iid; only nu uniform ->
// second_hop_iid; otherwise fully_inid.
LinkCase classify_case(const std::vector<LinkParams>& links,
                       double theta_tol = 1e-9, double nu_tol = 1e-9);

// Uniform-width quantization of the theta values. Occupied bins are
// represented by the mean of their members (a midpoint stands in for empty
// bins), so exactly repeated theta values are represented exactly.
struct ThetaBinning {
  std::vector<double> edges;       // num_bins + 1 ascending edges
  std::vector<double> values;      // representative theta per bin
  std::vector<int> counts;         // members per bin; sums to L
  std::vector<int> assignment;     // link index -> bin index
};

ThetaBinning bin_thetas(const std::vector<LinkParams>& links, int num_bins);

// Finite-L surrogate of the dominant-rate selection: scanning bins by
// ascending theta, accept the first value beta whose count satisfies
// R >= eps1 * L and for which every higher bin i obeys
// R_i * R^(-theta_i/beta) <= eps2. When nothing passes, fall back to the
// best-count smallest-theta bin and mark the choice heuristic; the flag is
// also set when a smaller-theta bin was skipped for failing the count rule.
struct BetaSelection {
  double beta = 0.0;
  int count = 0;       // R for the selected bin
  int bin_index = -1;
  bool heuristic = false;
};

BetaSelection select_beta(const ThetaBinning& binning, double eps1 = 0.05,
                          double eps2 = 0.1);

// Affine normalization making (max - b)/a converge to the standard Gumbel:
//   all_iid:        a = 1/theta, b = (log L - nu)/theta
//   first_hop_iid:  a = 1/theta, b = log(sum_l e^{-nu_l})/theta
//   second_hop_iid: a = 1/beta,  b = (log R - nu)/beta
//   fully_inid:     a = 1/beta,  b = log(sum_{l in beta bin} e^{-nu_l})/beta
struct NormalizingConstants {
  double a = 1.0;
  double b = 0.0;
  double beta = 0.0;
  LinkCase case_tag = LinkCase::all_iid;
  bool heuristic_beta = false;
};

// binning is required for the two varying-theta cases.
NormalizingConstants normalizing_constants(
    const std::vector<LinkParams>& links, LinkCase case_tag,
    const ThetaBinning* binning = nullptr, double eps1 = 0.05,
    double eps2 = 0.1);

// u(gamma) = sum_l exp(-theta_l gamma - nu_l), compensated accumulation.
double u_of_gamma(const std::vector<LinkParams>& links, double gamma);

// Large-L approximation of the maximum e2e SNR law:
//   CDF(gamma) = exp(-u(gamma))
//   PDF(gamma) = exp(-u(gamma)) * sum_l theta_l exp(-theta_l gamma - nu_l)
double approx_max_cdf(const std::vector<LinkParams>& links, double gamma);
double approx_max_pdf(const std::vector<LinkParams>& links, double gamma);

// Elementwise (x - b)/a.
std::vector<double> normalized_max_samples(std::span<const double> max_samples,
                                           const NormalizingConstants& nc);

// exp(-exp(-z)).
double gumbel_cdf(double z);

}  // namespace swiptrelay

#endif
