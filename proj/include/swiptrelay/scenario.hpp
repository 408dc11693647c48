#ifndef SWIPTRELAY_SCENARIO_HPP
#define SWIPTRELAY_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace swiptrelay {

// Relay distances: either an explicit list or i.i.d. uniform draws from
// [min,max] with a dedicated geometry seed. Explicit lists shorter than the
// requested relay count are tiled cyclically, which keeps scenario families
// (same pattern, growing L) well defined.
struct DistanceSpec {
  bool random = false;
  std::vector<double> values;  // explicit form
  double min = 0.0, max = 0.0;
  std::uint64_t seed = 0;

  static DistanceSpec explicit_list(std::vector<double> v);
  static DistanceSpec uniform(double lo, double hi, std::uint64_t seed);
};

// Full physical parameterization of the network. gamma_s is kept in dBm as
// configured; gamma_s_linear() performs the one conversion point. All other
// quantities are linear. Rates (not scales) are the exponential convention
// throughout: Exp(r) has CDF 1 - exp(-r y) and mean 1/r.
struct ScenarioConfig {
  int num_relays = 1;           // L
  DistanceSpec d1;              // source -> relay
  DistanceSpec d2;              // relay -> destination
  double path_loss_exponent = 2.7;
  double gamma_s_dbm = 25.0;    // source SNR P_s/sigma^2, in dBm
  double noise_power = 1.0;     // sigma^2, common across relays and destination
  double eh_efficiency = 0.9;   // eta
  double ts_factor = 0.3;       // alpha
  double ps_factor = 0.4;       // lambda
  double slot_length = 1.0;     // T; carried but cancels in every computation

  double gamma_s_linear() const;
};

double dbm_to_linear(double dbm);
double linear_to_dbm(double linear);

// Per-relay canonical parameters. theta is the first-hop exponential rate;
// nu the second-hop multiplicative exponential rate. nu = +inf encodes the
// no-harvested-power limit (alpha = lambda = 0), nu = 0 the infinite-power
// limit (test-only).
struct LinkParams {
  double theta = 1.0;
  double nu = 0.0;
  int link_index = 0;
};

// Materialize a distance spec to exactly n values. Random specs are
// prefix-stable: entry i depends only on (seed, salt, i), so a family of
// growing scenarios shares its leading relays. build_links salts d1 and d2
// differently, so one shared seed still gives independent hop geometries.
std::vector<double> resolve_distances(const DistanceSpec& spec, int n,
                                      std::uint64_t salt = 0);

//   theta_l = d1_l^zeta / ((1-lambda) gamma_s)
//   nu_l    = (1-lambda)(1-alpha) d2_l^zeta / (eta (2 alpha + lambda(1-alpha)))
// (common noise power; it cancels against P_s through gamma_s)
std::vector<LinkParams> build_links(const ScenarioConfig& config);

// Seeded Monte Carlo draws of the per-relay e2e SNR
//   sample = g1 * min(1, f2),  g1 ~ Exp(theta), f2 ~ Exp(nu)
// and the per-realization maximum. Links use disjoint substreams, so the
// batch is independent of evaluation order.
struct SampleBatch {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<std::vector<double>> per_link;  // [L][n]
  std::vector<double> max_samples;            // [n]
};

SampleBatch sample_batch(const std::vector<LinkParams>& links, std::size_t n,
                         std::uint64_t seed);

// Maxima only; identical values to sample_batch(...).max_samples but without
// materializing the per-link matrix (large-L experiments).
std::vector<double> sample_max(const std::vector<LinkParams>& links,
                               std::size_t n, std::uint64_t seed);

// Strict JSON loading; the key set is exactly
//   L, d1, d2, zeta, gamma_s_dbm, sigma2, eta, alpha, lambda, T
// with d1/d2 either arrays or {min,max,seed} objects. Unknown keys fail.
ScenarioConfig load_config(const std::string& json_text);
ScenarioConfig load_config_file(const std::string& path);
std::string config_to_json(const ScenarioConfig& config);

// Named invariant violations ("ts_factor_at_unity", "nonpositive_distance",
// ...) for a parsed config; empty means valid. load_config calls this and
// throws ValidationError on any violation.
std::vector<std::string> config_violations(const ScenarioConfig& config);

// Schema check plus invariant check of raw JSON text without loading;
// collects every violation instead of stopping at the first.
std::vector<std::string> validate_config_text(const std::string& json_text);

// FNV-1a over the canonical JSON form; stamped into every output file.
std::uint64_t config_hash(const ScenarioConfig& config);

}  // namespace swiptrelay

#endif
