#include "swiptrelay/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "swiptrelay/csv.hpp"
#include "swiptrelay/errors.hpp"
#include "swiptrelay/evt_core.hpp"
#include "swiptrelay/exact_stats.hpp"
#include "swiptrelay/metrics.hpp"
#include "swiptrelay/optimize.hpp"
#include "swiptrelay/ordering.hpp"
#include "swiptrelay/rng.hpp"

namespace swiptrelay {

using nlohmann::json;
namespace fs = std::filesystem;

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "cdf_convergence",  "cdf_compare",      "iid_pitfall",
      "capacity_sweep",   "outage_surface",   "ordering_check",
      "optimize_outage",  "optimize_ergodic", "optimize_throughput",
      "protocol_compare"};
  return names;
}

namespace {

bool known_experiment(const std::string& name) {
  const auto& names = experiment_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

json parse_grid(const ExperimentManifest& m,
                std::initializer_list<const char*> allowed) {
  json g = json::parse(m.grid_json);
  for (const auto& item : g.items()) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || item.key() == k;
    if (!ok)
      throw ValidationError("manifest: unknown grid key '" + item.key() +
                            "' for " + m.experiment);
  }
  return g;
}

double num_or(const json& g, const char* key, double fallback) {
  if (!g.contains(key)) return fallback;
  if (!g.at(key).is_number())
    throw ValidationError(std::string("manifest: grid key ") + key +
                          " must be a number");
  return g.at(key).get<double>();
}

long long int_or(const json& g, const char* key, long long fallback) {
  if (!g.contains(key)) return fallback;
  if (!g.at(key).is_number_integer())
    throw ValidationError(std::string("manifest: grid key ") + key +
                          " must be an integer");
  return g.at(key).get<long long>();
}

std::vector<double> vec_or(const json& g, const char* key,
                           std::vector<double> fallback) {
  if (!g.contains(key)) return fallback;
  if (!g.at(key).is_array())
    throw ValidationError(std::string("manifest: grid key ") + key +
                          " must be an array");
  std::vector<double> out;
  for (const auto& v : g.at(key)) out.push_back(v.get<double>());
  if (out.empty())
    throw ValidationError(std::string("manifest: grid key ") + key +
                          " must be nonempty");
  return out;
}

std::vector<double> default_factor_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 9; ++i) g.push_back(0.1 * i);
  return g;
}

struct RunContext {
  const ExperimentManifest& m;
  fs::path dir;
  std::string hash_text = "none";
  ScenarioConfig scenario;
  bool has_scenario = false;

  explicit RunContext(const ExperimentManifest& manifest) : m(manifest) {
    dir = fs::path(m.output_dir);
    fs::create_directories(dir);
    if (m.scenario) {
      scenario = *m.scenario;
      if (m.has_seeds) {
        if (scenario.d1.random) scenario.d1.seed = m.geometry_seed;
        if (scenario.d2.random) scenario.d2.seed = m.geometry_seed;
      }
      has_scenario = true;
      std::ostringstream hex;
      hex << "0x" << std::hex << config_hash(scenario);
      hash_text = hex.str();
    }
  }

  ScenarioConfig require_scenario() const {
    if (!has_scenario)
      throw ValidationError("manifest: experiment " + m.experiment +
                            " requires a scenario");
    return scenario;
  }

  void require_mc() const {
    if (!m.has_seeds)
      throw ValidationError(
          "manifest: seeds required for Monte Carlo experiments");
    if (m.mc_samples < 1)
      throw ValidationError("manifest: monte_carlo_n must be >= 1");
  }

  std::ofstream open_csv(const std::string& name) const {
    const fs::path p = dir / name;
    std::ofstream os(p, std::ios::binary);
    if (!os) throw ValidationError("cannot write " + p.string());
    os << "# experiment=" << m.experiment << "\n";
    os << "# config_hash=" << hash_text << "\n";
    os << "# geometry_seed=" << m.geometry_seed
       << " sampling_seed=" << m.sampling_seed
       << " mc_samples=" << m.mc_samples << "\n";
    return os;
  }
};

SnrRegime regime_of(double gamma_s_dbm) {
  if (gamma_s_dbm < 10.0) return SnrRegime::low;
  if (gamma_s_dbm > 30.0) return SnrRegime::high;
  return SnrRegime::mid;
}

// --- experiments ----------------------------------------------------------

void run_cdf_convergence(const RunContext& ctx) {
  ctx.require_mc();
  const json grid =
      parse_grid(ctx.m, {"l_values", "grid_points", "theta_bins"});
  const std::vector<double> l_values =
      vec_or(grid, "l_values", {10.0, 60.0, 200.0});
  const int points = static_cast<int>(int_or(grid, "grid_points", 400));
  const int bins = static_cast<int>(int_or(grid, "theta_bins", 8));

  std::ofstream summary = ctx.open_csv("summary.csv");
  summary << "L,case,beta,a_L,b_L,heuristic_beta,ks_to_gumbel\n";

  for (double ld : l_values) {
    const int L = static_cast<int>(ld);
    ScenarioConfig cfg = ctx.require_scenario();
    cfg.num_relays = L;
    const auto links = build_links(cfg);
    const auto maxima =
        sample_max(links, static_cast<std::size_t>(ctx.m.mc_samples),
                   ctx.m.sampling_seed);
    const LinkCase tag = classify_case(links);
    const ThetaBinning binning = bin_thetas(links, bins);
    const NormalizingConstants nc =
        normalizing_constants(links, tag, &binning);
    const auto z = normalized_max_samples(maxima, nc);
    const double ks = ks_statistic_vs_cdf(z, gumbel_cdf);

    auto zs = z;
    std::sort(zs.begin(), zs.end());
    const double lo = zs[static_cast<std::size_t>(0.001 * (zs.size() - 1))];
    const double hi = zs[static_cast<std::size_t>(0.999 * (zs.size() - 1))];
    const auto zgrid = linear_grid(lo, hi, points);
    const CdfCurve emp = empirical_cdf(std::span<const double>(z), zgrid);

    std::ofstream curve = ctx.open_csv("cdf_convergence_L" +
                                       std::to_string(L) + ".csv");
    curve << "z,empirical,gumbel\n";
    for (std::size_t i = 0; i < zgrid.size(); ++i)
      curve << format_double(zgrid[i]) << ',' << format_double(emp.values[i])
            << ',' << format_double(gumbel_cdf(zgrid[i])) << '\n';

    summary << L << ',' << to_string(tag) << ',' << format_double(nc.beta)
            << ',' << format_double(nc.a) << ',' << format_double(nc.b) << ','
            << (nc.heuristic_beta ? "true" : "false") << ','
            << format_double(ks) << '\n';
  }
}

void run_cdf_compare(const RunContext& ctx) {
  ctx.require_mc();
  const json grid = parse_grid(ctx.m, {"grid_points"});
  const int points = static_cast<int>(int_or(grid, "grid_points", 400));

  const ScenarioConfig cfg = ctx.require_scenario();
  const auto links = build_links(cfg);
  const auto maxima =
      sample_max(links, static_cast<std::size_t>(ctx.m.mc_samples),
                 ctx.m.sampling_seed);
  const auto g = quantile_grid(maxima, points);
  const CdfCurve emp = empirical_cdf(std::span<const double>(maxima), g);

  CdfCurve approx{g, {}, CdfProvenance::evt_approx};
  CdfCurve exact{g, {}, CdfProvenance::exact_product};
  for (double x : g) {
    approx.values.push_back(approx_max_cdf(links, x));
    exact.values.push_back(exact_max_cdf(links, x));
  }

  std::ofstream curves = ctx.open_csv("cdf_compare_curves.csv");
  curves << "gamma,empirical,evt_approx,exact_product\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    curves << format_double(g[i]) << ',' << format_double(emp.values[i]) << ','
           << format_double(approx.values[i]) << ','
           << format_double(exact.values[i]) << '\n';

  std::ofstream summary = ctx.open_csv("summary.csv");
  summary << "L,ks_approx_vs_empirical,ks_exact_vs_empirical,"
             "ks_approx_vs_exact\n";
  summary << cfg.num_relays << ',' << format_double(ks_distance(approx, emp))
          << ',' << format_double(ks_distance(exact, emp)) << ','
          << format_double(ks_distance(approx, exact)) << '\n';
}

void run_iid_pitfall(const RunContext& ctx) {
  ctx.require_mc();
  const json grid = parse_grid(
      ctx.m, {"l", "nu", "theta_lo", "theta_hi", "grid_points"});
  const int L = static_cast<int>(int_or(grid, "l", 64));
  const double nu = num_or(grid, "nu", 0.2);
  const double theta_lo = num_or(grid, "theta_lo", 1.0);
  const double theta_hi = num_or(grid, "theta_hi", 3.0);
  const int points = static_cast<int>(int_or(grid, "grid_points", 400));

  std::ofstream summary = ctx.open_csv("summary.csv");
  summary << "mode,theta_mean,ks_iid_baseline,ks_inid_approx,ks_ratio\n";

  const char* modes[] = {"half", "uniform"};
  for (int mode = 0; mode < 2; ++mode) {
    std::vector<LinkParams> links(static_cast<std::size_t>(L));
    CounterRng theta_rng(ctx.m.geometry_seed, 0xA11);
    for (int l = 0; l < L; ++l) {
      links[l].link_index = l;
      links[l].nu = nu;
      links[l].theta =
          mode == 0 ? (l < L / 2 ? theta_lo : theta_hi)
                    : theta_lo + (theta_hi - theta_lo) * theta_rng.uniform01_at(l);
    }
    const auto maxima =
        sample_max(links, static_cast<std::size_t>(ctx.m.mc_samples),
                   ctx.m.sampling_seed + static_cast<std::uint64_t>(mode));
    const auto baseline = mean_theta_iid_baseline(links);

    const auto g = quantile_grid(maxima, points);
    const CdfCurve emp = empirical_cdf(std::span<const double>(maxima), g);
    CdfCurve base{g, {}, CdfProvenance::evt_approx};
    CdfCurve inid{g, {}, CdfProvenance::evt_approx};
    for (double x : g) {
      base.values.push_back(approx_max_cdf(baseline, x));
      inid.values.push_back(approx_max_cdf(links, x));
    }
    const double ks_base = ks_distance(emp, base);
    const double ks_inid = ks_distance(emp, inid);

    std::ofstream curve =
        ctx.open_csv(std::string("pitfall_") + modes[mode] + ".csv");
    curve << "gamma,empirical,iid_baseline,inid_approx\n";
    for (std::size_t i = 0; i < g.size(); ++i)
      curve << format_double(g[i]) << ',' << format_double(emp.values[i])
            << ',' << format_double(base.values[i]) << ','
            << format_double(inid.values[i]) << '\n';

    summary << modes[mode] << ',' << format_double(baseline.front().theta)
            << ',' << format_double(ks_base) << ',' << format_double(ks_inid)
            << ',' << format_double(ks_base / ks_inid) << '\n';
  }
}

void run_capacity_sweep(const RunContext& ctx) {
  ctx.require_mc();
  const json grid = parse_grid(ctx.m, {"l_values", "gamma_th_db"});
  const std::vector<double> l_values =
      vec_or(grid, "l_values", {5.0, 10.0, 20.0, 40.0, 60.0});
  const double gamma_th = dbm_to_linear(num_or(grid, "gamma_th_db", 1.0));

  std::ofstream summary = ctx.open_csv("summary.csv");
  summary << "L,ergodic_capacity,mc_capacity,relative_error,throughput,"
             "outage_probability\n";

  for (double ld : l_values) {
    ScenarioConfig cfg = ctx.require_scenario();
    cfg.num_relays = static_cast<int>(ld);
    const auto links = build_links(cfg);
    const double c_theory = ergodic_capacity(links);
    const auto maxima =
        sample_max(links, static_cast<std::size_t>(ctx.m.mc_samples),
                   ctx.m.sampling_seed);
    double acc = 0.0;
    for (double x : maxima) acc += 0.5 * std::log2(1.0 + x);
    const double c_mc = acc / static_cast<double>(maxima.size());
    summary << cfg.num_relays << ',' << format_double(c_theory) << ','
            << format_double(c_mc) << ','
            << format_double(std::fabs(c_theory - c_mc) / c_mc) << ','
            << format_double((1.0 - cfg.ts_factor) * c_theory) << ','
            << format_double(outage_probability(links, gamma_th)) << '\n';
  }
}

void run_outage_surface(const RunContext& ctx) {
  const json grid =
      parse_grid(ctx.m, {"alpha_values", "lambda_values", "gamma_th_db"});
  const auto alphas = vec_or(grid, "alpha_values", default_factor_grid());
  const auto lambdas = vec_or(grid, "lambda_values", default_factor_grid());
  const double gamma_th = dbm_to_linear(num_or(grid, "gamma_th_db", 1.0));

  std::ofstream surface = ctx.open_csv("outage_surface.csv");
  surface << "alpha,lambda,outage_probability,outage_capacity\n";
  double best_p = 2.0, best_c = -1.0;
  double argp[2] = {0, 0}, argc_[2] = {0, 0};
  for (double a : alphas) {
    for (double l : lambdas) {
      ScenarioConfig cfg = ctx.require_scenario();
      cfg.ts_factor = a;
      cfg.ps_factor = l;
      const auto links = build_links(cfg);
      const double p = outage_probability(links, gamma_th);
      const double c = outage_capacity(links, gamma_th);
      surface << format_double(a) << ',' << format_double(l) << ','
              << format_double(p) << ',' << format_double(c) << '\n';
      if (p < best_p) {
        best_p = p;
        argp[0] = a;
        argp[1] = l;
      }
      if (c > best_c) {
        best_c = c;
        argc_[0] = a;
        argc_[1] = l;
      }
    }
  }
  std::ofstream summary = ctx.open_csv("summary.csv");
  summary << "quantity,alpha,lambda,value\n";
  summary << "min_outage_probability," << format_double(argp[0]) << ','
          << format_double(argp[1]) << ',' << format_double(best_p) << '\n';
  summary << "max_outage_capacity," << format_double(argc_[0]) << ','
          << format_double(argc_[1]) << ',' << format_double(best_c) << '\n';
}

void run_ordering_check(const RunContext& ctx) {
  const json grid = parse_grid(
      ctx.m, {"grid_points", "gamma_s_step_db", "alpha_pair", "ps_pair",
              "sigma2_factor", "tolerance"});
  const int points = static_cast<int>(int_or(grid, "grid_points", 400));
  const double gs_step = num_or(grid, "gamma_s_step_db", 3.0);
  const auto alpha_pair = vec_or(grid, "alpha_pair", {0.2, 0.4});
  const auto ps_pair = vec_or(grid, "ps_pair", {0.2, 0.6});
  const double s2_factor = num_or(grid, "sigma2_factor", 2.0);
  const double tol = num_or(grid, "tolerance", 1e-9);

  const ScenarioConfig base = ctx.require_scenario();
  const SnrRegime regime = regime_of(base.gamma_s_dbm);

  std::ofstream verdicts = ctx.open_csv("verdicts.csv");
  write_csv_header_verdicts(verdicts);
  std::ofstream summary = ctx.open_csv("summary.csv");
  summary << "parameter,direction,predicted,max_violation,agrees\n";

  auto emit = [&](OrderParameter param, const ScenarioConfig& a,
                  const ScenarioConfig& b, OrderDirection predicted) {
    const auto links_a = build_links(a);
    const auto links_b = build_links(b);
    const auto g = ordering_grid(links_a, points);
    const OrderingVerdict v = check_dominance(links_a, links_b, g, tol, param);
    write_csv_row(v, verdicts);
    summary << to_string(param) << ',' << to_string(v.direction) << ','
            << to_string(predicted) << ',' << format_double(v.max_violation)
            << ',' << (v.direction == predicted ? "true" : "false") << '\n';
  };

  {  // source power up
    ScenarioConfig b = base;
    b.gamma_s_dbm += gs_step;
    emit(OrderParameter::source_power, base, b,
         predict_order(OrderParameter::source_power, 0.0, gs_step, regime));
  }
  {  // TS factor up
    ScenarioConfig a = base, b = base;
    a.ts_factor = alpha_pair[0];
    b.ts_factor = alpha_pair[1];
    emit(OrderParameter::ts_factor, a, b,
         predict_order(OrderParameter::ts_factor, alpha_pair[0],
                       alpha_pair[1], regime));
  }
  {  // noise power up at fixed P_s: gamma_s drops by the same factor
    ScenarioConfig b = base;
    b.gamma_s_dbm -= 10.0 * std::log10(s2_factor);
    emit(OrderParameter::noise_power, base, b,
         predict_order(OrderParameter::noise_power, 1.0, s2_factor, regime));
  }
  {  // PS factor pair
    ScenarioConfig a = base, b = base;
    a.ps_factor = ps_pair[0];
    b.ps_factor = ps_pair[1];
    emit(OrderParameter::ps_factor, a, b,
         predict_order(OrderParameter::ps_factor, ps_pair[0], ps_pair[1],
                       regime));
  }
}

void run_optimize_outage(const RunContext& ctx) {
  const json grid = parse_grid(
      ctx.m, {"gamma_th_db", "alpha_max", "lambda_max", "snr_pivot_dbm"});
  const double gamma_th = dbm_to_linear(num_or(grid, "gamma_th_db", 15.0));
  const double alpha_max = num_or(grid, "alpha_max", 0.9);
  const double lambda_max = num_or(grid, "lambda_max", 0.9);
  const double pivot = num_or(grid, "snr_pivot_dbm", 10.0);

  const OptimizationResult r = minimize_outage(ctx.require_scenario(),
                                               gamma_th, alpha_max,
                                               lambda_max, pivot);
  std::ofstream summary = ctx.open_csv("summary.csv");
  summary << "objective_kind,alpha_star,lambda_star,value,evaluations,"
             "converged,outage_probability\n";
  summary << to_string(r.objective_kind) << ',' << format_double(r.alpha_star)
          << ',' << format_double(r.lambda_star) << ','
          << format_double(r.objective_value) << ',' << r.evaluations << ','
          << (r.converged ? "true" : "false") << ','
          << format_double(r.outage_probability) << '\n';

  std::ofstream trace = ctx.open_csv("trace.csv");
  trace << "step,alpha,lambda,value\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i)
    trace << i << ',' << format_double(r.trace[i].alpha) << ','
          << format_double(r.trace[i].lambda) << ','
          << format_double(r.trace[i].value) << '\n';
}

void run_optimize_ergodic(const RunContext& ctx) {
  const json grid = parse_grid(ctx.m, {"alpha_max", "lambda_values"});
  const double alpha_max = num_or(grid, "alpha_max", 0.9);
  const auto lambdas = vec_or(grid, "lambda_values", default_factor_grid());

  const ScenarioConfig cfg = ctx.require_scenario();
  const OptimizationResult r = maximize_ergodic(cfg, alpha_max, lambdas);

  std::ofstream cand = ctx.open_csv("candidates.csv");
  cand << "lambda,ergodic_capacity\n";
  for (double l : lambdas) {
    ScenarioConfig c = cfg;
    c.ts_factor = alpha_max;
    c.ps_factor = l;
    cand << format_double(l) << ','
         << format_double(ergodic_capacity(build_links(c))) << '\n';
  }

  std::ofstream summary = ctx.open_csv("summary.csv");
  write_csv_header_result(summary);
  write_csv_row(r, summary);
}

void run_optimize_throughput(const RunContext& ctx) {
  const json grid = parse_grid(ctx.m, {"alpha_values", "lambda_values"});
  const auto alphas = vec_or(grid, "alpha_values", default_factor_grid());
  const auto lambdas = vec_or(grid, "lambda_values", default_factor_grid());

  const ScenarioConfig cfg = ctx.require_scenario();
  const OptimizationResult r = maximize_throughput(cfg, alphas, lambdas);

  std::ofstream surface = ctx.open_csv("throughput_surface.csv");
  surface << "alpha,lambda,throughput\n";
  for (double a : alphas) {
    for (double l : lambdas) {
      ScenarioConfig c = cfg;
      c.ts_factor = a;
      c.ps_factor = l;
      surface << format_double(a) << ',' << format_double(l) << ','
              << format_double((1.0 - a) * ergodic_capacity(build_links(c)))
              << '\n';
    }
  }

  std::ofstream summary = ctx.open_csv("summary.csv");
  write_csv_header_result(summary);
  write_csv_row(r, summary);
}

void run_protocol_compare(const RunContext& ctx) {
  const json grid = parse_grid(
      ctx.m, {"gamma_s_dbm_values", "gamma_th_db", "alpha_max", "lambda_max",
              "lambda_values"});
  std::vector<double> sweep;
  for (int s = 0; s <= 40; s += 5) sweep.push_back(s);
  sweep = vec_or(grid, "gamma_s_dbm_values", sweep);
  const double gamma_th = dbm_to_linear(num_or(grid, "gamma_th_db", 15.0));
  const double alpha_max = num_or(grid, "alpha_max", 0.9);
  const double lambda_max = num_or(grid, "lambda_max", 0.9);
  const auto lambdas = vec_or(grid, "lambda_values", default_factor_grid());

  const auto rows = protocol_comparison(ctx.require_scenario(), sweep,
                                        gamma_th, alpha_max, lambda_max,
                                        lambdas);
  std::ofstream summary = ctx.open_csv("summary.csv");
  summary << "gamma_s_dbm,outage_ts,outage_ps,outage_hybrid,"
             "lambda_out_ps,lambda_out_hybrid,"
             "capacity_ts,capacity_ps,capacity_hybrid,"
             "lambda_cap_ps,lambda_cap_hybrid\n";
  for (const ProtocolRow& r : rows)
    summary << format_double(r.gamma_s_dbm) << ','
            << format_double(r.outage_ts) << ',' << format_double(r.outage_ps)
            << ',' << format_double(r.outage_hybrid) << ','
            << format_double(r.lambda_out_ps) << ','
            << format_double(r.lambda_out_hybrid) << ','
            << format_double(r.capacity_ts) << ','
            << format_double(r.capacity_ps) << ','
            << format_double(r.capacity_hybrid) << ','
            << format_double(r.lambda_cap_ps) << ','
            << format_double(r.lambda_cap_hybrid) << '\n';
}

}  // namespace

ExperimentManifest load_manifest(const std::string& json_text,
                                 const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("manifest: JSON parse error: ") +
                          e.what());
  }
  if (!doc.is_object())
    throw ValidationError("manifest: top level must be an object");

  static const char* kKeys[] = {"experiment", "scenario", "monte_carlo_n",
                                "seeds",      "output_dir", "grid"};
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || item.key() == k;
    if (!known) throw ValidationError("manifest: unknown key " + item.key());
  }
  if (!doc.contains("experiment"))
    throw ValidationError("manifest: missing key experiment");

  ExperimentManifest m;
  m.experiment = doc.at("experiment").get<std::string>();
  if (!known_experiment(m.experiment))
    throw ValidationError("manifest: unknown experiment " + m.experiment);

  if (doc.contains("scenario")) {
    const json& s = doc.at("scenario");
    if (s.is_string()) {
      fs::path p(s.get<std::string>());
      if (p.is_relative()) p = fs::path(base_dir) / p;
      m.scenario = load_config_file(p.string());
    } else if (s.is_object()) {
      m.scenario = load_config(s.dump());
    } else {
      throw ValidationError("manifest: scenario must be a path or object");
    }
  }

  if (doc.contains("monte_carlo_n")) {
    if (!doc.at("monte_carlo_n").is_number_integer())
      throw ValidationError("manifest: monte_carlo_n must be an integer");
    m.mc_samples = doc.at("monte_carlo_n").get<long long>();
    if (m.mc_samples < 1)
      throw ValidationError("manifest: monte_carlo_n must be >= 1");
  }

  if (doc.contains("seeds")) {
    const json& s = doc.at("seeds");
    if (!s.is_object() || !s.contains("geometry") || !s.contains("sampling"))
      throw ValidationError("manifest: seeds needs {geometry, sampling}");
    for (const auto& item : s.items())
      if (item.key() != "geometry" && item.key() != "sampling")
        throw ValidationError("manifest: unknown seeds key " + item.key());
    m.has_seeds = true;
    m.geometry_seed = s.at("geometry").get<std::uint64_t>();
    m.sampling_seed = s.at("sampling").get<std::uint64_t>();
  }

  if (doc.contains("output_dir"))
    m.output_dir = doc.at("output_dir").get<std::string>();
  if (doc.contains("grid")) {
    if (!doc.at("grid").is_object())
      throw ValidationError("manifest: grid must be an object");
    m.grid_json = doc.at("grid").dump();
  }
  return m;
}

ExperimentManifest load_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("manifest: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_manifest(ss.str(), fs::path(path).parent_path().string());
}

void run_experiment(const ExperimentManifest& m) {
  if (!known_experiment(m.experiment))
    throw ValidationError("manifest: unknown experiment " + m.experiment);
  RunContext ctx(m);
  if (m.experiment == "cdf_convergence") return run_cdf_convergence(ctx);
  if (m.experiment == "cdf_compare") return run_cdf_compare(ctx);
  if (m.experiment == "iid_pitfall") return run_iid_pitfall(ctx);
  if (m.experiment == "capacity_sweep") return run_capacity_sweep(ctx);
  if (m.experiment == "outage_surface") return run_outage_surface(ctx);
  if (m.experiment == "ordering_check") return run_ordering_check(ctx);
  if (m.experiment == "optimize_outage") return run_optimize_outage(ctx);
  if (m.experiment == "optimize_ergodic") return run_optimize_ergodic(ctx);
  if (m.experiment == "optimize_throughput")
    return run_optimize_throughput(ctx);
  if (m.experiment == "protocol_compare") return run_protocol_compare(ctx);
}

}  // namespace swiptrelay
