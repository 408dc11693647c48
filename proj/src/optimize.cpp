#include "swiptrelay/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "swiptrelay/csv.hpp"
#include "swiptrelay/errors.hpp"
#include "swiptrelay/evt_core.hpp"
#include "swiptrelay/metrics.hpp"

namespace swiptrelay {

std::string to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::outage_log: return "outage_log";
    case ObjectiveKind::ergodic_capacity: return "ergodic_capacity";
    case ObjectiveKind::throughput: return "throughput";
  }
  return "unknown";
}

namespace {

// Link parameters as a function of (alpha, lambda) over a fixed geometry:
//   theta_l = c1_l / (1-lambda),  c1_l = d1_l^zeta / gamma_s
//   nu_l    = c2_l (1-lambda)(1-alpha) / (2 alpha + lambda (1-alpha)),
//   c2_l    = d2_l^zeta / eta
struct TsPsFamily {
  std::vector<double> c1, c2;

  static TsPsFamily from_config(const ScenarioConfig& cfg) {
    TsPsFamily fam;
    const auto d1 = resolve_distances(cfg.d1, cfg.num_relays, 1);
    const auto d2 = resolve_distances(cfg.d2, cfg.num_relays, 2);
    const double gs = cfg.gamma_s_linear();
    const double zeta = cfg.path_loss_exponent;
    for (int l = 0; l < cfg.num_relays; ++l) {
      fam.c1.push_back(std::pow(d1[l], zeta) / gs);
      fam.c2.push_back(std::pow(d2[l], zeta) / cfg.eh_efficiency);
    }
    return fam;
  }

  std::vector<LinkParams> links(double alpha, double lambda) const {
    std::vector<LinkParams> out(c1.size());
    const double denom = 2.0 * alpha + lambda * (1.0 - alpha);
    for (std::size_t l = 0; l < c1.size(); ++l) {
      out[l].link_index = static_cast<int>(l);
      out[l].theta = c1[l] / (1.0 - lambda);
      out[l].nu = c2[l] * (1.0 - lambda) * (1.0 - alpha) / denom;
    }
    return out;
  }

  // g(lambda) = u(gamma_th) at fixed alpha, and its lambda derivative
  double g(double alpha, double lambda, double gamma_th) const {
    const double denom = 2.0 * alpha + lambda * (1.0 - alpha);
    double sum = 0.0;
    for (std::size_t l = 0; l < c1.size(); ++l) {
      const double theta = c1[l] / (1.0 - lambda);
      const double nu = c2[l] * (1.0 - lambda) * (1.0 - alpha) / denom;
      sum += std::exp(-theta * gamma_th - nu);
    }
    return sum;
  }

  double dg(double alpha, double lambda, double gamma_th) const {
    const double denom = 2.0 * alpha + lambda * (1.0 - alpha);
    double sum = 0.0;
    for (std::size_t l = 0; l < c1.size(); ++l) {
      const double om = 1.0 - lambda;
      const double theta = c1[l] / om;
      const double nu = c2[l] * om * (1.0 - alpha) / denom;
      const double e = std::exp(-theta * gamma_th - nu);
      if (e == 0.0) continue;  // degenerate nu = +inf corner
      const double dtheta = c1[l] / (om * om);
      const double dnu = -c2[l] * (1.0 - alpha * alpha) / (denom * denom);
      sum += e * (-gamma_th * dtheta - dnu);
    }
    return sum;
  }
};

constexpr double kGradTol = 1e-10;
constexpr double kWidthTol = 1e-8;

struct ScalarSearch {
  const TsPsFamily& fam;
  double alpha;
  double gamma_th;
  int evaluations = 0;
  std::map<double, double> memo;

  double g(double lambda) {
    const auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
    ++evaluations;
    const double v = fam.g(alpha, lambda, gamma_th);
    memo.emplace(lambda, v);
    return v;
  }
  double dg(double lambda) { return fam.dg(alpha, lambda, gamma_th); }
};

struct ScalarResult {
  double lambda = 0.0;
  double value = -std::numeric_limits<double>::infinity();
  bool at_bound_inward = false;  // landed on a bound with inward gradient
};

// Maximize g over [lo, hi] from one start: bracket a sign change of g' by
// doubling steps, then shrink with regula falsi guarded by bisection.
ScalarResult ascend_once(ScalarSearch& s, double lo, double hi,
                         double start) {
  ScalarResult res;
  auto consider = [&res](double x, double v) {
    if (v > res.value) {
      res.value = v;
      res.lambda = x;
    }
  };

  double x0 = std::clamp(start, lo, hi);
  double f0 = s.g(x0);
  double d0 = s.dg(x0);
  consider(x0, f0);
  if (std::fabs(d0) <= kGradTol) return res;

  // walk in the ascent direction with doubling steps until g' flips
  const double dir = d0 > 0.0 ? 1.0 : -1.0;
  const double bound = dir > 0.0 ? hi : lo;
  double step = std::max(0.05 * (hi - lo), 1e-4);
  double xa = x0, da = d0;
  double xb = x0;
  bool bracketed = false;
  while (!bracketed) {
    xb = xa + dir * step;
    if ((dir > 0.0 && xb >= bound) || (dir < 0.0 && xb <= bound)) xb = bound;
    const double fb = s.g(xb);
    const double db = s.dg(xb);
    consider(xb, fb);
    if (db == 0.0 || (db > 0.0) != (da > 0.0)) {
      bracketed = true;
      if (db * da < 0.0) {
        // refine inside [min, max]
        double u = std::min(xa, xb), v = std::max(xa, xb);
        double du_ = u == xa ? da : db, dv_ = v == xb ? db : da;
        for (int it = 0; it < 120 && v - u > kWidthTol; ++it) {
          double m = (u * dv_ - v * du_) / (dv_ - du_);  // regula falsi
          const double third = (v - u) / 3.0;
          if (!(m > u + 0.01 * third) || !(m < v - 0.01 * third))
            m = 0.5 * (u + v);  // bisection safeguard
          const double fm = s.g(m);
          const double dm = s.dg(m);
          consider(m, fm);
          if (std::fabs(dm) <= kGradTol) break;
          if ((dm > 0.0) == (du_ > 0.0)) {
            u = m;
            du_ = dm;
          } else {
            v = m;
            dv_ = dm;
          }
        }
      }
      break;
    }
    if (xb == bound) {
      // gradient still points outward at the bound: boundary optimum
      break;
    }
    xa = xb;
    da = db;
    step *= 2.0;
  }

  const double d_at_best = s.dg(res.lambda);
  res.at_bound_inward = (res.lambda <= lo && d_at_best > kGradTol) ||
                        (res.lambda >= hi && d_at_best < -kGradTol);
  return res;
}

// Full guarded search with warm start, conditional multi-start and endpoint
// candidates. Ties go to the smaller lambda.
ScalarResult maximize_scalar(ScalarSearch& s, double lo, double hi,
                             double warm_start,
                             std::vector<TraceEntry>* trace,
                             ObjectiveKind kind) {
  auto record = [&](double lambda, double value) {
    if (!trace) return;
    const double traced =
        kind == ObjectiveKind::outage_log ? -value : value;
    if (trace->empty() ||
        (kind == ObjectiveKind::outage_log
             ? traced < trace->back().value
             : traced > trace->back().value))
      trace->push_back({s.alpha, lambda, traced});
  };

  ScalarResult best = ascend_once(s, lo, hi, warm_start);
  record(best.lambda, best.value);
  if (best.at_bound_inward) {
    for (double start : {lo, 0.5 * (lo + hi), hi}) {
      const ScalarResult r = ascend_once(s, lo, hi, start);
      if (r.value > best.value ||
          (r.value == best.value && r.lambda < best.lambda)) {
        best = r;
        record(best.lambda, best.value);
      }
    }
  }
  // endpoints are always candidates; keeps feasibility nesting exact
  for (double x : {lo, hi}) {
    const double v = s.g(x);
    if (v > best.value || (v == best.value && x < best.lambda)) {
      best.lambda = x;
      best.value = v;
      record(x, v);
    }
  }
  return best;
}

void check_bounds(double alpha_max, double lambda_max) {
  if (!(alpha_max > 0.0) || alpha_max >= 1.0)
    throw ValidationError("optimize: need 0 < alpha_max < 1");
  if (lambda_max < 0.0 || lambda_max >= 1.0)
    throw ValidationError("optimize: need 0 <= lambda_max < 1");
}

}  // namespace

OptimizationResult minimize_outage(const ScenarioConfig& config_template,
                                   double gamma_th, double alpha_max,
                                   double lambda_max, double snr_pivot_dbm) {
  check_bounds(alpha_max, lambda_max);
  if (!(gamma_th > 0.0)) throw ValidationError("minimize_outage: gamma_th > 0");

  const TsPsFamily fam = TsPsFamily::from_config(config_template);
  ScalarSearch search{fam, alpha_max, gamma_th};

  // ordering-based warm start: low SNR favors the TS-only corner
  const double warm = config_template.gamma_s_dbm < snr_pivot_dbm ? 0.0 : 0.5;

  OptimizationResult out;
  out.objective_kind = ObjectiveKind::outage_log;
  const ScalarResult best = maximize_scalar(
      search, 0.0, lambda_max, warm, &out.trace, ObjectiveKind::outage_log);
  out.alpha_star = alpha_max;
  out.lambda_star = best.lambda;
  out.objective_value = -best.value;  // log outage
  out.outage_probability = std::exp(-best.value);
  out.evaluations = search.evaluations;
  out.converged = true;
  return out;
}

OptimizationResult maximize_ergodic(const ScenarioConfig& config_template,
                                    double alpha_max,
                                    const std::vector<double>& lambda_set) {
  check_bounds(alpha_max, 0.0);
  if (lambda_set.empty())
    throw ValidationError("maximize_ergodic: empty lambda set");
  std::vector<double> lambdas = lambda_set;
  std::sort(lambdas.begin(), lambdas.end());
  for (double l : lambdas)
    if (l < 0.0 || l >= 1.0)
      throw ValidationError("maximize_ergodic: lambda outside [0,1)");

  const TsPsFamily fam = TsPsFamily::from_config(config_template);
  OptimizationResult out;
  out.objective_kind = ObjectiveKind::ergodic_capacity;
  out.alpha_star = alpha_max;
  out.objective_value = -std::numeric_limits<double>::infinity();
  for (double lambda : lambdas) {
    double c;
    try {
      c = ergodic_capacity(fam.links(alpha_max, lambda));
    } catch (const NumericalError&) {
      out.converged = false;  // abort with the partial trace
      return out;
    }
    ++out.evaluations;
    if (c > out.objective_value) {  // strict: ties keep the smaller lambda
      out.objective_value = c;
      out.lambda_star = lambda;
      out.trace.push_back({alpha_max, lambda, c});
    }
  }
  out.converged = true;
  return out;
}

OptimizationResult maximize_throughput(const ScenarioConfig& config_template,
                                       const std::vector<double>& alpha_grid,
                                       const std::vector<double>& lambda_grid) {
  if (alpha_grid.empty() || lambda_grid.empty())
    throw ValidationError("maximize_throughput: empty grid");
  std::vector<double> alphas = alpha_grid, lambdas = lambda_grid;
  std::sort(alphas.begin(), alphas.end());
  std::sort(lambdas.begin(), lambdas.end());
  for (double a : alphas)
    if (a < 0.0 || a >= 1.0)
      throw ValidationError("maximize_throughput: alpha outside [0,1)");
  for (double l : lambdas)
    if (l < 0.0 || l >= 1.0)
      throw ValidationError("maximize_throughput: lambda outside [0,1)");

  const TsPsFamily fam = TsPsFamily::from_config(config_template);
  OptimizationResult out;
  out.objective_kind = ObjectiveKind::throughput;
  out.objective_value = -std::numeric_limits<double>::infinity();
  for (double alpha : alphas) {
    for (double lambda : lambdas) {
      double r;
      try {
        r = (1.0 - alpha) * ergodic_capacity(fam.links(alpha, lambda));
      } catch (const NumericalError&) {
        out.converged = false;
        return out;
      }
      ++out.evaluations;
      if (r > out.objective_value) {  // ascending scan: ties keep smaller (a,l)
        out.objective_value = r;
        out.alpha_star = alpha;
        out.lambda_star = lambda;
        out.trace.push_back({alpha, lambda, r});
      }
    }
  }
  out.converged = true;
  return out;
}

std::vector<ProtocolRow> protocol_comparison(
    const ScenarioConfig& config_template,
    const std::vector<double>& gamma_s_dbm_sweep, double gamma_th,
    double alpha_max, double lambda_max,
    const std::vector<double>& lambda_set) {
  check_bounds(alpha_max, lambda_max);
  if (!(gamma_th > 0.0))
    throw ValidationError("protocol_comparison: gamma_th > 0");
  if (gamma_s_dbm_sweep.empty())
    throw ValidationError("protocol_comparison: empty sweep");

  std::vector<ProtocolRow> rows;
  for (double gs_dbm : gamma_s_dbm_sweep) {
    ScenarioConfig cfg = config_template;
    cfg.gamma_s_dbm = gs_dbm;
    const TsPsFamily fam = TsPsFamily::from_config(cfg);
    ProtocolRow row;
    row.gamma_s_dbm = gs_dbm;

    const double warm = gs_dbm < 10.0 ? 0.0 : 0.5;

    // outage-optimal factors per protocol
    {
      ScalarSearch s{fam, alpha_max, gamma_th};
      row.outage_ts = std::exp(-s.g(0.0));  // TS-only: lambda pinned at 0
    }
    {
      ScalarSearch s{fam, 0.0, gamma_th};  // PS-only: alpha pinned at 0
      const ScalarResult r = maximize_scalar(s, 0.0, lambda_max, 0.5, nullptr,
                                             ObjectiveKind::outage_log);
      row.outage_ps = std::exp(-r.value);
      row.lambda_out_ps = r.lambda;
    }
    {
      ScalarSearch s{fam, alpha_max, gamma_th};
      const ScalarResult r = maximize_scalar(s, 0.0, lambda_max, warm, nullptr,
                                             ObjectiveKind::outage_log);
      row.outage_hybrid = std::exp(-r.value);
      row.lambda_out_hybrid = r.lambda;
    }

    // capacity-optimal factors per protocol (line search over the lambda set)
    auto best_capacity = [&fam, &lambda_set](double alpha, double* arg) {
      double best = -std::numeric_limits<double>::infinity();
      for (double lambda : lambda_set) {
        const double c = ergodic_capacity(fam.links(alpha, lambda));
        if (c > best) {
          best = c;
          if (arg) *arg = lambda;
        }
      }
      return best;
    };
    row.capacity_ts = ergodic_capacity(fam.links(alpha_max, 0.0));
    row.capacity_ps = best_capacity(0.0, &row.lambda_cap_ps);
    row.capacity_hybrid = best_capacity(alpha_max, &row.lambda_cap_hybrid);

    rows.push_back(row);
  }
  return rows;
}

void write_csv_header_result(std::ostream& os) {
  os << "objective_kind,alpha_star,lambda_star,value,evaluations,converged\n";
}

void write_csv_row(const OptimizationResult& r, std::ostream& os) {
  os << to_string(r.objective_kind) << ',' << format_double(r.alpha_star)
     << ',' << format_double(r.lambda_star) << ','
     << format_double(r.objective_value) << ',' << r.evaluations << ','
     << (r.converged ? "true" : "false") << '\n';
}

}  // namespace swiptrelay
