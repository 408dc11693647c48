#include "swiptrelay/evt_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swiptrelay/errors.hpp"

namespace swiptrelay {

std::string to_string(LinkCase c) {
  switch (c) {
    case LinkCase::all_iid: return "all_iid";
    case LinkCase::first_hop_iid: return "first_hop_iid";
    case LinkCase::second_hop_iid: return "second_hop_iid";
    case LinkCase::fully_inid: return "fully_inid";
  }
  return "unknown";
}

namespace {

bool uniform_within(const std::vector<double>& v, double rel_tol) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double scale = std::max(std::fabs(*hi), 1e-300);
  return (*hi - *lo) <= rel_tol * scale;
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

double mean(const std::vector<double>& v) {
  KahanSum s;
  for (double x : v) s.add(x);
  return s.sum / static_cast<double>(v.size());
}

}  // namespace

LinkCase classify_case(const std::vector<LinkParams>& links, double theta_tol,
                       double nu_tol) {
  if (links.empty()) throw ValidationError("classify_case: no links");
  std::vector<double> thetas, nus;
  thetas.reserve(links.size());
  nus.reserve(links.size());
  for (const LinkParams& l : links) {
    thetas.push_back(l.theta);
    nus.push_back(l.nu);
  }
  const bool theta_same = uniform_within(thetas, theta_tol);
  const bool nu_same = uniform_within(nus, nu_tol);
  if (theta_same && nu_same) return LinkCase::all_iid;
  if (theta_same) return LinkCase::first_hop_iid;
  if (nu_same) return LinkCase::second_hop_iid;
  return LinkCase::fully_inid;
}

ThetaBinning bin_thetas(const std::vector<LinkParams>& links, int num_bins) {
  if (links.empty()) throw ValidationError("bin_thetas: no links");
  if (num_bins < 1) throw ValidationError("bin_thetas: need num_bins >= 1");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const LinkParams& l : links) {
    lo = std::min(lo, l.theta);
    hi = std::max(hi, l.theta);
  }

  ThetaBinning bins;
  const int nb = (hi == lo) ? 1 : num_bins;
  const double width = (hi - lo) / nb;
  bins.edges.resize(static_cast<std::size_t>(nb) + 1);
  for (int i = 0; i <= nb; ++i) bins.edges[i] = lo + width * i;
  bins.edges.back() = hi;
  bins.counts.assign(nb, 0);
  bins.assignment.resize(links.size());
  std::vector<double> theta_sum(nb, 0.0);
  for (std::size_t j = 0; j < links.size(); ++j) {
    int idx = width > 0.0
                  ? static_cast<int>((links[j].theta - lo) / width)
                  : 0;
    idx = std::clamp(idx, 0, nb - 1);
    bins.assignment[j] = idx;
    bins.counts[idx] += 1;
    theta_sum[idx] += links[j].theta;
  }
  bins.values.resize(nb);
  for (int i = 0; i < nb; ++i)
    bins.values[i] = bins.counts[i] > 0
                         ? theta_sum[i] / bins.counts[i]
                         : 0.5 * (bins.edges[i] + bins.edges[i + 1]);
  return bins;
}

BetaSelection select_beta(const ThetaBinning& binning, double eps1,
                          double eps2) {
  if (binning.counts.empty()) throw ValidationError("select_beta: empty binning");
  int total = 0;
  for (int c : binning.counts) total += c;
  if (total == 0) throw ValidationError("select_beta: no members");

  bool skipped_smaller = false;
  for (std::size_t i = 0; i < binning.counts.size(); ++i) {
    const int r = binning.counts[i];
    if (r == 0) continue;
    if (r < eps1 * total) {
      skipped_smaller = true;
      continue;
    }
    const double beta = binning.values[i];
    bool decay_ok = true;
    for (std::size_t j = i + 1; j < binning.counts.size(); ++j) {
      if (binning.counts[j] == 0) continue;
      const double ratio = binning.values[j] / beta;
      const double crit =
          binning.counts[j] * std::pow(static_cast<double>(r), -ratio);
      if (crit > eps2) {
        decay_ok = false;
        break;
      }
    }
    if (decay_ok)
      return {beta, r, static_cast<int>(i), skipped_smaller};
    skipped_smaller = true;  // occupied smaller-theta bin passed over
  }

  // nothing passed: best-count bin, smallest theta on ties
  int best = -1;
  for (std::size_t i = 0; i < binning.counts.size(); ++i)
    if (binning.counts[i] > 0 &&
        (best < 0 || binning.counts[i] > binning.counts[best]))
      best = static_cast<int>(i);
  return {binning.values[best], binning.counts[best], best, true};
}

NormalizingConstants normalizing_constants(const std::vector<LinkParams>& links,
                                           LinkCase case_tag,
                                           const ThetaBinning* binning,
                                           double eps1, double eps2) {
  if (links.empty()) throw ValidationError("normalizing_constants: no links");
  NormalizingConstants nc;
  nc.case_tag = case_tag;
  const double L = static_cast<double>(links.size());

  std::vector<double> thetas, nus;
  for (const LinkParams& l : links) {
    thetas.push_back(l.theta);
    nus.push_back(l.nu);
  }

  switch (case_tag) {
    case LinkCase::all_iid: {
      const double theta = mean(thetas);
      const double nu = mean(nus);
      nc.beta = theta;
      nc.a = 1.0 / theta;
      nc.b = (std::log(L) - nu) / theta;
      break;
    }
    case LinkCase::first_hop_iid: {
      const double theta = mean(thetas);
      KahanSum s;
      for (double nu : nus) s.add(std::exp(-nu));
      nc.beta = theta;
      nc.a = 1.0 / theta;
      nc.b = std::log(s.sum) / theta;
      break;
    }
    case LinkCase::second_hop_iid: {
      if (!binning)
        throw ValidationError("normalizing_constants: binning required");
      const BetaSelection sel = select_beta(*binning, eps1, eps2);
      const double nu = mean(nus);
      nc.beta = sel.beta;
      nc.heuristic_beta = sel.heuristic;
      nc.a = 1.0 / sel.beta;
      nc.b = (std::log(static_cast<double>(sel.count)) - nu) / sel.beta;
      break;
    }
    case LinkCase::fully_inid: {
      if (!binning)
        throw ValidationError("normalizing_constants: binning required");
      if (binning->assignment.size() != links.size())
        throw ValidationError("normalizing_constants: binning/links mismatch");
      const BetaSelection sel = select_beta(*binning, eps1, eps2);
      KahanSum s;
      for (std::size_t j = 0; j < links.size(); ++j)
        if (binning->assignment[j] == sel.bin_index) s.add(std::exp(-links[j].nu));
      if (!(s.sum > 0.0))
        throw ValidationError("normalizing_constants: empty beta bin");
      nc.beta = sel.beta;
      nc.heuristic_beta = sel.heuristic;
      nc.a = 1.0 / sel.beta;
      nc.b = std::log(s.sum) / sel.beta;
      break;
    }
  }
  return nc;
}

double u_of_gamma(const std::vector<LinkParams>& links, double gamma) {
  KahanSum s;
  for (const LinkParams& l : links) s.add(std::exp(-l.theta * gamma - l.nu));
  return s.sum;
}

double approx_max_cdf(const std::vector<LinkParams>& links, double gamma) {
  return std::exp(-u_of_gamma(links, gamma));
}

double approx_max_pdf(const std::vector<LinkParams>& links, double gamma) {
  KahanSum u, du;
  for (const LinkParams& l : links) {
    const double e = std::exp(-l.theta * gamma - l.nu);
    u.add(e);
    du.add(l.theta * e);
  }
  return std::exp(-u.sum) * du.sum;
}

std::vector<double> normalized_max_samples(std::span<const double> max_samples,
                                           const NormalizingConstants& nc) {
  std::vector<double> out;
  out.reserve(max_samples.size());
  for (double x : max_samples) out.push_back((x - nc.b) / nc.a);
  return out;
}

double gumbel_cdf(double z) { return std::exp(-std::exp(-z)); }

}  // namespace swiptrelay
