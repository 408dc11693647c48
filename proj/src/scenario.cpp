#include "swiptrelay/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "swiptrelay/errors.hpp"
#include "swiptrelay/rng.hpp"

namespace swiptrelay {

using nlohmann::json;

DistanceSpec DistanceSpec::explicit_list(std::vector<double> v) {
  DistanceSpec s;
  s.random = false;
  s.values = std::move(v);
  return s;
}

DistanceSpec DistanceSpec::uniform(double lo, double hi, std::uint64_t seed) {
  DistanceSpec s;
  s.random = true;
  s.min = lo;
  s.max = hi;
  s.seed = seed;
  return s;
}

double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }
double linear_to_dbm(double linear) { return 10.0 * std::log10(linear); }

double ScenarioConfig::gamma_s_linear() const {
  return dbm_to_linear(gamma_s_dbm);
}

std::vector<double> resolve_distances(const DistanceSpec& spec, int n,
                                      std::uint64_t salt) {
  if (n < 1) throw ValidationError("resolve_distances: need n >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (spec.random) {
    if (!(spec.min > 0.0) || !(spec.max >= spec.min))
      throw ValidationError("resolve_distances: bad uniform interval");
    CounterRng rng(spec.seed, 0x6765ULL + salt);
    for (int i = 0; i < n; ++i)
      out[i] = spec.min + (spec.max - spec.min) * rng.uniform01_at(i);
  } else {
    if (spec.values.empty())
      throw ValidationError("resolve_distances: empty distance list");
    for (int i = 0; i < n; ++i) out[i] = spec.values[i % spec.values.size()];
  }
  return out;
}

std::vector<std::string> config_violations(const ScenarioConfig& c) {
  std::vector<std::string> v;
  if (c.num_relays < 1) v.push_back("nonpositive_num_relays");
  auto check_distances = [&v](const DistanceSpec& s) {
    if (s.random) {
      if (!(s.min > 0.0) || !(s.max >= s.min)) v.push_back("nonpositive_distance");
    } else if (s.values.empty()) {
      v.push_back("empty_distance_list");
    } else {
      for (double d : s.values)
        if (!(d > 0.0)) {
          v.push_back("nonpositive_distance");
          break;
        }
    }
  };
  check_distances(c.d1);
  check_distances(c.d2);
  if (!(c.path_loss_exponent > 0.0)) v.push_back("invalid_path_loss_exponent");
  if (!(c.noise_power > 0.0)) v.push_back("nonpositive_noise_power");
  if (!(c.eh_efficiency > 0.0) || c.eh_efficiency > 1.0)
    v.push_back("eh_efficiency_out_of_range");
  if (c.ts_factor < 0.0) v.push_back("ts_factor_negative");
  if (c.ts_factor >= 1.0) v.push_back("ts_factor_at_unity");
  if (c.ps_factor < 0.0) v.push_back("ps_factor_negative");
  if (c.ps_factor >= 1.0) v.push_back("ps_factor_at_unity");
  if (!(c.slot_length > 0.0)) v.push_back("nonpositive_slot_length");
  return v;
}

std::vector<LinkParams> build_links(const ScenarioConfig& c) {
  const auto violations = config_violations(c);
  if (!violations.empty()) {
    std::string msg = "build_links: invalid config:";
    for (const auto& s : violations) msg += " " + s;
    throw ValidationError(msg);
  }
  const int L = c.num_relays;
  const std::vector<double> d1 = resolve_distances(c.d1, L, 1);
  const std::vector<double> d2 = resolve_distances(c.d2, L, 2);
  const double zeta = c.path_loss_exponent;
  const double gs = c.gamma_s_linear();
  const double alpha = c.ts_factor;
  const double lambda = c.ps_factor;
  const double eh_denom =
      c.eh_efficiency * (2.0 * alpha + lambda * (1.0 - alpha));

  std::vector<LinkParams> links(static_cast<std::size_t>(L));
  for (int l = 0; l < L; ++l) {
    LinkParams& p = links[static_cast<std::size_t>(l)];
    p.link_index = l;
    p.theta = std::pow(d1[l], zeta) / ((1.0 - lambda) * gs);
    // alpha = lambda = 0 leaves nothing harvested; nu = +inf is the
    // consistent degenerate rate (second hop pinned at zero)
    p.nu = (1.0 - lambda) * (1.0 - alpha) * std::pow(d2[l], zeta) / eh_denom;
  }
  return links;
}

SampleBatch sample_batch(const std::vector<LinkParams>& links, std::size_t n,
                         std::uint64_t seed) {
  if (links.empty()) throw ValidationError("sample_batch: no links");
  if (n < 1) throw ValidationError("sample_batch: need n >= 1");
  SampleBatch batch;
  batch.seed = seed;
  batch.n = n;
  batch.per_link.assign(links.size(), std::vector<double>(n));
  batch.max_samples.assign(n, -std::numeric_limits<double>::infinity());
  for (std::size_t l = 0; l < links.size(); ++l) {
    const std::uint64_t id = static_cast<std::uint64_t>(links[l].link_index);
    CounterRng hop1(seed, 2 * id);
    CounterRng hop2(seed, 2 * id + 1);
    std::vector<double>& row = batch.per_link[l];
    for (std::size_t j = 0; j < n; ++j) {
      const double g1 = hop1.exponential_at(j, links[l].theta);
      const double f2 = hop2.exponential_at(j, links[l].nu);
      row[j] = g1 * std::min(1.0, f2);
      batch.max_samples[j] = std::max(batch.max_samples[j], row[j]);
    }
  }
  return batch;
}

std::vector<double> sample_max(const std::vector<LinkParams>& links,
                               std::size_t n, std::uint64_t seed) {
  if (links.empty()) throw ValidationError("sample_max: no links");
  if (n < 1) throw ValidationError("sample_max: need n >= 1");
  std::vector<double> maxima(n, -std::numeric_limits<double>::infinity());
  for (const LinkParams& link : links) {
    const std::uint64_t id = static_cast<std::uint64_t>(link.link_index);
    CounterRng hop1(seed, 2 * id);
    CounterRng hop2(seed, 2 * id + 1);
    for (std::size_t j = 0; j < n; ++j) {
      const double g1 = hop1.exponential_at(j, link.theta);
      const double f2 = hop2.exponential_at(j, link.nu);
      maxima[j] = std::max(maxima[j], g1 * std::min(1.0, f2));
    }
  }
  return maxima;
}

namespace {

DistanceSpec parse_distance_spec(const json& node, const std::string& name) {
  DistanceSpec spec;
  if (node.is_array()) {
    spec.random = false;
    for (const auto& v : node) {
      if (!v.is_number())
        throw ValidationError("config: " + name + " entries must be numbers");
      spec.values.push_back(v.get<double>());
    }
  } else if (node.is_object()) {
    for (const auto& item : node.items()) {
      const std::string& k = item.key();
      if (k != "min" && k != "max" && k != "seed")
        throw ValidationError("config: unknown key " + name + "." + k);
    }
    if (!node.contains("min") || !node.contains("max") || !node.contains("seed"))
      throw ValidationError("config: " + name + " needs min, max, seed");
    spec.random = true;
    spec.min = node.at("min").get<double>();
    spec.max = node.at("max").get<double>();
    spec.seed = node.at("seed").get<std::uint64_t>();
  } else {
    throw ValidationError("config: " + name + " must be array or {min,max,seed}");
  }
  return spec;
}

json distance_spec_to_json(const DistanceSpec& spec) {
  if (spec.random)
    return json{{"min", spec.min}, {"max", spec.max}, {"seed", spec.seed}};
  return json(spec.values);
}

}  // namespace

ScenarioConfig load_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config: top level must be an object");

  static const char* kKeys[] = {"L",   "d1",  "d2",    "zeta", "gamma_s_dbm",
                                "sigma2", "eta", "alpha", "lambda", "T"};
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || item.key() == k;
    if (!known) throw ValidationError("config: unknown key " + item.key());
  }
  for (const char* k : kKeys)
    if (!doc.contains(k)) throw ValidationError(std::string("config: missing key ") + k);

  ScenarioConfig c;
  try {
    c.num_relays = doc.at("L").get<int>();
    c.d1 = parse_distance_spec(doc.at("d1"), "d1");
    c.d2 = parse_distance_spec(doc.at("d2"), "d2");
    c.path_loss_exponent = doc.at("zeta").get<double>();
    c.gamma_s_dbm = doc.at("gamma_s_dbm").get<double>();
    c.noise_power = doc.at("sigma2").get<double>();
    c.eh_efficiency = doc.at("eta").get<double>();
    c.ts_factor = doc.at("alpha").get<double>();
    c.ps_factor = doc.at("lambda").get<double>();
    c.slot_length = doc.at("T").get<double>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config: bad field type: ") + e.what());
  }

  const auto violations = config_violations(c);
  if (!violations.empty()) {
    std::string msg = "config: invalid:";
    for (const auto& s : violations) msg += " " + s;
    throw ValidationError(msg);
  }
  return c;
}

std::vector<std::string> validate_config_text(const std::string& json_text) {
  std::vector<std::string> out;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error&) {
    out.push_back("json_parse_error");
    return out;
  }
  if (!doc.is_object()) {
    out.push_back("top_level_not_object");
    return out;
  }
  static const char* kKeys[] = {"L",   "d1",  "d2",    "zeta", "gamma_s_dbm",
                                "sigma2", "eta", "alpha", "lambda", "T"};
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || item.key() == k;
    if (!known) out.push_back("unknown_key:" + item.key());
  }
  for (const char* k : kKeys)
    if (!doc.contains(k)) out.push_back(std::string("missing_key:") + k);

  ScenarioConfig c;
  c.d1 = DistanceSpec::explicit_list({1.0});
  c.d2 = DistanceSpec::explicit_list({1.0});
  auto number = [&doc, &out](const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc.at(key).is_number()) {
      out.push_back(std::string("bad_type:") + key);
      return fallback;
    }
    return doc.at(key).get<double>();
  };
  if (doc.contains("L")) {
    if (doc.at("L").is_number_integer())
      c.num_relays = doc.at("L").get<int>();
    else
      out.push_back("bad_type:L");
  }
  for (const char* dk : {"d1", "d2"}) {
    if (!doc.contains(dk)) continue;
    try {
      (dk[1] == '1' ? c.d1 : c.d2) = parse_distance_spec(doc.at(dk), dk);
    } catch (const ValidationError&) {
      out.push_back(std::string("bad_type:") + dk);
    }
  }
  c.path_loss_exponent = number("zeta", c.path_loss_exponent);
  c.gamma_s_dbm = number("gamma_s_dbm", c.gamma_s_dbm);
  c.noise_power = number("sigma2", c.noise_power);
  c.eh_efficiency = number("eta", c.eh_efficiency);
  c.ts_factor = number("alpha", c.ts_factor);
  c.ps_factor = number("lambda", c.ps_factor);
  c.slot_length = number("T", c.slot_length);

  for (const auto& v : config_violations(c)) out.push_back(v);
  return out;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config(ss.str());
}

std::string config_to_json(const ScenarioConfig& c) {
  json doc{{"L", c.num_relays},
           {"d1", distance_spec_to_json(c.d1)},
           {"d2", distance_spec_to_json(c.d2)},
           {"zeta", c.path_loss_exponent},
           {"gamma_s_dbm", c.gamma_s_dbm},
           {"sigma2", c.noise_power},
           {"eta", c.eh_efficiency},
           {"alpha", c.ts_factor},
           {"lambda", c.ps_factor},
           {"T", c.slot_length}};
  return doc.dump();
}

std::uint64_t config_hash(const ScenarioConfig& c) {
  const std::string s = config_to_json(c);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace swiptrelay
