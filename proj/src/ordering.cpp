#include "swiptrelay/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "swiptrelay/csv.hpp"
#include "swiptrelay/errors.hpp"
#include "swiptrelay/evt_core.hpp"
#include "swiptrelay/exact_stats.hpp"

namespace swiptrelay {

std::string to_string(OrderParameter p) {
  switch (p) {
    case OrderParameter::source_power: return "source_power";
    case OrderParameter::ts_factor: return "ts_factor";
    case OrderParameter::noise_power: return "noise_power";
    case OrderParameter::ps_factor: return "ps_factor";
  }
  return "unknown";
}

std::string to_string(OrderDirection d) {
  switch (d) {
    case OrderDirection::st_larger: return "st_larger";
    case OrderDirection::st_smaller: return "st_smaller";
    case OrderDirection::indeterminate: return "indeterminate";
  }
  return "unknown";
}

OrderingVerdict check_dominance(const std::vector<LinkParams>& links_a,
                                const std::vector<LinkParams>& links_b,
                                std::vector<double> grid, double tol,
                                OrderParameter parameter) {
  if (links_a.empty() || links_b.empty())
    throw ValidationError("check_dominance: empty links");
  if (grid.empty()) throw ValidationError("check_dominance: empty grid");
  OrderingVerdict v;
  v.parameter = parameter;
  v.grid = std::move(grid);
  for (double g : v.grid) {
    const double fa = approx_max_cdf(links_a, g);
    const double fb = approx_max_cdf(links_b, g);
    v.violation_b_larger = std::max(v.violation_b_larger, fb - fa);
    v.violation_b_smaller = std::max(v.violation_b_smaller, fa - fb);
  }
  v.violation_b_larger = std::max(0.0, v.violation_b_larger);
  v.violation_b_smaller = std::max(0.0, v.violation_b_smaller);
  if (v.violation_b_larger <= tol) {
    v.direction = OrderDirection::st_larger;
    v.max_violation = v.violation_b_larger;
  } else if (v.violation_b_smaller <= tol) {
    v.direction = OrderDirection::st_smaller;
    v.max_violation = v.violation_b_smaller;
  } else {
    v.direction = OrderDirection::indeterminate;
    v.max_violation = std::min(v.violation_b_larger, v.violation_b_smaller);
  }
  return v;
}

std::vector<double> ordering_grid(const std::vector<LinkParams>& reference,
                                  int points) {
  if (reference.empty()) throw ValidationError("ordering_grid: no links");
  // central 99.8%: CDF from 0.001 to 0.999, i.e. u from -ln(0.001) down
  auto solve = [&reference](double target_u) {
    if (u_of_gamma(reference, 0.0) <= target_u) return 0.0;
    double hi = 1.0;
    int guard = 0;
    while (u_of_gamma(reference, hi) > target_u) {
      hi *= 2.0;
      if (++guard > 320)
        throw NumericalError("ordering_grid: u does not decay");
    }
    double lo = hi * 0.5;
    if (u_of_gamma(reference, lo) <= target_u) lo = 0.0;
    for (int i = 0; i < 120; ++i) {
      const double mid = 0.5 * (lo + hi);
      (u_of_gamma(reference, mid) > target_u ? lo : hi) = mid;
    }
    return hi;
  };
  const double hi = solve(-std::log(0.999));
  double lo = solve(-std::log(0.001));
  if (!(lo > 0.0)) lo = hi * 1e-4;
  return geometric_grid(lo, hi, points);
}

OrderDirection predict_order(OrderParameter parameter, double old_value,
                             double new_value, SnrRegime regime_hint) {
  const bool up = new_value > old_value;
  const bool down = new_value < old_value;
  switch (parameter) {
    case OrderParameter::source_power:
    case OrderParameter::ts_factor:
      if (up) return OrderDirection::st_larger;
      if (down) return OrderDirection::st_smaller;
      return OrderDirection::st_larger;  // equal values: both hold
    case OrderParameter::noise_power:
      if (up) return OrderDirection::st_smaller;
      if (down) return OrderDirection::st_larger;
      return OrderDirection::st_larger;
    case OrderParameter::ps_factor:
      // only the low-SNR regime admits a sign; smaller lambda wins there
      if (regime_hint == SnrRegime::low && down)
        return OrderDirection::st_larger;
      if (regime_hint == SnrRegime::low && up)
        return OrderDirection::st_smaller;
      return OrderDirection::indeterminate;
  }
  return OrderDirection::indeterminate;
}

void write_csv_header_verdicts(std::ostream& os) {
  os << "parameter,direction,max_violation\n";
}

void write_csv_row(const OrderingVerdict& v, std::ostream& os) {
  os << to_string(v.parameter) << ',' << to_string(v.direction) << ','
     << format_double(v.max_violation) << '\n';
}

}  // namespace swiptrelay
