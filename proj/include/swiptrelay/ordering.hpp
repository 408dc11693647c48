#ifndef SWIPTRELAY_ORDERING_HPP
#define SWIPTRELAY_ORDERING_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swiptrelay/scenario.hpp"

namespace swiptrelay {

enum class OrderParameter { source_power, ts_factor, noise_power, ps_factor };
enum class OrderDirection { st_larger, st_smaller, indeterminate };
enum class SnrRegime { low, mid, high };

std::string to_string(OrderParameter p);
std::string to_string(OrderDirection d);

// First-order stochastic dominance verdict for scenario b relative to
// scenario a, evaluated on the asymptotic maximum CDF over the grid.
// b st-larger a means F_b <= F_a everywhere (within tol); the two violation
// fields quantify how badly each one-sided claim fails. When both claims
// hold (identical scenarios) the verdict reads st_larger.
struct OrderingVerdict {
  OrderParameter parameter = OrderParameter::source_power;
  OrderDirection direction = OrderDirection::indeterminate;
  double max_violation = 0.0;          // violation of the reported direction
  double violation_b_larger = 0.0;     // sup (F_b - F_a)+
  double violation_b_smaller = 0.0;    // sup (F_a - F_b)+
  std::vector<double> grid;
};

OrderingVerdict check_dominance(const std::vector<LinkParams>& links_a,
                                const std::vector<LinkParams>& links_b,
                                std::vector<double> grid, double tol = 1e-9,
                                OrderParameter parameter =
                                    OrderParameter::source_power);

// 400 geometric points spanning the central 99.8% of the reference
// asymptotic distribution.
std::vector<double> ordering_grid(const std::vector<LinkParams>& reference,
                                  int points = 400);

// What the analysis predicts for the new value relative to the old one:
// raising P_s or alpha gives st_larger, raising sigma^2 gives st_smaller.
// For lambda only the low-SNR regime admits a claim (smaller lambda is
// stochastically larger); mid and high SNR return indeterminate.
OrderDirection predict_order(OrderParameter parameter, double old_value,
                             double new_value, SnrRegime regime_hint);

// CSV rows: parameter,direction,max_violation.
void write_csv_header_verdicts(std::ostream& os);
void write_csv_row(const OrderingVerdict& verdict, std::ostream& os);

}  // namespace swiptrelay

#endif
