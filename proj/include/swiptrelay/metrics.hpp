#ifndef SWIPTRELAY_METRICS_HPP
#define SWIPTRELAY_METRICS_HPP

#include <iosfwd>
#include <vector>

#include "swiptrelay/scenario.hpp"

namespace swiptrelay {

// Capacity/outage figures from the approximate maximum distribution.
// Invariants: throughput = (1-alpha) * ergodic_capacity and
// outage_capacity = log2(1+gamma_th)/2 * (1-outage_probability).
struct CapacityReport {
  double ergodic_capacity = 0.0;   // bits/s/Hz
  double throughput = 0.0;         // bits/s/Hz
  double outage_probability = 0.0;
  double outage_capacity = 0.0;    // bits/s/Hz
  double gamma_th = 0.0;           // linear SNR
  double quadrature_error_bound = 0.0;
};

// Ergodic capacity
//
//   C = 1/2 int_0^inf log2(1+g) f_max(g) dg
//
// integrated up to the point where the CDF passes 1 - 1e-10. The equivalent
// tail form  1/(2 ln 2) int (1 - exp(-u(g)))/(1+g) dg  is evaluated as a
// runtime self-check; disagreement beyond 1e-7 raises NumericalError.
double ergodic_capacity(const std::vector<LinkParams>& links);

// Tail-integral route alone (exposed for tests).
double ergodic_capacity_tail_form(const std::vector<LinkParams>& links);

// (1-alpha) * ergodic_capacity. The links must have been built with the
// same alpha; nothing can verify that here.
double throughput(const std::vector<LinkParams>& links, double alpha);

// P = exp(-u(gamma_th)) and C_out = log2(1+gamma_th)/2 * (1-P).
double outage_probability(const std::vector<LinkParams>& links,
                          double gamma_th);
double outage_capacity(const std::vector<LinkParams>& links, double gamma_th);

CapacityReport capacity_report(const std::vector<LinkParams>& links,
                               double alpha, double gamma_th);

// Upper integration limit: the gamma where u(gamma) = 1e-10, by bisection
// (0 when u(0) is already below that).
double capacity_upper_limit(const std::vector<LinkParams>& links);

// CSV row in field order: ergodic_capacity, throughput, outage_probability,
// outage_capacity, gamma_th, quadrature_error_bound.
void write_csv_header(std::ostream& os);
void write_csv_row(const CapacityReport& report, std::ostream& os);

}  // namespace swiptrelay

#endif
