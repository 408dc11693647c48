#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "swiptrelay/errors.hpp"
#include "swiptrelay/special_fn.hpp"

using namespace swiptrelay;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// reference values computed with 50-digit arithmetic
constexpr double kE1_1 = 0.2193839343955202736771638;
constexpr double kE0_2 = 0.06766764161830634594699975;
constexpr double kE2_05 = 0.3266438623245530177304016;
constexpr double kE10_5 = 0.0004691048076578118902558637;
constexpr double kE6_13 = 1.208386623924515716067195e-7;
constexpr double kE60_50 = 1.762074488941410000254602e-24;
constexpr double kE1_50 = 3.783264029550459018698968e-24;
constexpr double kE40_025 = 0.01983875575700424362191894;
}  // namespace

TEST_CASE("adaptive_quad basic integrals") {
  auto one = [](double) { return 1.0; };
  CHECK(adaptive_quad(one, 0.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-14));

  auto expn = [](double x) { return std::exp(-x); };
  const QuadResult r = adaptive_quad(expn, 0.0, kInf);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));

  auto poly = [](double x) { return 5.0 * x * x * x * x - 2.0 * x + 1.0; };
  // antiderivative x^5 - x^2 + x over [-1,2]: (32-4+2) - (-1-1-1) = 33
  CHECK(adaptive_quad(poly, -1.0, 2.0).value == doctest::Approx(33.0).epsilon(1e-13));

  CHECK(adaptive_quad(one, 3.0, 3.0).value == 0.0);
}

TEST_CASE("adaptive_quad matches exp_integral on the defining integral") {
  auto f = [](double t) { return std::exp(-t) / t; };
  const double v = integrate_or_throw(f, 1.0, kInf, 0.0, 1e-13);
  CHECK(std::fabs(v - exp_integral(1, 1.0)) < 1e-12);
  CHECK(std::fabs(v - kE1_1) < 1e-12);
}

TEST_CASE("adaptive_quad failure signal") {
  // needle the budget cannot resolve
  auto needle = [](double x) { return 1.0 / (1e-14 + (x - 0.37) * (x - 0.37)); };
  const QuadResult r = adaptive_quad(needle, 0.0, 1.0, 1e-14, 1e-14, 4);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(integrate_or_throw(needle, 0.0, 1.0, 1e-14, 1e-14, 4),
                  QuadratureError);
}

TEST_CASE("exp_integral closed forms and golden values") {
  CHECK(exp_integral(0, 2.0) == doctest::Approx(kE0_2).epsilon(1e-14));
  CHECK(exp_integral(5, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(exp_integral(1, 1.0) == doctest::Approx(kE1_1).epsilon(1e-13));
  CHECK(exp_integral(2, 0.5) == doctest::Approx(kE2_05).epsilon(1e-12));
  CHECK(exp_integral(10, 5.0) == doctest::Approx(kE10_5).epsilon(1e-12));
  CHECK(exp_integral(6, 13.0) == doctest::Approx(kE6_13).epsilon(1e-12));
  CHECK(exp_integral(60, 50.0) == doctest::Approx(kE60_50).epsilon(1e-11));
  CHECK(exp_integral(1, 50.0) == doctest::Approx(kE1_50).epsilon(1e-12));
  CHECK(exp_integral(40, 0.25) == doctest::Approx(kE40_025).epsilon(1e-12));
}

TEST_CASE("exp_integral domain errors") {
  CHECK_THROWS_AS(exp_integral(0, -1.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral(1, 0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral(-1, 1.0), ValidationError);
}

TEST_CASE("exp_integral vs quadrature oracle over the contract range") {
  const int orders[] = {0, 1, 2, 3, 5, 8, 13, 21, 34, 47, 60};
  for (int n : orders) {
    for (double x = 1e-6; x <= 50.0; x *= 3.9) {
      const double v = exp_integral(n, x);
      auto f = [n, x](double t) {
        return std::exp(-x * t - n * std::log(t));
      };
      const double oracle = integrate_or_throw(f, 1.0, kInf, 0.0, 1e-13, 8000);
      CHECK(std::fabs(v - oracle) <= 1e-10 * std::fabs(oracle));
    }
  }
}

TEST_CASE("recurrence identity n E_{n+1} + x E_n = e^{-x}") {
  for (int n = 1; n <= 40; n += 3) {
    for (double x : {0.05, 0.4, 1.0, 3.0, 7.5, 16.0, 33.0}) {
      const double lhs = n * exp_integral(n + 1, x) + x * exp_integral(n, x);
      CHECK(std::fabs(lhs - std::exp(-x)) <= 1e-12 * std::exp(-x));
    }
  }
}

TEST_CASE("exp_integral monotone decreasing in x and n") {
  for (int n : {0, 1, 2, 7, 20}) {
    double prev = kInf;
    for (double x = 0.2; x < 30.0; x += 1.7) {
      const double v = exp_integral(n, x);
      CHECK(v > 0.0);
      CHECK(v < prev);
      prev = v;
    }
  }
  for (double x : {0.3, 2.0, 11.0}) {
    double prev = kInf;
    for (int n = 0; n <= 30; ++n) {
      const double v = exp_integral(n, x);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("exp_integral_eval reports its method") {
  CHECK(exp_integral_eval(0, 1.0).method == ExpIntMethod::closed_form);
  CHECK(exp_integral_eval(1, 2.0).method == ExpIntMethod::closed_form);
  CHECK(exp_integral_eval(3, 9.0).method == ExpIntMethod::recurrence);
  // x far below n/2 must not use the recurrence
  CHECK(exp_integral_eval(40, 0.25).method == ExpIntMethod::quadrature);
  // large amplification region falls back as well
  CHECK(exp_integral_eval(30, 30.0).method == ExpIntMethod::quadrature);
}

TEST_CASE("asymptotic expansion leading term and moderate-x accuracy") {
  for (double x : {0.7, 4.0, 22.0}) {
    for (int n : {0, 1, 6}) {
      CHECK(exp_integral_asymptotic(n, x, 1) ==
            doctest::Approx(std::exp(-x) / x).epsilon(1e-15));
    }
  }
  const double approx = exp_integral_asymptotic(1, 50.0, 3);
  const double truth = exp_integral(1, 50.0);
  CHECK(std::fabs(approx - truth) / truth < 1e-3);
}

TEST_CASE("asymptotic expansion diverges at small x") {
  const double approx = exp_integral_asymptotic(2, 0.5, 10);
  const double truth = exp_integral(2, 0.5);
  CHECK(std::fabs(approx - truth) / truth > 0.10);
}

TEST_CASE("asymptotic partial sums alternate around the truth while terms shrink") {
  const double x = 40.0;
  const int n = 3;
  const double truth = exp_integral(n, x);
  // term ratio (n+k)/x < 1 for k <= x - n: sums bracket the true value
  for (int terms = 1; terms + n <= 20; ++terms) {
    const double lo = exp_integral_asymptotic(n, x, terms + 1);
    const double hi = exp_integral_asymptotic(n, x, terms);
    const double a = std::min(lo, hi), b = std::max(lo, hi);
    CHECK(truth >= a);
    CHECK(truth <= b);
  }
}
