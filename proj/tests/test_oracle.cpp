#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <numbers>

#include "wpvol/kernels.hpp"
#include "wpvol/oracle.hpp"

using namespace wpvol;
using namespace wpvol::oracle;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

double exact_F(unsigned k, double t) {
  const Rat sq[] = {Rat(static_cast<long>(std::lround(t * t)))};
  return evaluate_squares(kernel_F(k), sq).to_double();
}

double exact_G(unsigned i, unsigned j, double t) {
  const Rat sq[] = {Rat(static_cast<long>(std::lround(t * t)))};
  return evaluate_squares(kernel_double(i, j), sq).to_double();
}

}  // namespace

TEST_CASE("Gauss-Legendre rule is exact for low degree") {
  for (unsigned pts : {1u, 2u, 5u, 12u, 20u}) {
    const GaussRule r = gauss_legendre(pts);
    for (unsigned d = 0; d < 2 * pts; ++d) {
      double acc = 0.0;
      for (unsigned i = 0; i < pts; ++i) acc += r.weights[i] * std::pow(r.nodes[i], d);
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1.0);
      CHECK(acc == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("exponential moment tails") {
  CHECK(exp_moment_tail(0, 0.0) == doctest::Approx(2.0));
  CHECK(exp_moment_tail(0, 6.0) == doctest::Approx(2.0 * std::exp(-3.0)));
  // int_0^inf x^3 e^{-x/2} = 3! 2^4
  CHECK(exp_moment_tail(3, 0.0) == doctest::Approx(96.0));
}

TEST_CASE("quadrature reproduces reference values") {
  CHECK(quad_F(0, 0).value == doctest::Approx(2.0 * kPi2 / 3.0).epsilon(1e-12));
  CHECK(quad_F(0, 1).value == doctest::Approx(2.0 * kPi2 / 3.0 + 0.5).epsilon(1e-12));
  CHECK(quad_F(1, 0).value == doctest::Approx(28.0 * kPi2 * kPi2 / 15.0).epsilon(1e-12));
  CHECK(quad_double(0, 0, 0).value == doctest::Approx(28.0 * kPi2 * kPi2 / 90.0).epsilon(1e-10));
}

TEST_CASE("error estimates bound the true deviation") {
  for (unsigned k = 0; k <= 10; ++k) {
    for (double t : {0.0, 2.0, 9.0, 20.0}) {
      CAPTURE(k);
      CAPTURE(t);
      const QuadResult r = quad_F(k, t);
      const double exact = exact_F(k, t);
      CHECK(r.tail_bound < r.spec.tail_target);
      CHECK(std::abs(r.value - exact) <= r.error_estimate + 1e-15 * std::abs(exact));
      CHECK(std::abs(r.value - exact) / exact < 1e-10);
    }
  }
  for (unsigned i = 0; i <= 5; ++i) {
    for (unsigned j = 0; i + j <= 5; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      const QuadResult r = quad_double(i, j, 3.0);
      const double exact = exact_G(i, j, 3.0);
      CHECK(std::abs(r.value - exact) <= r.error_estimate + 1e-14 * std::abs(exact));
    }
  }
}

TEST_CASE("quadrature domain is enforced") {
  CHECK_THROWS_AS(quad_F(11, 1.0), std::domain_error);
  CHECK_THROWS_AS(quad_F(1, -1.0), std::domain_error);
  CHECK_THROWS_AS(quad_F(1, 21.0), std::domain_error);
  CHECK_THROWS_AS(quad_double(3, 3, 1.0), std::domain_error);
  CHECK_THROWS_AS(quad_double(0, 0, 11.0), std::domain_error);
}

TEST_CASE("2-D quadrature is independent of the thread count") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double one = quad_double(2, 3, 5.0).value;
  omp_set_num_threads(4);
  const double four = quad_double(2, 3, 5.0).value;
  omp_set_num_threads(saved);
  CHECK(one == four);
}

TEST_CASE("kernel identity suite passes") {
  for (const OracleCheck& c : kernel_identity_suite()) {
    CAPTURE(c.check);
    CAPTURE(c.max_abs_dev);
    CHECK(c.pass);
  }
}

TEST_CASE("closed forms agree with quadrature") {
  const auto checks = closed_form_suite();
  CHECK(checks.size() == 9 + 21);
  for (const OracleCheck& c : checks) {
    CAPTURE(c.check);
    CAPTURE(c.max_abs_dev);
    CHECK(c.pass);
  }
}
