#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "xqcalc/parse.hpp"
#include "xqcalc/quadrature.hpp"

using namespace xqcalc;

TEST_CASE("gauss-legendre rules") {
  for (int n : {2, 5, 16, 33}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule->nodes.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (double w : rule->weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // exact for degree 2n - 1
    double m = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) m += rule->weights[i] * std::pow(rule->nodes[i], 2 * n - 2);
    CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  CHECK(gauss_legendre(16) == gauss_legendre(16));
  CHECK_THROWS(gauss_legendre(1));
}

TEST_CASE("one-dimensional integrals") {
  auto sq = [](double x) { return x * x; };
  CHECK(integrate_1d(sq, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(integrate_1d([](double x) { return std::cos(x); }, 0.0, 2.0 * std::numbers::pi)) < 1e-12);
  CHECK(integrate_1d(sq, 1.0, 0.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(integrate_1d(sq, 0.5, 0.5) == 0.0);
  CHECK_THROWS(integrate_1d(sq, 0.0, 1.0, QuadConfig{16, 0}));
  CHECK_THROWS(integrate_1d(sq, 0.0, 1.0, QuadConfig{0, 8}));
}

TEST_CASE("box integrals") {
  const std::pair<double, double> unit[2] = {{0.0, 1.0}, {0.0, 1.0}};
  CHECK(integrate_nd(SmoothFn::from_poly(parse_poly("x*y", 2)), unit) == doctest::Approx(0.25));
  const std::pair<double, double> param[2] = {{0.0, 2.0 * std::numbers::pi}, {0.0, std::numbers::pi}};
  CHECK(integrate_nd(SmoothFn::from_poly(Poly::constant(2, 1.0)), param) ==
        doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi));
  // product of two one-dimensional integrals
  const double one_d = integrate_1d([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(integrate_nd(SmoothFn::from_poly(parse_poly("x^2*y^2", 2)), unit) ==
        doctest::Approx(one_d * one_d).epsilon(1e-14));
  const int bad[2] = {0, 0};
  CHECK_THROWS_AS(integrate_nd(SmoothFn::from_poly(Poly::constant(2, 1.0)), unit, {}, bad), DimensionError);
}

TEST_CASE("nesting order does not matter for smooth integrands") {
  SmoothFn f;
  f.arity = 3;
  f.value = [](std::span<const double> x) { return std::exp(x[0] * x[1]) * std::cos(x[2] + x[0]); };
  const std::pair<double, double> box[3] = {{-1.0, 0.5}, {0.0, 2.0}, {1.0, 1.5}};
  const int order[3] = {2, 0, 1};
  const QuadConfig cfg{16, 2};
  CHECK(integrate_nd(f, box, cfg) == doctest::Approx(integrate_nd(f, box, cfg, order)).epsilon(1e-12));
}

TEST_CASE("partial evaluators") {
  const SmoothFn f = SmoothFn::from_poly(parse_poly("x^3*y", 2));
  const double p[2] = {2.0, 3.0};
  auto [exact, fd] = partial_evaluator(f, {1, 1, 0});
  CHECK_FALSE(fd);
  CHECK(exact(p) == doctest::Approx(12.0));
  SmoothFn g;
  g.arity = 1;
  g.value = [](std::span<const double> x) { return std::sin(x[0]); };
  auto [approx, used] = partial_evaluator(g, {2, 0, 0});
  CHECK(used);
  const double q[1] = {0.7};
  CHECK(std::abs(approx(q) + std::sin(0.7)) < 1e-5);
}
