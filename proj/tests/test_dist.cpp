#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "xqcalc/dist.hpp"
#include "xqcalc/dist_json.hpp"
#include "xqcalc/parse.hpp"
#include "xqcalc/random.hpp"

using namespace xqcalc;

namespace {
Poly P(const char* text, int dim) { return parse_poly(text, dim); }
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("atomic pairings") {
  CHECK(pair(dirac({0.0, 0.0}), P("x^2 + 3", 2)) == 3.0);
  CHECK(pair(interval(0.0, 1.0), P("x^2", 1)) == doctest::Approx(1.0 / 3.0));
  CHECK(pair(interval(1.0, 0.0), P("x^2", 1)) == doctest::Approx(-1.0 / 3.0));
  CHECK(pair(interval(2.0, 2.0), P("x^2", 1)) == 0.0);
  const Dist a = ext_product(interval(0.0, 1.0), interval(0.0, 2.0));
  const Dist b = ext_product(interval(0.0, 1.0), interval(0.0, 2.0), ProductOrder::reversed);
  CHECK(pair(a, P("x*y", 2)) == doctest::Approx(1.0));
  CHECK(pair(b, P("x*y", 2)) == doctest::Approx(1.0));
  CHECK(pair(box({{0.0, 1.0}, {0.0, 2.0}}), P("x*y", 2)) == doctest::Approx(1.0));
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(dirac({}), DimensionError);
  CHECK_THROWS_AS(sphere_unit(4), DimensionError);
  CHECK_THROWS_AS(ball_unit(0), DimensionError);
  CHECK_THROWS_AS(pushforward(Cis{}, dirac({0.0, 0.0})), DimensionError);
  CHECK_THROWS_AS(interval(0.0, 1.0) + dirac({0.0, 0.0}), DimensionError);
  CHECK_THROWS_AS(pair(dirac({0.0}), P("x", 2)), DimensionError);
}

TEST_CASE("quadrature pairing") {
  CHECK(pair_callable(sphere_unit(2), SmoothFn::from_poly(P("x^2", 2))).value == doctest::Approx(kPi).epsilon(1e-10));
  CHECK(pair_callable(interval(0.0, 1.0), SmoothFn::from_poly(P("x^2", 1))).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  SmoothFn f;
  f.arity = 1;
  f.value = [](std::span<const double> x) { return std::exp(x[0]); };
  CHECK(pair_callable(dirac({1.0}), f).value == std::exp(1.0));
}

TEST_CASE("totals") {
  CHECK(total(interval(-1.0, 2.5)) == doctest::Approx(3.5));
  CHECK(total(sphere_unit(3)) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Dist d = random_dist(rng, 2, 2);
    const PolyMap f = random_affine_map(rng, 2, 3);
    CHECK(total(pushforward(f, d)) == doctest::Approx(total(d)).epsilon(1e-12));
  }
}

TEST_CASE("pushforwards") {
  Rng rng(4);
  const Dist d = random_dist(rng, 2, 2);
  for (int i = 0; i < 20; ++i) {
    const Poly psi = random_poly(rng, 2, 6);
    CHECK(pair(pushforward(Homothety{0.0, 2}, d), psi) == doctest::Approx(total(d) * psi({0.0, 0.0})));
    CHECK(pair(pushforward(PolyMap::identity(2), d), psi) == doctest::Approx(pair(d, psi)));
  }
  const Dist projected = pushforward(xy_projection(), dirac({0.0, 0.0, 0.0}));
  CHECK(projected.dim() == 2);
  CHECK(pair(projected, P("x^2 + y + 5", 2)) == pair(dirac({0.0, 0.0}), P("x^2 + y + 5", 2)));
}

TEST_CASE("trigonometric pushforwards") {
  // cis over an interval: oracle integral of psi(cos t, sin t)
  const Poly psi = P("x^3*y - 2*y^2 + x", 2);
  const double exact = pair(pushforward(Cis{}, interval(-0.4, 1.9)), psi);
  const double ref = oracle::simpson(
      [&](double t) { return psi({std::cos(t), std::sin(t)}); }, -0.4, 1.9);
  CHECK(exact == doctest::Approx(ref).epsilon(1e-10));
  const Poly phi = P("x*z^2 + y^2", 3);
  const double sph = pair(pushforward(Sph{}, box({{0.2, 1.1}, {0.3, 2.0}})), phi);
  const double sref = oracle::simpson2(
      [&](double th, double ph) {
        return phi({std::cos(th) * std::sin(ph), std::sin(th) * std::sin(ph), std::cos(ph)});
      },
      0.2, 1.1, 0.3, 2.0);
  CHECK(sph == doctest::Approx(sref).epsilon(1e-9));
  CHECK_THROWS_AS(pair(pushforward(Cis{}, pushforward(Homothety{2.0, 1}, interval(0.0, 1.0))), psi),
                  UnsupportedPattern);
}

TEST_CASE("box boundary") {
  const Dist square = box({{0.0, 1.0}, {0.0, 1.0}});
  CHECK(pair(box_boundary(square), Poly::constant(2, 1.0)) == doctest::Approx(0.0));
  CHECK(pair(box_boundary(square), P("x", 2)) == doctest::Approx(1.0));
  const Dist rect = box({{-1.0, 2.0}, {0.5, 3.0}});
  const Poly a = P("x^2*y", 2);
  const Poly b = P("y^3 - x", 2);
  CHECK(pair(box_boundary(rect), 2.0 * a - b) ==
        doctest::Approx(2.0 * pair(box_boundary(rect), a) - pair(box_boundary(rect), b)));
  CHECK_THROWS(box_boundary(interval(0.0, 1.0)));
}

TEST_CASE("differential operators") {
  CHECK(pair(apply_operator(DiffOperator::laplacian(1), dirac({0.0})), P("x^2", 1)) == 2.0);
  CHECK(pair(apply_operator(DiffOperator::ddx(), interval(0.0, 1.0)), P("x^2", 1)) == doctest::Approx(1.0));
  CHECK(pair(apply_operator(DiffOperator::laplacian(2), ball_unit(2)), P("x^2 + y^2", 2)) ==
        doctest::Approx(4.0 * kPi));
  const DiffOperator dx = DiffOperator::directional(VectorField({Poly::constant(1, 1.0)}));
  CHECK(dx(P("x^3", 1)) == P("3*x^2", 1));
}

TEST_CASE("integration by substitution") {
  auto [lhs, rhs] = ibs_pair(P("x^2", 1), 0.0, 2.0);
  CHECK(pair(lhs, P("x", 1)) == doctest::Approx(8.0));
  CHECK(pair(rhs, P("x", 1)) == doctest::Approx(8.0));
  auto [l2, r2] = ibs_pair(Poly::constant(1, 3.0), -1.0, 1.0);
  CHECK(pair(l2, P("x^4 + 1", 1)) == 0.0);
  CHECK(pair(r2, P("x^4 + 1", 1)) == 0.0);
  auto [l3, r3] = ibs_pair(P("x", 1), -0.5, 0.7);
  CHECK(pair(l3, P("x^5", 1)) == doctest::Approx(pair(interval(-0.5, 0.7), P("x^5", 1))));
  CHECK(pair(r3, P("x^5", 1)) == doctest::Approx(pair(interval(-0.5, 0.7), P("x^5", 1))));
}

TEST_CASE("linear combinations") {
  const Dist d = 2.0 * dirac({1.0}) - interval(0.0, 1.0);
  CHECK(pair(d, P("x", 1)) == doctest::Approx(1.5));
  CHECK(pair(zero_dist(3), P("x + 7", 3)) == 0.0);
}

TEST_CASE("json form") {
  const Dist d = pushforward(Homothety{2.0, 2}, multiply(P("x*y", 2), box({{0.0, 1.0}, {2.0, 3.0}})));
  const auto j = to_json(d);
  CHECK(j["type"] == "pushforward");
  CHECK(j["args"]["map"]["kind"] == "homothety");
  REQUIRE(j["children"].size() == 1);
  CHECK(j["children"][0]["type"] == "mult_fn");
  CHECK(j["children"][0]["args"]["g"] == "x*y");
  CHECK(j["children"][0]["children"][0]["type"] == "box");
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto node = to_json(random_dist(rng, 3, 3));
    CHECK(node.contains("type"));
    CHECK(node.contains("args"));
    CHECK(node.contains("children"));
  }
}
