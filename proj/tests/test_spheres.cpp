#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "xqcalc/parse.hpp"
#include "xqcalc/random.hpp"
#include "xqcalc/spheres.hpp"

using namespace xqcalc;

namespace {
Poly P(const char* text, int dim) { return parse_poly(text, dim); }
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("sphere and ball totals") {
  const double sphere[] = {2.0, 2.0 * kPi, 4.0 * kPi};
  const double ball[] = {2.0, kPi, 4.0 * kPi / 3.0};
  for (int n = 1; n <= 3; ++n) {
    CHECK(total(sphere_unit(n)) == doctest::Approx(sphere[n - 1]).epsilon(1e-12));
    CHECK(total(ball_unit(n)) == doctest::Approx(ball[n - 1]).epsilon(1e-12));
  }
}

TEST_CASE("sphere moments against an independent integral") {
  CHECK(sphere_moment(3, {0, 0, 2}) == doctest::Approx(oracle::sphere3_moment(0, 0, 2)).epsilon(1e-9));
  CHECK(sphere_moment(3, {0, 0, 2}) == doctest::Approx(4.0 * kPi / 3.0));
  for (auto e : {Exponent{2, 2, 0}, Exponent{4, 0, 2}, Exponent{1, 0, 1}, Exponent{0, 6, 2}})
    CHECK(std::abs(sphere_moment(3, e) - oracle::sphere3_moment(e[0], e[1], e[2])) < 1e-9);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      const double ref = oracle::simpson(
          [&](double t) { return std::pow(std::cos(t), a) * std::pow(std::sin(t), b); }, 0.0, 2.0 * kPi);
      CHECK(std::abs(sphere_moment(2, {a, b, 0}) - ref) < 1e-10);
    }
  CHECK(sphere_moment(1, {4, 0, 0}) == 2.0);
  CHECK(sphere_moment(1, {3, 0, 0}) == 0.0);
}

TEST_CASE("ball moments against shell integration") {
  // <B, psi> = int_0^1 u^{n-1} <S, psi(u .)> du, done by hand for monomials
  for (int n = 1; n <= 3; ++n)
    for (const auto& e : monomials(n, 6)) {
      const int d = total_degree(e);
      const double ref = oracle::simpson([&](double u) { return std::pow(u, n - 1 + d); }, 0.0, 1.0) *
                         sphere_moment(n, e);
      CHECK(ball_moment(n, e) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("families as polynomials in t") {
  CHECK(pair_family({FamilyKind::sphere_diluted, 2}, P("x^2", 2)) == UniPoly({0.0, 0.0, kPi}));
  const UniPoly b2 = pair_family({FamilyKind::ball_undiluted, 2}, P("x^2", 2));
  CHECK(relative_gap(b2, UniPoly::monomial(4, kPi / 4.0)) < 1e-15);
  const UniPoly b1 = pair_family({FamilyKind::ball_undiluted, 1}, P("x^2", 1));
  const double ref = oracle::simpson([](double x) { return x * x; }, -1.0, 1.0);
  CHECK(relative_gap(b1, UniPoly::monomial(3, ref)) < 1e-12);
}

TEST_CASE("families at a fixed time") {
  Rng rng(21);
  for (int n = 1; n <= 3; ++n) {
    const Poly psi = random_poly(rng, n, 6) + Poly::constant(n, 1.0);
    const std::vector<double> origin(static_cast<std::size_t>(n), 0.0);
    const double s0 = pair(family_at({FamilyKind::sphere_diluted, n}, 0.0), psi);
    CHECK(s0 == doctest::Approx(total(sphere_unit(n)) * psi(origin)));
    CHECK(pair(family_at({FamilyKind::ball_undiluted, n}, 0.0), psi) == 0.0);
    for (double t : {-1.5, 0.0, 0.7, 2.0})
      for (auto k : {FamilyKind::sphere_diluted, FamilyKind::sphere_undiluted, FamilyKind::ball_diluted,
                     FamilyKind::ball_undiluted})
        CHECK(pair(family_at({k, n}, t), psi) == doctest::Approx(pair_family({k, n}, psi)(t)));
  }
  const Poly q = P("x^4 - x + 2", 1);
  for (double t : {-2.0, 0.5, 3.0})
    CHECK(pair(family_at({FamilyKind::sphere_undiluted, 1}, t), q) ==
          pair(family_at({FamilyKind::sphere_diluted, 1}, t), q));
}

TEST_CASE("ball as an integral of shells") {
  auto [b, s] = ball_as_integral_check(1, Poly::constant(1, 1.0));
  CHECK(b == UniPoly({0.0, 2.0}));
  CHECK(s == UniPoly({0.0, 2.0}));
  auto [b2, s2] = ball_as_integral_check(2, P("x^2", 2));
  CHECK(relative_gap(b2, UniPoly::monomial(4, kPi / 4.0)) < 1e-15);
  CHECK(relative_gap(s2, UniPoly::monomial(4, kPi / 4.0)) < 1e-15);
  auto [b3, s3] = ball_as_integral_check(3, Poly::constant(3, 1.0));
  CHECK(relative_gap(b3, UniPoly::monomial(3, 4.0 * kPi / 3.0)) < 1e-15);
  CHECK(relative_gap(s3, b3) < 1e-15);
}

TEST_CASE("flux through the unit sphere") {
  CHECK(flux_unit_sphere(VectorField({P("x", 2), P("y", 2)})) == doctest::Approx(2.0 * kPi));
  CHECK(flux_unit_sphere(VectorField({Poly::constant(2, 1.0), Poly(2)})) == doctest::Approx(0.0));
  CHECK(flux_unit_sphere(VectorField({P("x", 1)})) == 2.0);
}

TEST_CASE("homothety rules") {
  CHECK(homothety_divergence_gap(VectorField({P("x^2", 2), Poly(2)}), 2.0) == 0.0);
  CHECK(homothety_volume_gap(Poly::constant(2, 1.0), 1.7) < 1e-15);
  CHECK(homothety_volume_gap(P("x^2", 2), -0.8) < 1e-15);
}

TEST_CASE("growth identities") {
  Rng rng(8);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < 30; ++i) {
      const Poly psi = random_poly(rng, n, 8);
      CHECK(expanding_sphere_identity(psi).relative_gap() < 1e-12);
      CHECK(ball_growth_identity(psi).relative_gap() < 1e-12);
      CHECK(weighted_shell_identity(psi).relative_gap() < 1e-12);
      CHECK(diluted_ball_identity(psi).relative_gap() < 1e-12);
      if (n == 1) CHECK(shell_growth_identity(psi).relative_gap() < 1e-12);
    }
  CHECK_THROWS_AS(shell_growth_identity(P("x", 2)), DimensionError);
}
