#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "xqcalc/parse.hpp"
#include "xqcalc/random.hpp"
#include "xqcalc/wave.hpp"

using namespace xqcalc;

namespace {
Poly P(const char* text, int dim) { return parse_poly(text, dim); }
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("kind names") {
  for (SolutionKind k : kAllSolutionKinds) {
    CHECK(parse_solution_kind(name(k)) == k);
  }
  CHECK(parse_solution_kind("dim3_q") == SolutionKind::dim3_q);
  CHECK_FALSE(parse_solution_kind("dim4-q").has_value());
  CHECK(output_dim(SolutionKind::dim2_p) == 2);
}

TEST_CASE("solution pairings") {
  CHECK(relative_gap(pair_solution(SolutionKind::dim3_q, P("x^2", 3)), UniPoly::monomial(3, 4.0 * kPi / 3.0)) <
        1e-15);
  CHECK(pair_solution(SolutionKind::dim1_s, Poly::constant(1, 1.0)) == UniPoly({2.0}));
  CHECK(relative_gap(pair_solution(SolutionKind::dim2_q, Poly::constant(2, 1.0)), UniPoly({0.0, 4.0 * kPi})) <
        1e-15);
  CHECK(pair_solution(SolutionKind::dim1_b, P("x^2", 1))(-1.0) == doctest::Approx(-2.0 / 3.0));
}

TEST_CASE("wave equation residuals") {
  const UniPoly q = pair_solution(SolutionKind::dim3_q, P("x^2", 3));
  CHECK(derivative(derivative(q)).coeff(1) == doctest::Approx(8.0 * kPi));
  CHECK(wave_residual(SolutionKind::dim3_q, P("x^2", 3)).max_abs_coeff() < 1e-12);
  const Sides b = wave_sides(SolutionKind::dim1_b, P("x^2", 1));
  CHECK(b.lhs.coeff(1) == doctest::Approx(4.0));
  CHECK(b.rhs.coeff(1) == doctest::Approx(4.0));
  Rng rng(2);
  for (SolutionKind k : kAllSolutionKinds) {
    CHECK(wave_residual(k, Poly(output_dim(k))).is_zero());
    for (int i = 0; i < 20; ++i)
      CHECK(wave_sides(k, random_poly(rng, output_dim(k), 8)).relative_gap() < 1e-12);
  }
}

TEST_CASE("initial states") {
  const Poly p1 = P("x^2 - 3*x + 5", 1);
  const Poly p3 = P("x*y + z^2 - 2", 3);
  const Poly p2 = P("x^3 + y + 4", 2);
  auto [s0, s1] = initial_state_pair(SolutionKind::dim1_s, p1);
  CHECK(s0 == doctest::Approx(10.0));
  CHECK(s1 == 0.0);
  auto [q0, q1] = initial_state_pair(SolutionKind::dim3_q, p3);
  CHECK(q0 == 0.0);
  CHECK(q1 == doctest::Approx(-8.0 * kPi));
  auto [r0, r1] = initial_state_pair(SolutionKind::dim2_p, p2);
  CHECK(r0 == doctest::Approx(16.0 * kPi));
  CHECK(r1 == 0.0);
  for (SolutionKind k : kAllSolutionKinds) {
    const Poly psi = Poly::constant(output_dim(k), 1.0) + Poly::variable(output_dim(k), 0);
    const InitialState st = initial_state(k);
    auto [a, b] = initial_state_pair(k, psi);
    CHECK(pair(st.position, psi) == doctest::Approx(a));
    CHECK(pair(st.velocity, psi) == doctest::Approx(b));
  }
}

TEST_CASE("solutions as trees") {
  Rng rng(6);
  for (SolutionKind k : kAllSolutionKinds)
    for (double t : {-1.0, 0.0, 0.6, 2.0}) {
      const Poly psi = random_poly(rng, output_dim(k), 6);
      CHECK(pair(solution_at(k, t), psi) == doctest::Approx(pair_solution(k, psi)(t)));
    }
}

TEST_CASE("projected solutions") {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const Poly psi = random_poly(rng, 2, 6);
    const Poly lifted = compose(psi, PolyMap(3, {Poly::variable(3, 0), Poly::variable(3, 1)}));
    CHECK(relative_gap(pair_solution(SolutionKind::dim2_q, psi), pair_solution(SolutionKind::dim3_q, lifted)) <
          1e-15);
    CHECK(relative_gap(pair_solution(SolutionKind::dim2_p, psi),
                       pair_projected_solution(SolutionKind::dim3_p, xy_projection(), psi)) < 1e-15);
  }
}

TEST_CASE("first-order jets") {
  const Jet j = jet_first_order(DiffOperator::laplacian(1), dirac({0.0}), 3);
  REQUIRE(j.order() == 3);
  const UniPoly paired = j.pair(P("x^2", 1));
  CHECK(paired == UniPoly({0.0, 2.0}));
  CHECK(jet_first_order(DiffOperator::laplacian(2), dirac({0.0, 0.0}), 1).order() == 1);
  const Jet z = jet_first_order(DiffOperator::zero(1), dirac({0.5}), 4);
  CHECK(z.pair(P("x + 1", 1)) == UniPoly({1.5}));
}

TEST_CASE("second-order jets") {
  const Jet j = jet_second_order(DiffOperator::laplacian(3), zero_dist(3), scale(4.0 * kPi, dirac({0.0, 0.0, 0.0})), 5);
  const Poly psi = P("x^2 + y*z + 3", 3);
  const UniPoly paired = j.pair(psi);
  CHECK(paired.coeff(0) == 0.0);
  CHECK(paired.coeff(1) == doctest::Approx(12.0 * kPi));
  CHECK(paired.coeff(3) == doctest::Approx(4.0 * kPi / 6.0 * 2.0));
  CHECK(paired.coeff(4) == 0.0);
  const Jet two = jet_second_order(DiffOperator::laplacian(1), dirac({0.0}), zero_dist(1), 2);
  CHECK(two.pair(P("x^2 + 1", 1)) == UniPoly({1.0}));
  Rng rng(30);
  const Jet r = jet_second_order(DiffOperator::laplacian(2), random_dist(rng, 2, 1), random_dist(rng, 2, 1), 8);
  for (int i = 0; i < 10; ++i) {
    const Poly q = random_poly(rng, 2, 8);
    for (int k = 0; k + 2 < 8; ++k) {
      const double lhs = (k + 2.0) * (k + 1.0) * pair(r.coeffs[static_cast<std::size_t>(k + 2)], q);
      const double rhs = pair(apply_operator(DiffOperator::laplacian(2), r.coeffs[static_cast<std::size_t>(k)]), q);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("nilpotent expansions") {
  const UniPoly b = pair_solution(SolutionKind::dim1_b, P("x^2", 1)).truncated(5);
  CHECK(relative_gap(b, UniPoly::monomial(3, 2.0 / 3.0)) < 1e-15);
  CHECK(relative_gap(fundamental_jet(SolutionKind::dim1_b, 5).pair(P("x^2", 1)), b) < 1e-15);
  const UniPoly q = pair_solution(SolutionKind::dim3_q, Poly::constant(3, 1.0)).truncated(5);
  CHECK(relative_gap(q, UniPoly({0.0, 4.0 * kPi})) < 1e-15);
  const Poly x4 = P("x^4", 3);
  CHECK(jet_vs_solution(SolutionKind::dim3_q, fundamental_jet(SolutionKind::dim3_q, 5), x4).max_abs_coeff() < 1e-12);
  for (SolutionKind k : kAllSolutionKinds) {
    const Poly psi = Poly::constant(output_dim(k), 2.0) + Poly::variable(output_dim(k), 0);
    CHECK(jet_vs_solution(k, fundamental_jet(k, 1), psi).is_zero());
  }
  CHECK_FALSE(kDim3ExpansionNote.empty());
}
