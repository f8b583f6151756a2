#include "xqcalc/wave.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace xqcalc {

const std::string_view kDim3ExpansionNote =
    "dimension-3 expansion compared with left side t*S^t: the solution with initial state "
    "(0, 4*pi*delta(0)) is t*S^t; S^t itself has total 4*pi for every t, while "
    "4*pi*[t*delta(0) + (t^3/3!)*Laplace(delta(0))] has total 4*pi*t, so the identity cannot "
    "hold with S^t on the left";

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

bool is_p_kind(SolutionKind k) { return k == SolutionKind::dim3_p || k == SolutionKind::dim2_p; }

void require_dim3(SolutionKind k) {
  if (k != SolutionKind::dim3_p && k != SolutionKind::dim3_q)
    throw std::invalid_argument("projected solutions start from a three-dimensional kind");
}

void require_psi(SolutionKind k, const Poly& psi) {
  if (psi.dim() != output_dim(k))
    throw DimensionError("solution " + std::string(name(k)) + " lives on R^" +
                         std::to_string(output_dim(k)) + ", test function has dimension " +
                         std::to_string(psi.dim()));
}

UniPoly pair_dim3(bool p_kind, const Poly& psi) {
  const UniPoly sphere = pair_family({FamilyKind::sphere_diluted, 3}, psi);
  if (p_kind)
    return sphere + pair_family({FamilyKind::ball_diluted, 3}, laplace(psi)).shifted(2);
  return sphere.shifted(1);
}

}  // namespace

int output_dim(SolutionKind k) {
  switch (k) {
    case SolutionKind::dim1_s:
    case SolutionKind::dim1_b:
      return 1;
    case SolutionKind::dim2_p:
    case SolutionKind::dim2_q:
      return 2;
    default:
      return 3;
  }
}

std::string_view name(SolutionKind k) {
  switch (k) {
    case SolutionKind::dim1_s: return "dim1-s";
    case SolutionKind::dim1_b: return "dim1-b";
    case SolutionKind::dim3_p: return "dim3-p";
    case SolutionKind::dim3_q: return "dim3-q";
    case SolutionKind::dim2_p: return "dim2-p";
    case SolutionKind::dim2_q: return "dim2-q";
  }
  return "?";
}

std::optional<SolutionKind> parse_solution_kind(std::string_view text) {
  for (SolutionKind k : kAllSolutionKinds) {
    std::string alt(name(k));
    alt[4] = '_';
    if (text == name(k) || text == alt) return k;
  }
  return std::nullopt;
}

UniPoly pair_solution(SolutionKind k, const Poly& psi) {
  require_psi(k, psi);
  switch (k) {
    case SolutionKind::dim1_s:
      return pair_family({FamilyKind::sphere_diluted, 1}, psi);
    case SolutionKind::dim1_b:
      return pair_family({FamilyKind::ball_undiluted, 1}, psi);
    case SolutionKind::dim3_p:
    case SolutionKind::dim3_q:
      return pair_dim3(is_p_kind(k), psi);
    case SolutionKind::dim2_p:
    case SolutionKind::dim2_q:
      return pair_dim3(is_p_kind(k), SmoothMap(xy_projection()).pullback(psi));
  }
  return {};
}

UniPoly pair_projected_solution(SolutionKind k, const Projection& q, const Poly& psi) {
  require_dim3(k);
  const SmoothMap map(q);
  if (map.source_dim() != 3) throw DimensionError("projection must start from R^3");
  return pair_dim3(is_p_kind(k), map.pullback(psi));
}

Dist solution_at(SolutionKind k, double t) {
  auto dim3 = [t](bool p_kind) {
    const Dist sphere = family_at({FamilyKind::sphere_diluted, 3}, t);
    if (!p_kind) return scale(t, sphere);
    const Dist ball = family_at({FamilyKind::ball_diluted, 3}, t);
    return lincomb(3, {{1.0, sphere}, {t * t, apply_operator(DiffOperator::laplacian(3), ball)}});
  };
  switch (k) {
    case SolutionKind::dim1_s:
      return family_at({FamilyKind::sphere_diluted, 1}, t);
    case SolutionKind::dim1_b:
      return family_at({FamilyKind::ball_undiluted, 1}, t);
    case SolutionKind::dim3_p:
    case SolutionKind::dim3_q:
      return dim3(is_p_kind(k));
    case SolutionKind::dim2_p:
    case SolutionKind::dim2_q:
      return pushforward(xy_projection(), dim3(is_p_kind(k)));
  }
  throw std::invalid_argument("unknown solution kind");
}

Sides wave_sides(SolutionKind k, const Poly& psi) {
  return {derivative(derivative(pair_solution(k, psi))), pair_solution(k, laplace(psi))};
}

UniPoly wave_residual(SolutionKind k, const Poly& psi) {
  const Sides s = wave_sides(k, psi);
  return s.lhs - s.rhs;
}

std::pair<double, double> initial_state_pair(SolutionKind k, const Poly& psi) {
  const UniPoly q = pair_solution(k, psi);
  return {q.coeff(0), q.coeff(1)};
}

InitialState initial_state(SolutionKind k) {
  const int n = output_dim(k);
  const Dist delta = dirac(std::vector<double>(static_cast<std::size_t>(n), 0.0));
  const Dist zero = zero_dist(n);
  switch (k) {
    case SolutionKind::dim1_s:
      return {scale(2.0, delta), zero};
    case SolutionKind::dim1_b:
      return {zero, scale(2.0, delta)};
    case SolutionKind::dim3_p:
    case SolutionKind::dim2_p:
      return {scale(kFourPi, delta), zero};
    case SolutionKind::dim3_q:
    case SolutionKind::dim2_q:
      return {zero, scale(kFourPi, delta)};
  }
  throw std::invalid_argument("unknown solution kind");
}

UniPoly Jet::pair(const Poly& psi) const {
  std::vector<double> c;
  c.reserve(coeffs.size());
  for (const auto& d : coeffs) c.push_back(xqcalc::pair(d, psi));
  return UniPoly(std::move(c));
}

Jet jet_first_order(const DiffOperator& op, const Dist& v, int order) {
  if (order < 1) throw std::invalid_argument("jet order must be >= 1");
  Jet jet;
  jet.coeffs.push_back(v);
  for (int j = 1; j < order; ++j)
    jet.coeffs.push_back(scale(1.0 / j, apply_operator(op, jet.coeffs.back())));
  return jet;
}

Jet jet_second_order(const DiffOperator& op, const Dist& v, const Dist& w, int order) {
  if (order < 1) throw std::invalid_argument("jet order must be >= 1");
  if (v.dim() != w.dim()) throw DimensionError("initial position and velocity dimensions differ");
  Jet jet;
  jet.coeffs.push_back(v);
  if (order >= 2) jet.coeffs.push_back(w);
  for (int j = 2; j < order; ++j) {
    const Dist& prev = jet.coeffs[static_cast<std::size_t>(j - 2)];
    jet.coeffs.push_back(scale(1.0 / (static_cast<double>(j) * (j - 1)), apply_operator(op, prev)));
  }
  return jet;
}

Jet fundamental_jet(SolutionKind k, int order) {
  const InitialState s = initial_state(k);
  return jet_second_order(DiffOperator::laplacian(output_dim(k)), s.position, s.velocity, order);
}

UniPoly jet_vs_solution(SolutionKind k, const Jet& jet, const Poly& psi) {
  return pair_solution(k, psi).truncated(jet.order()) - jet.pair(psi);
}

}  // namespace xqcalc
