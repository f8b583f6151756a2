#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "xqcalc/dist.hpp"
#include "xqcalc/poly.hpp"
#include "xqcalc/spheres.hpp"

namespace xqcalc {

/// Fundamental solutions Q : R -> D'_c(R^n) of d^2/dt^2 Q = Laplace Q.
enum class SolutionKind {
  dim1_s,  // t -> S^t on R
  dim1_b,  // t -> B_t on R
  dim3_p,  // t -> S^t + t^2 Laplace(B^t) on R^3
  dim3_q,  // t -> t S^t on R^3
  dim2_p,  // t -> p_*(S^t + t^2 Laplace(B^t)), p the projection R^3 -> R^2
  dim2_q,  // t -> p_*(t S^t)
};

inline constexpr SolutionKind kAllSolutionKinds[] = {
    SolutionKind::dim1_s, SolutionKind::dim1_b, SolutionKind::dim3_p,
    SolutionKind::dim3_q, SolutionKind::dim2_p, SolutionKind::dim2_q};

int output_dim(SolutionKind k);
std::string_view name(SolutionKind k);
std::optional<SolutionKind> parse_solution_kind(std::string_view text);

/// <Q(t), psi> as an exact polynomial in t.
UniPoly pair_solution(SolutionKind k, const Poly& psi);

/// <q_*(Q(t)), psi> for a 3-dimensional kind pushed along a projection q.
UniPoly pair_projected_solution(SolutionKind k, const Projection& q, const Poly& psi);

/// Q(t) as a concrete tree.
Dist solution_at(SolutionKind k, double t);

/// Both sides of the wave equation paired with psi:
/// lhs = d^2/dt^2 <Q(t), psi>, rhs = <Q(t), Laplace psi>.
Sides wave_sides(SolutionKind k, const Poly& psi);
UniPoly wave_residual(SolutionKind k, const Poly& psi);

/// (<Q(0), psi>, <Q'(0), psi>).
std::pair<double, double> initial_state_pair(SolutionKind k, const Poly& psi);

struct InitialState {
  Dist position;
  Dist velocity;
};

/// The initial state each kind is a fundamental solution for:
/// constant multiples of (delta(0), 0) or (0, delta(0)).
InitialState initial_state(SolutionKind k);

/// Truncated power series sum_j t^j coeffs[j] with distribution coefficients;
/// a formal solution on t with t^order = 0.
struct Jet {
  std::vector<Dist> coeffs;

  int order() const { return static_cast<int>(coeffs.size()); }
  UniPoly pair(const Poly& psi) const;
};

/// e^{t op}(v) up to t^{order-1}: coeffs[j] = op^j(v) / j!.
Jet jet_first_order(const DiffOperator& op, const Dist& v, int order);

/// Formal solution of F'' = op(F) with F(0) = v, F'(0) = w:
/// coeffs[j] = op^{j/2}(v) / j! for even j and op^{(j-1)/2}(w) / j! for odd j.
Jet jet_second_order(const DiffOperator& op, const Dist& v, const Dist& w, int order);

/// The fundamental jet for a kind: jet_second_order(Laplace, initial_state(k)).
Jet fundamental_jet(SolutionKind k, int order);

/// pair_solution truncated below t^order minus the paired jet.
UniPoly jet_vs_solution(SolutionKind k, const Jet& jet, const Poly& psi);

/// Explains why the three-dimensional nilpotent expansion is checked for
/// t S^t rather than S^t.
extern const std::string_view kDim3ExpansionNote;

}  // namespace xqcalc
