#pragma once

#include <utility>

#include "xqcalc/dist.hpp"
#include "xqcalc/poly.hpp"

namespace xqcalc {

/// <S, x^m> for the unit sphere S of R^n, n = 1, 2, 3:
///   n = 1: S = delta(1) + delta(-1), so 2 when m is even and 0 otherwise
///   n = 2: S = cis_*([0, 2 pi]), a full Wallis moment
///   n = 3: S = sin(phi) . sph_*([0, 2 pi] x [0, pi]), a full times a half moment
double sphere_moment(int n, const Exponent& m);

/// <B, x^m> = <S, x^m> / (n + |m|), from B = int_0^1 S_u du.
double ball_moment(int n, const Exponent& m);

enum class FamilyKind {
  sphere_diluted,    // S^t = H^t_*(S)
  sphere_undiluted,  // S_t = t^{n-1} S^t
  ball_diluted,      // B^t = H^t_*(B)
  ball_undiluted,    // B_t = t^n B^t
};

struct Family {
  FamilyKind kind;
  int dim;
};

/// <F(t), psi> as an exact polynomial in t. Valid for every real t,
/// including zero and negative values.
UniPoly pair_family(const Family& f, const Poly& psi);

/// The concrete distribution F(t) as a tree.
Dist family_at(const Family& f, double t);

/// (<B_t, psi>, int_0^t <S_v, psi> dv); the two agree.
std::pair<UniPoly, UniPoly> ball_as_integral_check(int n, const Poly& psi);

/// Flux of F through the unit sphere, <S, u -> F(u) . u>.
double flux_unit_sphere(const VectorField& f);

/// Relative coefficient gap in div(F o H_t) = t (div F) o H_t.
double homothety_divergence_gap(const VectorField& f, double t);

/// Relative gap in <B, t^n phi o H_t> = <B_t, phi>.
double homothety_volume_gap(const Poly& phi, double t);

/// Two sides of a t-polynomial identity.
struct Sides {
  UniPoly lhs;
  UniPoly rhs;

  double relative_gap() const { return xqcalc::relative_gap(lhs, rhs); }
};

/// d/dt <S^t, psi> = t <B^t, Laplace psi>, any dimension.
Sides expanding_sphere_identity(const Poly& psi);
/// d/dt <B_t, psi> = <S_t, psi>.
Sides ball_growth_identity(const Poly& psi);
/// d/dt <S_t, psi> = <B_t, Laplace psi>; dimension 1 only.
Sides shell_growth_identity(const Poly& psi);
/// t d/dt <S_t, psi> = (n-1) <S_t, psi> + t <B_t, Laplace psi>.
Sides weighted_shell_identity(const Poly& psi);
/// t d/dt <B^t, psi> = <S^t, psi> - n <B^t, psi>.
Sides diluted_ball_identity(const Poly& psi);

}  // namespace xqcalc
