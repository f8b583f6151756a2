#include "xqcalc/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xqcalc/wallis.hpp"

namespace xqcalc {

namespace {

void require_sphere_dim(int n) {
  if (n < 1 || n > 3)
    throw DimensionError("spheres are defined in dimensions 1..3, got " + std::to_string(n));
}

bool is_sphere(FamilyKind k) {
  return k == FamilyKind::sphere_diluted || k == FamilyKind::sphere_undiluted;
}

const UniPoly kT = UniPoly::monomial(1);

}  // namespace

double sphere_moment(int n, const Exponent& m) {
  require_sphere_dim(n);
  switch (n) {
    case 1:
      return m[0] % 2 == 0 ? 2.0 : 0.0;
    case 2:
      return wallis_full(m[0], m[1]);
    default: {
      const double around = wallis_full(m[0], m[1]);
      if (around == 0.0) return 0.0;
      return around * wallis_half(m[0] + m[1] + 1, m[2]);
    }
  }
}

double ball_moment(int n, const Exponent& m) {
  return sphere_moment(n, m) / static_cast<double>(n + total_degree(m));
}

UniPoly pair_family(const Family& f, const Poly& psi) {
  require_sphere_dim(f.dim);
  if (psi.dim() != f.dim)
    throw DimensionError("family of dimension " + std::to_string(f.dim) +
                         " paired with a polynomial of dimension " + std::to_string(psi.dim()));
  const bool sphere = is_sphere(f.kind);
  // pulling back along H^t scales x^m by t^{|m|}
  std::vector<double> coeffs(static_cast<std::size_t>(std::max(psi.degree(), 0)) + 1, 0.0);
  for (const auto& [e, c] : psi.terms()) {
    const double mom = sphere ? sphere_moment(f.dim, e) : ball_moment(f.dim, e);
    coeffs[static_cast<std::size_t>(total_degree(e))] += c * mom;
  }
  UniPoly diluted(std::move(coeffs));
  switch (f.kind) {
    case FamilyKind::sphere_undiluted:
      return diluted.shifted(f.dim - 1);
    case FamilyKind::ball_undiluted:
      return diluted.shifted(f.dim);
    default:
      return diluted;
  }
}

Dist family_at(const Family& f, double t) {
  require_sphere_dim(f.dim);
  const int n = f.dim;
  const Dist base = is_sphere(f.kind) ? sphere_unit(n) : ball_unit(n);
  const Dist diluted = pushforward(Homothety{t, n}, base);
  switch (f.kind) {
    case FamilyKind::sphere_undiluted:
      return scale(std::pow(t, n - 1), diluted);
    case FamilyKind::ball_undiluted:
      return scale(std::pow(t, n), diluted);
    default:
      return diluted;
  }
}

std::pair<UniPoly, UniPoly> ball_as_integral_check(int n, const Poly& psi) {
  return {pair_family({FamilyKind::ball_undiluted, n}, psi),
          antiderivative(pair_family({FamilyKind::sphere_undiluted, n}, psi))};
}

double flux_unit_sphere(const VectorField& f) {
  const int n = f.dim();
  require_sphere_dim(n);
  Poly normal_component(n);
  for (int i = 0; i < n; ++i) normal_component = normal_component + f[i] * Poly::variable(n, i);
  return pair(sphere_unit(n), normal_component);
}

namespace {

PolyMap homothety_map(int n, double t) {
  std::vector<Poly> comps;
  for (int i = 0; i < n; ++i) comps.push_back(t * Poly::variable(n, i));
  return PolyMap(n, std::move(comps));
}

}  // namespace

double homothety_divergence_gap(const VectorField& f, double t) {
  const PolyMap h = homothety_map(f.dim(), t);
  const Poly lhs = div(compose(f, h));
  const Poly rhs = t * compose(div(f), h);
  const double scale = std::max(lhs.max_abs_coeff(), rhs.max_abs_coeff());
  const double gap = max_coeff_gap(lhs, rhs);
  return scale == 0.0 ? gap : gap / scale;
}

double homothety_volume_gap(const Poly& phi, double t) {
  const int n = phi.dim();
  const double lhs = pair(ball_unit(n), std::pow(t, n) * compose(phi, homothety_map(n, t)));
  const double rhs = pair_family({FamilyKind::ball_undiluted, n}, phi)(t);
  return relative_gap(lhs, rhs);
}

Sides expanding_sphere_identity(const Poly& psi) {
  const int n = psi.dim();
  return {derivative(pair_family({FamilyKind::sphere_diluted, n}, psi)),
          kT * pair_family({FamilyKind::ball_diluted, n}, laplace(psi))};
}

Sides ball_growth_identity(const Poly& psi) {
  const int n = psi.dim();
  return {derivative(pair_family({FamilyKind::ball_undiluted, n}, psi)),
          pair_family({FamilyKind::sphere_undiluted, n}, psi)};
}

Sides shell_growth_identity(const Poly& psi) {
  if (psi.dim() != 1) throw DimensionError("shell growth identity holds in dimension 1 only");
  return {derivative(pair_family({FamilyKind::sphere_undiluted, 1}, psi)),
          pair_family({FamilyKind::ball_undiluted, 1}, laplace(psi))};
}

Sides weighted_shell_identity(const Poly& psi) {
  const int n = psi.dim();
  const UniPoly shell = pair_family({FamilyKind::sphere_undiluted, n}, psi);
  return {kT * derivative(shell),
          static_cast<double>(n - 1) * shell +
              kT * pair_family({FamilyKind::ball_undiluted, n}, laplace(psi))};
}

Sides diluted_ball_identity(const Poly& psi) {
  const int n = psi.dim();
  const UniPoly ball = pair_family({FamilyKind::ball_diluted, n}, psi);
  return {kT * derivative(ball),
          pair_family({FamilyKind::sphere_diluted, n}, psi) - static_cast<double>(n) * ball};
}

}  // namespace xqcalc
