#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "xqcalc/poly.hpp"
#include "xqcalc/quadrature.hpp"

namespace xqcalc {

/// Raised by the exact interpreter on a tree outside its declared domain
/// (trigonometric pushforwards not sitting directly on an Interval or Box, or
/// on a chain of maps ending in a Dirac mass).
/// Such trees can still be paired with pair_callable.
class UnsupportedPattern : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Smooth maps usable in pushforwards.

/// x -> factor * x on R^dim.
struct Homothety {
  double factor;
  int dim;
};

/// Coordinate projection R^source_dim -> R^keep.size(), keeping the listed axes.
struct Projection {
  int source_dim;
  std::vector<int> keep;
};

/// theta -> (cos theta, sin theta), R -> R^2.
struct Cis {};

/// (theta, phi) -> (cos theta sin phi, sin theta sin phi, cos phi), R^2 -> R^3.
struct Sph {};

class SmoothMap {
 public:
  using Variant = std::variant<PolyMap, Homothety, Projection, Cis, Sph>;

  SmoothMap(PolyMap m) : v_(std::move(m)) {}  // NOLINT: implicit by design of the variant
  SmoothMap(Homothety h);                     // NOLINT
  SmoothMap(Projection p);                    // NOLINT
  SmoothMap(Cis c) : v_(c) {}                 // NOLINT
  SmoothMap(Sph s) : v_(s) {}                 // NOLINT

  const Variant& variant() const { return v_; }
  int source_dim() const;
  int target_dim() const;
  /// True for PolyMap, Homothety and Projection: pullback stays polynomial.
  bool is_polynomial() const;

  std::vector<double> operator()(std::span<const double> point) const;
  /// psi o map; throws UnsupportedPattern for Cis/Sph.
  Poly pullback(const Poly& psi) const;

 private:
  Variant v_;
};

/// The projection (x, y, z) -> (x, y).
Projection xy_projection();

// ---------------------------------------------------------------------------

/// Finite sum of polynomial-coefficient partial derivatives,
/// D(psi) = sum_k coeff_k * d^{alpha_k} psi.
///
/// Distributions are acted on by adjunction, <D(T), psi> := <T, D(psi)>. For
/// the first-order operator d/dx this gives <T', psi> = <T, psi'>, with no
/// minus sign: it is NOT the classical distributional derivative. Second-order
/// operators such as the Laplacian agree with the classical convention.
class DiffOperator {
 public:
  struct Term {
    Poly coeff;
    Exponent alpha;
  };

  DiffOperator(int dim, std::vector<Term> terms);

  static DiffOperator laplacian(int dim);
  /// D_X = sum_i X_i d/dx_i.
  static DiffOperator directional(const VectorField& x);
  /// d/dx on R.
  static DiffOperator ddx();
  static DiffOperator zero(int dim) { return DiffOperator(dim, {}); }

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }

  Poly operator()(const Poly& psi) const;

 private:
  int dim_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------

namespace detail {
struct DistNode;
}

/// Immutable expression tree for a distribution of compact support on R^n.
/// Copies share structure.
class Dist {
 public:
  int dim() const;
  const detail::DistNode& node() const { return *node_; }

  explicit Dist(std::shared_ptr<const detail::DistNode> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const detail::DistNode> node_;
};

enum class ProductOrder { standard, reversed };

struct DiracNode {
  std::vector<double> point;
};
struct IntervalNode {
  double a, b;
};
struct BoxNode {
  std::vector<std::pair<double, double>> sides;
};
struct SphereUnitNode {
  int n;
};
struct BallUnitNode {
  int n;
};
struct PushforwardNode {
  SmoothMap map;
  Dist inner;
};
struct MultFnNode {
  Poly g;
  Dist inner;
};
struct OpImageNode {
  DiffOperator op;
  Dist inner;
};
struct LinCombNode {
  int dim;
  std::vector<std::pair<double, Dist>> terms;
};
struct ExtProductNode {
  Dist left;
  Dist right;
  ProductOrder order;
};

namespace detail {
struct DistNode {
  using Variant = std::variant<DiracNode, IntervalNode, BoxNode, SphereUnitNode, BallUnitNode,
                               PushforwardNode, MultFnNode, OpImageNode, LinCombNode,
                               ExtProductNode>;
  Variant v;
  int dim;
};
}  // namespace detail

// Constructors. All validate dimensions and throw DimensionError.
Dist dirac(std::vector<double> point);
/// The functional psi -> Psi(b) - Psi(a); a > b and a == b are legal.
Dist interval(double a, double b);
Dist box(std::vector<std::pair<double, double>> sides);
Dist sphere_unit(int n);
/// B = integral over u in [0, 1] of the undiluted spheres S_u.
Dist ball_unit(int n);
Dist pushforward(const SmoothMap& map, const Dist& t);
/// g . T, with <g . T, psi> = <T, g psi>.
Dist multiply(const Poly& g, const Dist& t);
Dist apply_operator(const DiffOperator& op, const Dist& t);
Dist lincomb(int dim, std::vector<std::pair<double, Dist>> terms);
Dist zero_dist(int dim);
Dist scale(double c, const Dist& t);
Dist operator+(const Dist& a, const Dist& b);
Dist operator-(const Dist& a, const Dist& b);
Dist operator*(double c, const Dist& t);
/// P x Q (standard): <P, m -> <Q, psi(m, -)>>; reversed swaps the nesting.
/// The two agree on boxes but not in general.
Dist ext_product(const Dist& left, const Dist& right, ProductOrder order = ProductOrder::standard);

/// Exact pairing <T, psi> for polynomial test functions.
double pair(const Dist& t, const Poly& psi);

struct Pairing {
  double value;
  /// Some derivative had to be approximated by finite differences.
  bool finite_difference;
};

/// Pairing against an arbitrary smooth function, by quadrature over the
/// parameter domains of Interval/Box/sphere nodes.
Pairing pair_callable(const Dist& t, const SmoothFn& f, const QuadConfig& cfg = {});

/// <T, 1>.
double total(const Dist& t);

/// Signed boundary of [a,b] x [c,d]:
/// (p^2_c)_*[a,b] + (p^1_b)_*[c,d] - (p^2_d)_*[a,b] - (p^1_a)_*[c,d],
/// with p^2_c(x) = (x, c) and p^1_b(y) = (b, y).
Dist box_boundary(const Dist& rectangle);

/// Both sides of g_*(g' . [a,b]) = [g(a), g(b)].
std::pair<Dist, Dist> ibs_pair(const Poly& g, double a, double b);

}  // namespace xqcalc
