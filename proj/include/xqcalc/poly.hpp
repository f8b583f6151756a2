#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace xqcalc {

/// Raised whenever two objects that must live on the same R^n do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxDim = 3;

/// Exponent tuple in canonical (x, y, z) order. Slots at index >= dim are 0.
using Exponent = std::array<int, kMaxDim>;

int total_degree(const Exponent& e);

/// Sparse multivariate polynomial in 1..3 variables with double coefficients.
///
/// Only exact zeros are pruned; rounding residue is kept on purpose so that
/// downstream tolerances see it.
class Poly {
 public:
  using Terms = std::map<Exponent, double>;

  Poly() : Poly(1) {}
  explicit Poly(int dim);
  Poly(int dim, Terms terms);

  static Poly constant(int dim, double c);
  static Poly variable(int dim, int axis);
  static Poly monomial(int dim, const Exponent& e, double c = 1.0);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  double coeff(const Exponent& e) const;
  double max_abs_coeff() const;

  double operator()(std::span<const double> point) const;
  double operator()(std::initializer_list<double> point) const {
    return (*this)(std::span<const double>(point.begin(), point.size()));
  }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(double c, const Poly& p);
  friend Poly operator*(const Poly& p, double c) { return c * p; }

  bool operator==(const Poly& other) const = default;

 private:
  int dim_;
  Terms terms_;
};

Poly pow(const Poly& p, int k);

Poly partial(const Poly& p, int axis);
/// Applies the multi-index derivative d^alpha.
Poly partial(const Poly& p, const Exponent& alpha);

/// Largest absolute coefficient difference; dimension mismatch throws.
double max_coeff_gap(const Poly& a, const Poly& b);

/// Univariate polynomial in t; coeffs()[k] multiplies t^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<double> coeffs);

  static UniPoly constant(double c) { return UniPoly({c}); }
  /// c * t^k
  static UniPoly monomial(int k, double c = 1.0);

  const std::vector<double>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int k) const;
  double max_abs_coeff() const;

  double operator()(double t) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(double c, const UniPoly& p);
  friend UniPoly operator*(const UniPoly& p, double c) { return c * p; }

  /// Drops every power t^j with j >= order (nilpotent truncation t^order = 0).
  UniPoly truncated(int order) const;
  /// Multiplies by t^k.
  UniPoly shifted(int k) const;

  bool operator==(const UniPoly& other) const = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

UniPoly derivative(const UniPoly& p);
/// The unique primitive vanishing at 0.
UniPoly antiderivative(const UniPoly& p);

/// |a - b|_inf over coefficients, divided by max(|a|_inf, |b|_inf); 0 when
/// both are zero.
double relative_gap(const UniPoly& a, const UniPoly& b);
double relative_gap(double a, double b);

/// Reads a 1-variable Poly as a polynomial in t.
UniPoly to_unipoly(const Poly& p);
Poly to_poly(const UniPoly& p);

/// Polynomial map R^m -> R^n given by n component polynomials in m variables.
class PolyMap {
 public:
  PolyMap(int source_dim, std::vector<Poly> components);

  static PolyMap identity(int dim);

  int source_dim() const { return source_dim_; }
  int target_dim() const { return static_cast<int>(components_.size()); }
  const std::vector<Poly>& components() const { return components_; }

  std::vector<double> operator()(std::span<const double> point) const;

 private:
  int source_dim_;
  std::vector<Poly> components_;
};

/// p o f, the pullback f^*(p).
Poly compose(const Poly& p, const PolyMap& f);
/// g o f as a map.
PolyMap compose(const PolyMap& g, const PolyMap& f);

class VectorField {
 public:
  explicit VectorField(std::vector<Poly> components);

  int dim() const { return static_cast<int>(components_.size()); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Poly> components_;
};

VectorField grad(const Poly& p);
Poly div(const VectorField& f);
Poly laplace(const Poly& p);
/// F o g componentwise.
VectorField compose(const VectorField& f, const PolyMap& g);

}  // namespace xqcalc
