#include "xqcalc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xqcalc {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw DimensionError("polynomial dimension must be 1..3, got " + std::to_string(dim));
}

void check_same(int a, int b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

void accumulate(Poly::Terms& terms, const Exponent& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) it->second += c;
}

}  // namespace

int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

Poly::Poly(int dim) : dim_(dim) { check_dim(dim); }

Poly::Poly(int dim, Terms terms) : dim_(dim) {
  check_dim(dim);
  for (auto& [e, c] : terms) {
    for (int i = 0; i < kMaxDim; ++i) {
      if (e[i] < 0) throw std::invalid_argument("negative exponent");
      if (i >= dim && e[i] != 0)
        throw DimensionError("exponent uses an axis beyond dimension " + std::to_string(dim));
    }
    if (c != 0.0) terms_.emplace(e, c);
  }
}

Poly Poly::constant(int dim, double c) { return monomial(dim, Exponent{}, c); }

Poly Poly::variable(int dim, int axis) {
  if (axis < 0 || axis >= dim) throw DimensionError("variable axis out of range");
  Exponent e{};
  e[axis] = 1;
  return monomial(dim, e);
}

Poly Poly::monomial(int dim, const Exponent& e, double c) { return Poly(dim, Terms{{e, c}}); }

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

double Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Poly::operator()(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has dimension " + std::to_string(dim_));
  if (terms_.empty()) return 0.0;
  // power tables per axis, then one product per monomial
  std::array<std::vector<double>, kMaxDim> powers;
  std::array<int, kMaxDim> max_exp{};
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < dim_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  for (int i = 0; i < dim_; ++i) {
    auto& row = powers[i];
    row.resize(static_cast<std::size_t>(max_exp[i]) + 1);
    row[0] = 1.0;
    for (std::size_t k = 1; k < row.size(); ++k) row[k] = row[k - 1] * point[i];
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c;
    for (int i = 0; i < dim_; ++i) term *= powers[i][static_cast<std::size_t>(e[i])];
    sum += term;
  }
  return sum;
}

Poly Poly::operator-() const { return -1.0 * (*this); }

Poly operator+(const Poly& a, const Poly& b) {
  check_same(a.dim_, b.dim_, "poly add");
  Poly::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) accumulate(t, e, c);
  return Poly(a.dim_, std::move(t));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same(a.dim_, b.dim_, "poly sub");
  Poly::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) accumulate(t, e, -c);
  return Poly(a.dim_, std::move(t));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a.dim_, b.dim_, "poly mul");
  Poly::Terms t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      accumulate(t, e, ca * cb);
    }
  }
  return Poly(a.dim_, std::move(t));
}

Poly operator*(double c, const Poly& p) {
  Poly::Terms t;
  for (const auto& [e, v] : p.terms_) t.emplace(e, c * v);
  return Poly(p.dim_, std::move(t));
}

Poly pow(const Poly& p, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly result = Poly::constant(p.dim(), 1.0);
  Poly base = p;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly partial(const Poly& p, int axis) {
  if (axis < 0 || axis >= p.dim()) throw DimensionError("partial: axis out of range");
  Poly::Terms t;
  for (const auto& [e, c] : p.terms()) {
    if (e[axis] == 0) continue;
    Exponent d = e;
    d[axis] -= 1;
    accumulate(t, d, c * e[axis]);
  }
  return Poly(p.dim(), std::move(t));
}

Poly partial(const Poly& p, const Exponent& alpha) {
  Poly r = p;
  for (int axis = 0; axis < kMaxDim; ++axis) {
    if (alpha[axis] != 0 && axis >= p.dim()) throw DimensionError("partial: multi-index too long");
    for (int k = 0; k < alpha[axis]; ++k) r = partial(r, axis);
  }
  return r;
}

double max_coeff_gap(const Poly& a, const Poly& b) { return (a - b).max_abs_coeff(); }

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int k, double c) {
  if (k < 0) throw std::invalid_argument("negative power of t");
  std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double UniPoly::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double UniPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::operator-() const { return -1.0 * (*this); }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<double> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(double c, const UniPoly& p) {
  std::vector<double> v = p.coeffs_;
  for (double& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::truncated(int order) const {
  if (order <= 0) return {};
  std::vector<double> v = coeffs_;
  if (static_cast<int>(v.size()) > order) v.resize(static_cast<std::size_t>(order));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<double> v(static_cast<std::size_t>(k), 0.0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(v));
}

UniPoly derivative(const UniPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<double> v(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) v[k - 1] = static_cast<double>(k) * c[k];
  return UniPoly(std::move(v));
}

UniPoly antiderivative(const UniPoly& p) {
  const auto& c = p.coeffs();
  if (c.empty()) return {};
  std::vector<double> v(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) v[k + 1] = c[k] / static_cast<double>(k + 1);
  return UniPoly(std::move(v));
}

double relative_gap(const UniPoly& a, const UniPoly& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  const double gap = (a - b).max_abs_coeff();
  return scale == 0.0 ? gap : gap / scale;
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  const double gap = std::abs(a - b);
  return scale == 0.0 ? gap : gap / scale;
}

UniPoly to_unipoly(const Poly& p) {
  if (p.dim() != 1) throw DimensionError("to_unipoly needs a 1-variable polynomial");
  std::vector<double> v(static_cast<std::size_t>(std::max(p.degree(), -1) + 1), 0.0);
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e[0])] = c;
  return UniPoly(std::move(v));
}

Poly to_poly(const UniPoly& p) {
  Poly::Terms t;
  for (int k = 0; k <= p.degree(); ++k) t.emplace(Exponent{k, 0, 0}, p.coeff(k));
  return Poly(1, std::move(t));
}

// ---------------------------------------------------------------------------

PolyMap::PolyMap(int source_dim, std::vector<Poly> components)
    : source_dim_(source_dim), components_(std::move(components)) {
  check_dim(source_dim);
  if (components_.empty() || components_.size() > static_cast<std::size_t>(kMaxDim))
    throw DimensionError("polynomial map target dimension must be 1..3");
  for (const auto& c : components_) check_same(c.dim(), source_dim_, "PolyMap component");
}

PolyMap PolyMap::identity(int dim) {
  std::vector<Poly> comps;
  for (int i = 0; i < dim; ++i) comps.push_back(Poly::variable(dim, i));
  return PolyMap(dim, std::move(comps));
}

std::vector<double> PolyMap::operator()(std::span<const double> point) const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c(point));
  return out;
}

Poly compose(const Poly& p, const PolyMap& f) {
  check_same(p.dim(), f.target_dim(), "compose");
  const int m = f.source_dim();
  // cached powers of each component
  std::array<std::vector<Poly>, kMaxDim> powers;
  for (int i = 0; i < p.dim(); ++i) powers[i].push_back(Poly::constant(m, 1.0));
  Poly result(m);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(m, c);
    for (int i = 0; i < p.dim(); ++i) {
      auto& row = powers[i];
      while (static_cast<int>(row.size()) <= e[i]) row.push_back(row.back() * f.components()[i]);
      if (e[i] > 0) term = term * row[static_cast<std::size_t>(e[i])];
    }
    result = result + term;
  }
  return result;
}

PolyMap compose(const PolyMap& g, const PolyMap& f) {
  std::vector<Poly> comps;
  for (const auto& c : g.components()) comps.push_back(compose(c, f));
  return PolyMap(f.source_dim(), std::move(comps));
}

VectorField::VectorField(std::vector<Poly> components) : components_(std::move(components)) {
  if (components_.empty() || components_.size() > static_cast<std::size_t>(kMaxDim))
    throw DimensionError("vector field dimension must be 1..3");
  for (const auto& c : components_) check_same(c.dim(), dim(), "vector field component");
}

VectorField grad(const Poly& p) {
  std::vector<Poly> comps;
  for (int i = 0; i < p.dim(); ++i) comps.push_back(partial(p, i));
  return VectorField(std::move(comps));
}

Poly div(const VectorField& f) {
  Poly r(f.dim());
  for (int i = 0; i < f.dim(); ++i) r = r + partial(f[i], i);
  return r;
}

Poly laplace(const Poly& p) {
  Poly r(p.dim());
  for (int i = 0; i < p.dim(); ++i) r = r + partial(partial(p, i), i);
  return r;
}

VectorField compose(const VectorField& f, const PolyMap& g) {
  std::vector<Poly> comps;
  for (const auto& c : f.components()) comps.push_back(compose(c, g));
  return VectorField(std::move(comps));
}

}  // namespace xqcalc
