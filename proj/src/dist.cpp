#include "xqcalc/dist.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xqcalc/spheres.hpp"
#include "xqcalc/wallis.hpp"

namespace xqcalc {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

namespace {

void require_dim(int got, int want, const char* what) {
  if (got != want)
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(want) +
                         ", got " + std::to_string(got));
}

void require_range(int dim, const char* what) {
  if (dim < 1 || dim > kMaxDim)
    throw DimensionError(std::string(what) + ": dimension must be 1..3, got " +
                         std::to_string(dim));
}

Dist make(detail::DistNode::Variant v, int dim) {
  return Dist(std::make_shared<const detail::DistNode>(detail::DistNode{std::move(v), dim}));
}

}  // namespace

// ---------------------------------------------------------------------------
// SmoothMap

SmoothMap::SmoothMap(Homothety h) : v_(h) { require_range(h.dim, "homothety"); }

SmoothMap::SmoothMap(Projection p) : v_(p) {
  require_range(p.source_dim, "projection source");
  require_range(static_cast<int>(p.keep.size()), "projection target");
  std::vector<bool> used(static_cast<std::size_t>(p.source_dim), false);
  for (int axis : p.keep) {
    if (axis < 0 || axis >= p.source_dim || used[static_cast<std::size_t>(axis)])
      throw DimensionError("projection axes must be distinct and inside the source");
    used[static_cast<std::size_t>(axis)] = true;
  }
}

int SmoothMap::source_dim() const {
  return std::visit(Overloaded{[](const PolyMap& m) { return m.source_dim(); },
                               [](const Homothety& h) { return h.dim; },
                               [](const Projection& p) { return p.source_dim; },
                               [](const Cis&) { return 1; }, [](const Sph&) { return 2; }},
                    v_);
}

int SmoothMap::target_dim() const {
  return std::visit(Overloaded{[](const PolyMap& m) { return m.target_dim(); },
                               [](const Homothety& h) { return h.dim; },
                               [](const Projection& p) { return static_cast<int>(p.keep.size()); },
                               [](const Cis&) { return 2; }, [](const Sph&) { return 3; }},
                    v_);
}

bool SmoothMap::is_polynomial() const {
  return !std::holds_alternative<Cis>(v_) && !std::holds_alternative<Sph>(v_);
}

std::vector<double> SmoothMap::operator()(std::span<const double> x) const {
  require_dim(static_cast<int>(x.size()), source_dim(), "smooth map argument");
  return std::visit(
      Overloaded{[&](const PolyMap& m) { return m(x); },
                 [&](const Homothety& h) {
                   std::vector<double> out(x.begin(), x.end());
                   for (double& v : out) v *= h.factor;
                   return out;
                 },
                 [&](const Projection& p) {
                   std::vector<double> out;
                   for (int axis : p.keep) out.push_back(x[static_cast<std::size_t>(axis)]);
                   return out;
                 },
                 [&](const Cis&) { return std::vector<double>{std::cos(x[0]), std::sin(x[0])}; },
                 [&](const Sph&) {
                   const double s = std::sin(x[1]);
                   return std::vector<double>{std::cos(x[0]) * s, std::sin(x[0]) * s,
                                              std::cos(x[1])};
                 }},
      v_);
}

Poly SmoothMap::pullback(const Poly& psi) const {
  require_dim(psi.dim(), target_dim(), "pullback");
  return std::visit(
      Overloaded{[&](const PolyMap& m) { return compose(psi, m); },
                 [&](const Homothety& h) {
                   Poly::Terms t;
                   for (const auto& [e, c] : psi.terms())
                     t.emplace(e, c * std::pow(h.factor, total_degree(e)));
                   return Poly(h.dim, std::move(t));
                 },
                 [&](const Projection& p) {
                   Poly::Terms t;
                   for (const auto& [e, c] : psi.terms()) {
                     Exponent lifted{};
                     for (std::size_t i = 0; i < p.keep.size(); ++i)
                       lifted[static_cast<std::size_t>(p.keep[i])] = e[i];
                     t.emplace(lifted, c);
                   }
                   return Poly(p.source_dim, std::move(t));
                 },
                 [](const Cis&) -> Poly {
                   throw UnsupportedPattern("cis pullback is not polynomial");
                 },
                 [](const Sph&) -> Poly {
                   throw UnsupportedPattern("sph pullback is not polynomial");
                 }},
      v_);
}

Projection xy_projection() { return Projection{3, {0, 1}}; }

// ---------------------------------------------------------------------------
// DiffOperator

DiffOperator::DiffOperator(int dim, std::vector<Term> terms) : dim_(dim), terms_(std::move(terms)) {
  require_range(dim, "differential operator");
  for (const auto& t : terms_) {
    require_dim(t.coeff.dim(), dim, "operator coefficient");
    for (int i = 0; i < kMaxDim; ++i) {
      if (t.alpha[i] < 0) throw std::invalid_argument("negative multi-index");
      if (i >= dim && t.alpha[i] != 0) throw DimensionError("multi-index longer than dimension");
    }
  }
}

DiffOperator DiffOperator::laplacian(int dim) {
  std::vector<Term> terms;
  for (int i = 0; i < dim; ++i) {
    Exponent a{};
    a[static_cast<std::size_t>(i)] = 2;
    terms.push_back({Poly::constant(dim, 1.0), a});
  }
  return DiffOperator(dim, std::move(terms));
}

DiffOperator DiffOperator::directional(const VectorField& x) {
  std::vector<Term> terms;
  for (int i = 0; i < x.dim(); ++i) {
    Exponent a{};
    a[static_cast<std::size_t>(i)] = 1;
    terms.push_back({x[i], a});
  }
  return DiffOperator(x.dim(), std::move(terms));
}

DiffOperator DiffOperator::ddx() { return DiffOperator(1, {{Poly::constant(1, 1.0), {1, 0, 0}}}); }

Poly DiffOperator::operator()(const Poly& psi) const {
  require_dim(psi.dim(), dim_, "differential operator argument");
  Poly out(dim_);
  for (const auto& t : terms_) out = out + t.coeff * partial(psi, t.alpha);
  return out;
}

// ---------------------------------------------------------------------------
// Constructors

int Dist::dim() const { return node_->dim; }

Dist dirac(std::vector<double> point) {
  const int dim = static_cast<int>(point.size());
  require_range(dim, "dirac");
  return make(DiracNode{std::move(point)}, dim);
}

Dist interval(double a, double b) { return make(IntervalNode{a, b}, 1); }

Dist box(std::vector<std::pair<double, double>> sides) {
  const int dim = static_cast<int>(sides.size());
  require_range(dim, "box");
  return make(BoxNode{std::move(sides)}, dim);
}

Dist sphere_unit(int n) {
  require_range(n, "unit sphere");
  return make(SphereUnitNode{n}, n);
}

Dist ball_unit(int n) {
  require_range(n, "unit ball");
  return make(BallUnitNode{n}, n);
}

Dist pushforward(const SmoothMap& map, const Dist& t) {
  require_dim(t.dim(), map.source_dim(), "pushforward");
  return make(PushforwardNode{map, t}, map.target_dim());
}

Dist multiply(const Poly& g, const Dist& t) {
  require_dim(g.dim(), t.dim(), "function multiple");
  return make(MultFnNode{g, t}, t.dim());
}

Dist apply_operator(const DiffOperator& op, const Dist& t) {
  require_dim(op.dim(), t.dim(), "operator image");
  return make(OpImageNode{op, t}, t.dim());
}

Dist lincomb(int dim, std::vector<std::pair<double, Dist>> terms) {
  require_range(dim, "linear combination");
  for (const auto& [c, d] : terms) require_dim(d.dim(), dim, "linear combination term");
  return make(LinCombNode{dim, std::move(terms)}, dim);
}

Dist zero_dist(int dim) { return lincomb(dim, {}); }

Dist scale(double c, const Dist& t) { return lincomb(t.dim(), {{c, t}}); }

Dist operator+(const Dist& a, const Dist& b) { return lincomb(a.dim(), {{1.0, a}, {1.0, b}}); }

Dist operator-(const Dist& a, const Dist& b) { return lincomb(a.dim(), {{1.0, a}, {-1.0, b}}); }

Dist operator*(double c, const Dist& t) { return scale(c, t); }

Dist ext_product(const Dist& left, const Dist& right, ProductOrder order) {
  const int dim = left.dim() + right.dim();
  if (dim > kMaxDim) throw DimensionError("external product would exceed dimension 3");
  return make(ExtProductNode{left, right, order}, dim);
}

// ---------------------------------------------------------------------------
// Exact pairing

namespace {

// Splits psi on R^{p+q} into a polynomial in the `outer` block whose
// coefficients are pairings of `inner_dist` with the polynomial in the other block.
Poly partial_pairing(const Poly& psi, int p, int q, bool outer_is_left, const Dist& inner_dist) {
  std::map<Exponent, Poly::Terms> groups;
  for (const auto& [e, c] : psi.terms()) {
    Exponent left{}, right{};
    for (int i = 0; i < p; ++i) left[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
    for (int i = 0; i < q; ++i)
      right[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(p + i)];
    if (outer_is_left) groups[left].emplace(right, c);
    else groups[right].emplace(left, c);
  }
  const int outer_dim = outer_is_left ? p : q;
  const int inner_dim = outer_is_left ? q : p;
  Poly::Terms out;
  for (auto& [key, terms] : groups) out.emplace(key, pair(inner_dist, Poly(inner_dim, std::move(terms))));
  return Poly(outer_dim, std::move(out));
}

double pair_trig_pushforward(const SmoothMap& map, const Dist& inner, const Poly& psi) {
  const auto& node = inner.node().v;
  if (std::holds_alternative<Cis>(map.variant())) {
    const auto* iv = std::get_if<IntervalNode>(&node);
    if (!iv) throw UnsupportedPattern("cis pushforward is exact only directly above an interval");
    double sum = 0.0;
    for (const auto& [e, c] : psi.terms()) sum += c * trig_moment(e[0], e[1], iv->a, iv->b);
    return sum;
  }
  const auto* bx = std::get_if<BoxNode>(&node);
  if (!bx || bx->sides.size() != 2)
    throw UnsupportedPattern("sph pushforward is exact only directly above a 2-d box");
  const auto [t0, t1] = bx->sides[0];
  const auto [p0, p1] = bx->sides[1];
  double sum = 0.0;
  for (const auto& [e, c] : psi.terms()) {
    // x^a y^b z^c o sph = cos^a(th) sin^b(th) * sin^{a+b}(ph) cos^c(ph)
    const double theta = trig_moment(e[0], e[1], t0, t1);
    if (theta == 0.0) continue;
    sum += c * theta * trig_moment(e[2], e[0] + e[1], p0, p1);
  }
  return sum;
}

}  // namespace

double pair(const Dist& t, const Poly& psi) {
  require_dim(psi.dim(), t.dim(), "pairing");
  return std::visit(
      Overloaded{
          [&](const DiracNode& d) { return psi(d.point); },
          [&](const IntervalNode& iv) {
            const UniPoly prim = antiderivative(to_unipoly(psi));
            return prim(iv.b) - prim(iv.a);
          },
          [&](const BoxNode& b) {
            double sum = 0.0;
            for (const auto& [e, c] : psi.terms()) {
              double term = c;
              for (std::size_t i = 0; i < b.sides.size(); ++i) {
                const int k = e[i] + 1;
                term *= (std::pow(b.sides[i].second, k) - std::pow(b.sides[i].first, k)) / k;
              }
              sum += term;
            }
            return sum;
          },
          [&](const SphereUnitNode& s) {
            double sum = 0.0;
            for (const auto& [e, c] : psi.terms()) sum += c * sphere_moment(s.n, e);
            return sum;
          },
          [&](const BallUnitNode& b) {
            double sum = 0.0;
            for (const auto& [e, c] : psi.terms()) sum += c * ball_moment(b.n, e);
            return sum;
          },
          [&](const PushforwardNode& p) {
            // a chain of maps ending in a point mass: evaluate psi at the image point
            std::vector<const SmoothMap*> chain{&p.map};
            const Dist* base = &p.inner;
            while (const auto* next = std::get_if<PushforwardNode>(&base->node().v)) {
              chain.push_back(&next->map);
              base = &next->inner;
            }
            if (const auto* d = std::get_if<DiracNode>(&base->node().v)) {
              std::vector<double> x = d->point;
              for (auto it = chain.rbegin(); it != chain.rend(); ++it) x = (**it)(x);
              return psi(x);
            }
            if (!p.map.is_polynomial()) return pair_trig_pushforward(p.map, p.inner, psi);
            return pair(p.inner, p.map.pullback(psi));
          },
          [&](const MultFnNode& m) { return pair(m.inner, m.g * psi); },
          [&](const OpImageNode& o) { return pair(o.inner, o.op(psi)); },
          [&](const LinCombNode& l) {
            double sum = 0.0;
            for (const auto& [c, d] : l.terms) sum += c * pair(d, psi);
            return sum;
          },
          [&](const ExtProductNode& x) {
            const int p = x.left.dim();
            const int q = x.right.dim();
            if (x.order == ProductOrder::standard)
              return pair(x.left, partial_pairing(psi, p, q, true, x.right));
            return pair(x.right, partial_pairing(psi, p, q, false, x.left));
          }},
      t.node().v);
}

double total(const Dist& t) { return pair(t, Poly::constant(t.dim(), 1.0)); }

// ---------------------------------------------------------------------------
// Quadrature pairing

namespace {

double sphere_callable(int n, const SmoothFn::Evaluator& f, const QuadConfig& cfg) {
  switch (n) {
    case 1: {
      const double plus[1] = {1.0};
      const double minus[1] = {-1.0};
      return f(plus) + f(minus);
    }
    case 2:
      return integrate_1d(
          [&](double th) {
            const double p[2] = {std::cos(th), std::sin(th)};
            return f(p);
          },
          0.0, 2.0 * std::numbers::pi, cfg);
    default: {
      SmoothFn g;
      g.arity = 2;
      g.value = [&](std::span<const double> a) {
        const double s = std::sin(a[1]);
        const double p[3] = {std::cos(a[0]) * s, std::sin(a[0]) * s, std::cos(a[1])};
        return f(p) * s;
      };
      const std::pair<double, double> sides[2] = {{0.0, 2.0 * std::numbers::pi},
                                                  {0.0, std::numbers::pi}};
      return integrate_nd(g, sides, cfg);
    }
  }
}

// Restricts f on R^{p+q} to one block with the other block frozen at `fixed`.
SmoothFn::Evaluator slice(const SmoothFn& f, std::span<const double> fixed, bool fixed_is_left) {
  return [&f, fixed, fixed_is_left](std::span<const double> free) {
    std::vector<double> x;
    if (fixed_is_left) {
      x.assign(fixed.begin(), fixed.end());
      x.insert(x.end(), free.begin(), free.end());
    } else {
      x.assign(free.begin(), free.end());
      x.insert(x.end(), fixed.begin(), fixed.end());
    }
    return f(x);
  };
}

double pair_callable_impl(const Dist& t, const SmoothFn& f, const QuadConfig& cfg, bool& fd) {
  require_dim(f.arity, t.dim(), "callable pairing");
  return std::visit(
      Overloaded{
          [&](const DiracNode& d) { return f(d.point); },
          [&](const IntervalNode& iv) {
            return integrate_1d(
                [&](double s) {
                  const double p[1] = {s};
                  return f(p);
                },
                iv.a, iv.b, cfg);
          },
          [&](const BoxNode& b) { return integrate_nd(f, b.sides, cfg); },
          [&](const SphereUnitNode& s) { return sphere_callable(s.n, f.value, cfg); },
          [&](const BallUnitNode& b) {
            // <B, f> = int_0^1 u^{n-1} <S, f o H_u> du
            return integrate_1d(
                [&](double u) {
                  SmoothFn::Evaluator scaled = [&](std::span<const double> x) {
                    double p[kMaxDim];
                    for (std::size_t i = 0; i < x.size(); ++i) p[i] = u * x[i];
                    return f(std::span<const double>(p, x.size()));
                  };
                  return std::pow(u, b.n - 1) * sphere_callable(b.n, scaled, cfg);
                },
                0.0, 1.0, cfg);
          },
          [&](const PushforwardNode& p) {
            SmoothFn g;
            g.arity = p.map.source_dim();
            g.value = [&](std::span<const double> x) { return f(p.map(x)); };
            return pair_callable_impl(p.inner, g, cfg, fd);
          },
          [&](const MultFnNode& m) {
            SmoothFn g;
            g.arity = f.arity;
            g.value = [&](std::span<const double> x) { return m.g(x) * f(x); };
            return pair_callable_impl(m.inner, g, cfg, fd);
          },
          [&](const OpImageNode& o) {
            std::vector<std::pair<Poly, SmoothFn::Evaluator>> parts;
            for (const auto& term : o.op.terms()) {
              auto [ev, used_fd] = partial_evaluator(f, term.alpha);
              fd = fd || used_fd;
              parts.emplace_back(term.coeff, std::move(ev));
            }
            SmoothFn g;
            g.arity = f.arity;
            g.value = [parts](std::span<const double> x) {
              double sum = 0.0;
              for (const auto& [coeff, ev] : parts) sum += coeff(x) * ev(x);
              return sum;
            };
            return pair_callable_impl(o.inner, g, cfg, fd);
          },
          [&](const LinCombNode& l) {
            double sum = 0.0;
            for (const auto& [c, d] : l.terms) sum += c * pair_callable_impl(d, f, cfg, fd);
            return sum;
          },
          [&](const ExtProductNode& x) {
            const bool standard = x.order == ProductOrder::standard;
            const Dist& outer = standard ? x.left : x.right;
            const Dist& inner = standard ? x.right : x.left;
            SmoothFn g;
            g.arity = outer.dim();
            g.value = [&](std::span<const double> m) {
              SmoothFn h;
              h.arity = inner.dim();
              h.value = slice(f, m, standard);
              return pair_callable_impl(inner, h, cfg, fd);
            };
            return pair_callable_impl(outer, g, cfg, fd);
          }},
      t.node().v);
}

}  // namespace

Pairing pair_callable(const Dist& t, const SmoothFn& f, const QuadConfig& cfg) {
  cfg.validate();
  bool fd = false;
  const double v = pair_callable_impl(t, f, cfg, fd);
  return {v, fd};
}

// ---------------------------------------------------------------------------

Dist box_boundary(const Dist& rectangle) {
  const auto* b = std::get_if<BoxNode>(&rectangle.node().v);
  if (!b || b->sides.size() != 2) throw DimensionError("box_boundary needs a 2-d box");
  const auto [a, bb] = b->sides[0];
  const auto [c, d] = b->sides[1];
  const Poly s = Poly::variable(1, 0);
  auto horizontal = [&](double y) { return PolyMap(1, {s, Poly::constant(1, y)}); };
  auto vertical = [&](double x) { return PolyMap(1, {Poly::constant(1, x), s}); };
  return lincomb(2, {{1.0, pushforward(horizontal(c), interval(a, bb))},
                     {1.0, pushforward(vertical(bb), interval(c, d))},
                     {-1.0, pushforward(horizontal(d), interval(a, bb))},
                     {-1.0, pushforward(vertical(a), interval(c, d))}});
}

std::pair<Dist, Dist> ibs_pair(const Poly& g, double a, double b) {
  require_dim(g.dim(), 1, "substitution");
  Dist lhs = pushforward(PolyMap(1, {g}), multiply(partial(g, 0), interval(a, b)));
  const double ga[1] = {a};
  const double gb[1] = {b};
  Dist rhs = interval(g(ga), g(gb));
  return {lhs, rhs};
}

}  // namespace xqcalc
