#include "xqcalc/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "xqcalc/dist.hpp"
#include "xqcalc/parse.hpp"
#include "xqcalc/random.hpp"
#include "xqcalc/spheres.hpp"
#include "xqcalc/version.hpp"
#include "xqcalc/wallis.hpp"
#include "xqcalc/wave.hpp"

namespace xqcalc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

// Accumulates per-sample residuals for one check.
class Tally {
 public:
  Tally(std::string metric, double tolerance, int degree)
      : metric_(std::move(metric)), tolerance_(tolerance), degree_(degree) {}

  void add(double residual) {
    ++samples_;
    if (!std::isfinite(residual)) residual = std::numeric_limits<double>::infinity();
    worst_ = std::max(worst_, residual);
  }
  void note(std::string text) { notes_ = std::move(text); }

  CheckRecord record() const {
    CheckRecord r;
    r.degree = degree_;
    r.samples = samples_;
    r.max_abs_residual = worst_;
    r.tolerance = tolerance_;
    r.metric = metric_;
    r.notes = notes_;
    return r;
  }

 private:
  std::string metric_;
  double tolerance_;
  int degree_;
  int samples_ = 0;
  double worst_ = 0.0;
  std::string notes_;
};

struct Context {
  Rng rng;
  int dim;
  QuadConfig quad;
};

using CheckFn = std::function<Tally(Context&)>;

struct CheckSpec {
  std::string suite;
  std::string name;
  int dim;
  CheckFn run;
};

double rel(double a, double b) { return relative_gap(a, b); }
double rel(const UniPoly& a, const UniPoly& b) { return relative_gap(a, b); }

double rel(const Poly& a, const Poly& b) {
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  const double gap = max_coeff_gap(a, b);
  return scale == 0.0 ? gap : gap / scale;
}

// Sum of |c_m <T, x^m>| over the terms of psi: the size of the pairing
// before cancellation between monomials.
double magnitude(const Dist& d, const Poly& psi) {
  double m = 0.0;
  for (const auto& [e, c] : psi.terms()) m += std::abs(c * pair(d, Poly::monomial(psi.dim(), e)));
  return m;
}

double rel_scaled(double a, double b, double scale) {
  const double s = std::max({std::abs(a), std::abs(b), scale});
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

Poly random_real_poly(Rng& rng, int dim, int max_degree) {
  Poly::Terms terms;
  for (const auto& e : monomials(dim, max_degree)) {
    if (rng.uniform_int(0, 1) == 0) continue;
    terms.emplace(e, rng.uniform(-5.0, 5.0) * std::pow(10.0, rng.uniform_int(-8, 8)));
  }
  return Poly(dim, std::move(terms));
}

// Three nested quadrature levels cost (nodes * panels)^3 evaluations; those
// checks run with a quarter of the panels per level.
QuadConfig nested_config(const QuadConfig& q, int levels) {
  if (levels < 3) return q;
  return QuadConfig{q.nodes, std::max(1, q.panels / 4)};
}

std::string config_note(const QuadConfig& q) {
  return "quadrature " + std::to_string(q.nodes) + " nodes x " + std::to_string(q.panels) +
         " panels per level";
}

Poly monomial_poly(int dim, const Exponent& e) { return Poly::monomial(dim, e); }

double origin_value(const Poly& p) {
  const std::vector<double> zero(static_cast<std::size_t>(p.dim()), 0.0);
  return p(zero);
}

// ---------------------------------------------------------------------------
// core

Tally laplace_is_div_grad(Context& c) {
  Tally t("absolute", 0.0, 8);
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(c.rng, c.dim, 8);
    t.add(max_coeff_gap(laplace(p), div(grad(p))));
  }
  return t;
}

Tally antiderivative_inverse(Context& c) {
  Tally t("relative", 1e-15, 12);
  for (int i = 0; i < 100; ++i) {
    const UniPoly p = to_unipoly(random_poly(c.rng, 1, 12));
    const UniPoly prim = antiderivative(p);
    t.add(std::max(rel(derivative(prim), p), std::abs(prim(0.0))));
  }
  return t;
}

Tally compose_products(Context& c) {
  Tally t("relative", 1e-12, 4);
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(c.rng, c.dim, 4);
    const Poly q = random_poly(c.rng, c.dim, 4);
    const int source = c.rng.uniform_int(1, 3);
    const PolyMap f = random_affine_map(c.rng, source, c.dim);
    t.add(rel(compose(p * q, f), compose(p, f) * compose(q, f)));
  }
  return t;
}

Tally wallis_vs_quadrature(Context& c) {
  Tally t("absolute", 1e-8, 10);
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      const double full = integrate_1d(
          [&](double x) { return std::pow(std::cos(x), a) * std::pow(std::sin(x), b); }, 0.0,
          kTwoPi, c.quad);
      const double half = integrate_1d(
          [&](double x) { return std::pow(std::sin(x), a) * std::pow(std::cos(x), b); }, 0.0,
          std::numbers::pi, c.quad);
      t.add(std::abs(wallis_full(a, b) - full));
      t.add(std::abs(wallis_half(a, b) - half));
    }
  }
  return t;
}

Tally trig_reduction(Context& c) {
  Tally t("absolute", 1e-10, 10);
  for (int i = 0; i < 100; ++i) {
    const int p = c.rng.uniform_int(0, 10);
    const int q = c.rng.uniform_int(0, 10);
    const double lo = c.rng.uniform(-4.0, 4.0);
    const double hi = c.rng.uniform(-4.0, 4.0);
    const double quad = integrate_1d(
        [&](double x) { return std::pow(std::cos(x), p) * std::pow(std::sin(x), q); }, lo, hi,
        c.quad);
    t.add(std::abs(trig_moment(p, q, lo, hi) - quad));
    t.add(std::abs(trig_moment(p, q, 0.0, kTwoPi) - wallis_full(p, q)));
  }
  return t;
}

Tally print_roundtrip(Context& c) {
  Tally t("absolute", 0.0, 6);
  for (int i = 0; i < 100; ++i) {
    const Poly p = i % 2 == 0 ? random_poly(c.rng, c.dim, 6) : random_real_poly(c.rng, c.dim, 6);
    const Poly back = parse_poly(to_string(p), c.dim);
    t.add(back == p ? 0.0 : std::max(max_coeff_gap(back, p), 1e-300));
  }
  return t;
}

Tally quadrature_exactness(Context& c) {
  Tally t("relative", 1e-12, 2 * c.quad.nodes - 1);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> coeffs;
    const int degree = c.rng.uniform_int(0, 2 * c.quad.nodes - 1);
    for (int k = 0; k <= degree; ++k) coeffs.push_back(c.rng.uniform(-1.0, 1.0));
    const UniPoly p(coeffs);
    const double a = c.rng.uniform(-1.0, 0.0);
    const double b = c.rng.uniform(0.0, 1.0);
    const UniPoly prim = antiderivative(p);
    t.add(rel(integrate_1d(p, a, b, c.quad), prim(b) - prim(a)));
    t.add(rel(integrate_1d(p, b, a, c.quad), prim(a) - prim(b)));
  }
  return t;
}

Tally quadrature_fubini(Context& c) {
  Tally t("relative", 1e-10, 0);
  const QuadConfig quad = nested_config(c.quad, c.dim);
  SmoothFn f;
  f.arity = c.dim;
  f.value = [](std::span<const double> x) {
    double v = std::exp(0.3 * x[0]);
    if (x.size() > 1) v *= std::cos(x[0] * x[1]) + 2.0;
    if (x.size() > 2) v *= 1.0 + 0.5 * std::sin(x[2] - x[0]);
    return v;
  };
  for (int i = 0; i < 10; ++i) {
    std::vector<std::pair<double, double>> sides;
    for (int k = 0; k < c.dim; ++k) {
      const double a = c.rng.uniform(-1.0, 1.0);
      sides.emplace_back(a, a + c.rng.uniform(0.5, 2.0));
    }
    std::vector<int> reversed;
    for (int k = c.dim - 1; k >= 0; --k) reversed.push_back(k);
    t.add(rel(integrate_nd(f, sides, quad), integrate_nd(f, sides, quad, reversed)));
  }
  t.note(config_note(quad));
  return t;
}

Tally quadrature_additivity(Context& c) {
  Tally t("relative", 1e-12, 20);
  for (int i = 0; i < 100; ++i) {
    const UniPoly p = to_unipoly(random_poly(c.rng, 1, 20));
    const double a = c.rng.uniform(-1.0, 0.0);
    const double b = c.rng.uniform(-0.5, 0.5);
    const double e = c.rng.uniform(0.0, 1.0);
    auto f = [&](double x) { return p(x); };
    const double ab = integrate_1d(f, a, b, c.quad);
    const double be = integrate_1d(f, b, e, c.quad);
    const double ae = integrate_1d(f, a, e, c.quad);
    // relative to the size of the pieces being added
    const double scale = std::max({std::abs(ab) + std::abs(be), std::abs(ae)});
    t.add(scale == 0.0 ? 0.0 : std::abs(ab + be - ae) / scale);
  }
  return t;
}

Tally dist_linearity(Context& c) {
  Tally t("relative", 1e-12, 6);
  for (int i = 0; i < 100; ++i) {
    const Dist d = random_dist(c.rng, c.dim, 3);
    const Poly psi = random_poly(c.rng, c.dim, 6);
    const Poly phi = random_poly(c.rng, c.dim, 6);
    const double alpha = c.rng.uniform(-2.0, 2.0);
    const double beta = c.rng.uniform(-2.0, 2.0);
    const Poly mix = alpha * psi + beta * phi;
    const double lhs = pair(d, mix);
    const double a = alpha * pair(d, psi);
    const double b = beta * pair(d, phi);
    t.add(rel_scaled(lhs, a + b, std::max(magnitude(d, mix), std::abs(a) + std::abs(b))));
  }
  return t;
}

Tally dist_functorality(Context& c) {
  Tally t("relative", 1e-10, 6);
  for (int i = 0; i < 100; ++i) {
    const int m = c.rng.uniform_int(1, 3);
    const int k = c.rng.uniform_int(1, 3);
    const Dist d = random_dist(c.rng, m, 2);
    const PolyMap f = random_affine_map(c.rng, m, k);
    const PolyMap g = random_affine_map(c.rng, k, c.dim);
    const Poly psi = random_poly(c.rng, c.dim, 6);
    t.add(rel(pair(pushforward(compose(g, f), d), psi),
              pair(pushforward(g, pushforward(f, d)), psi)));
  }
  return t;
}

Tally dist_total_preservation(Context& c) {
  Tally t("relative", 1e-12, 0);
  for (int i = 0; i < 100; ++i) {
    const int choice = c.rng.uniform_int(0, 3);
    if (choice == 0) {
      const int target = c.rng.uniform_int(1, 3);
      const Dist d = random_dist(c.rng, c.dim, 2);
      const PolyMap f = random_affine_map(c.rng, c.dim, target);
      t.add(rel(total(pushforward(f, d)), total(d)));
    } else if (choice == 1) {
      const double factor = c.rng.uniform(-3.0, 3.0);
      const Dist d = random_dist(c.rng, c.dim, 2);
      t.add(rel(total(pushforward(Homothety{factor, c.dim}, d)), total(d)));
    } else if (choice == 2) {
      const Dist d = random_dist(c.rng, 3, 2);
      std::vector<int> keep;
      for (int k = 0; k < c.dim; ++k) keep.push_back(k);
      t.add(rel(total(pushforward(Projection{3, keep}, d)), total(d)));
    } else {
      const double a = c.rng.uniform(-3.0, 3.0);
      const double b = c.rng.uniform(-3.0, 3.0);
      const Dist iv = interval(a, b);
      t.add(rel(total(pushforward(Cis{}, iv)), total(iv)));
      const double e = c.rng.uniform(-3.0, 3.0);
      const Dist rect = box({{a, b}, {e, e + 1.0}});
      t.add(rel(total(pushforward(Sph{}, rect)), total(rect)));
    }
  }
  return t;
}

Tally dist_homothety_zero(Context& c) {
  Tally t("relative", 1e-12, 6);
  for (int i = 0; i < 100; ++i) {
    const Dist d = random_dist(c.rng, c.dim, 2);
    const Poly psi = random_poly(c.rng, c.dim, 6);
    t.add(rel(pair(pushforward(Homothety{0.0, c.dim}, d), psi), total(d) * origin_value(psi)));
  }
  return t;
}

Tally dist_substitution(Context& c) {
  Tally t("relative", 1e-9, 8);
  for (int i = 0; i < 100; ++i) {
    const Poly g = random_poly(c.rng, 1, 4);
    const double a = c.rng.uniform(-1.0, 1.0);
    const double b = c.rng.uniform(-1.0, 1.0);
    const Poly psi = random_poly(c.rng, 1, 8);
    const auto [lhs, rhs] = ibs_pair(g, a, b);
    t.add(rel(pair(lhs, psi), pair(rhs, psi)));
  }
  return t;
}

Dist random_box(Rng& rng, int dim) {
  std::vector<std::pair<double, double>> sides;
  for (int k = 0; k < dim; ++k) {
    const double a = rng.uniform(-2.0, 2.0);
    sides.emplace_back(a, rng.uniform(-2.0, 2.0));
  }
  return dim == 1 ? interval(sides[0].first, sides[0].second) : box(sides);
}

Tally dist_fubini_boxes(Context& c) {
  Tally t("relative", 1e-12, 8);
  for (int i = 0; i < 100; ++i) {
    const int left = c.rng.uniform_int(1, c.dim - 1);
    const Dist p = random_box(c.rng, left);
    const Dist q = random_box(c.rng, c.dim - left);
    const Poly psi = random_poly(c.rng, c.dim, 8);
    t.add(rel(pair(ext_product(p, q, ProductOrder::standard), psi),
              pair(ext_product(p, q, ProductOrder::reversed), psi)));
  }
  return t;
}

Tally dist_adjunction(Context& c) {
  Tally t("relative", 1e-10, 6);
  const QuadConfig quad = nested_config(c.quad, c.dim);
  for (int i = 0; i < 100; ++i) {
    const DiffOperator op = random_operator(c.rng, c.dim);
    Dist base = random_box(c.rng, c.dim);
    if (i % 2 == 0) {
      std::vector<double> p;
      for (int k = 0; k < c.dim; ++k) p.push_back(c.rng.uniform(-1.0, 1.0));
      base = dirac(p);
    }
    const Poly psi = random_poly(c.rng, c.dim, 6);
    const Dist image = apply_operator(op, base);
    // independent route: pointwise exact partials and quadrature
    const Pairing oracle = pair_callable(image, SmoothFn::from_poly(psi), quad);
    t.add(oracle.finite_difference ? 1.0 : rel(pair(image, psi), oracle.value));
  }
  t.note(config_note(quad));
  return t;
}

Tally dist_projection_commutation(Context& c) {
  Tally t("relative", 1e-9, 6);
  const Projection p = xy_projection();
  for (int i = 0; i < 50; ++i) {
    const Dist d = random_dist(c.rng, 3, 3);
    const Poly psi = random_poly(c.rng, 2, 6);
    const double lhs = pair(pushforward(p, apply_operator(DiffOperator::laplacian(3), d)), psi);
    const double rhs = pair(apply_operator(DiffOperator::laplacian(2), pushforward(p, d)), psi);
    t.add(rel(lhs, rhs));
  }
  return t;
}

Tally dist_exact_vs_quadrature(Context& c) {
  Tally t("absolute", 1e-8, 8);
  const auto exps = monomials(c.dim, 8);
  const QuadConfig quad = nested_config(c.quad, c.dim);
  for (const Dist& d : atomic_dists(c.rng, c.dim)) {
    for (const auto& e : exps) {
      const Poly psi = monomial_poly(c.dim, e);
      t.add(std::abs(pair(d, psi) - pair_callable(d, SmoothFn::from_poly(psi), quad).value));
    }
  }
  t.note(config_note(quad));
  return t;
}

// ---------------------------------------------------------------------------
// spheres

Tally sphere_totals(Context& c) {
  Tally t("relative", 1e-12, 0);
  const double sphere[] = {2.0, kTwoPi, kFourPi};
  const double ball[] = {2.0, std::numbers::pi, kFourPi / 3.0};
  t.add(rel(total(sphere_unit(c.dim)), sphere[c.dim - 1]));
  t.add(rel(total(ball_unit(c.dim)), ball[c.dim - 1]));
  // S^0 and B^0 are those totals times delta(0)
  const Poly one = Poly::constant(c.dim, 1.0);
  t.add(rel(pair_family({FamilyKind::sphere_diluted, c.dim}, one)(0.0), sphere[c.dim - 1]));
  t.add(rel(pair_family({FamilyKind::ball_diluted, c.dim}, one)(0.0), ball[c.dim - 1]));
  return t;
}

CheckFn identity_check(Sides (*identity)(const Poly&)) {
  return [identity](Context& c) {
    Tally t("relative", 1e-9, 8);
    for (int i = 0; i < 100; ++i) t.add(identity(random_poly(c.rng, c.dim, 8)).relative_gap());
    return t;
  };
}

Tally ball_as_shell_integral(Context& c) {
  Tally t("relative", 1e-9, 8);
  for (int i = 0; i < 100; ++i) {
    const auto [ball, shells] = ball_as_integral_check(c.dim, random_poly(c.rng, c.dim, 8));
    t.add(rel(ball, shells));
  }
  return t;
}

Tally family_consistency(Context& c) {
  Tally t("relative", 1e-9, 6);
  const FamilyKind kinds[] = {FamilyKind::sphere_diluted, FamilyKind::sphere_undiluted,
                              FamilyKind::ball_diluted, FamilyKind::ball_undiluted};
  for (int i = 0; i < 20; ++i) {
    const double t0 = i == 0 ? 0.0 : (i == 1 ? -1.0 : c.rng.uniform(-2.0, 2.0));
    const Poly psi = random_poly(c.rng, c.dim, 6);
    for (FamilyKind k : kinds) {
      const Family f{k, c.dim};
      t.add(rel(pair(family_at(f, t0), psi), pair_family(f, psi)(t0)));
    }
  }
  return t;
}

Tally homothety_divergence(Context& c) {
  Tally t("relative", 1e-12, 4);
  for (int i = 0; i < 100; ++i) {
    const VectorField f = random_field(c.rng, c.dim, 4);
    t.add(homothety_divergence_gap(f, c.rng.uniform(-3.0, 3.0)));
  }
  return t;
}

Tally homothety_volume(Context& c) {
  Tally t("relative", 1e-10, 6);
  for (int i = 0; i < 100; ++i) {
    const Poly phi = random_poly(c.rng, c.dim, 6);
    t.add(homothety_volume_gap(phi, c.rng.uniform(-3.0, 3.0)));
  }
  return t;
}

Tally sphere_quadrature_moments(Context& c) {
  Tally t("absolute", 1e-8, 8);
  const Dist s = sphere_unit(c.dim);
  const Dist b = ball_unit(c.dim);
  const QuadConfig sphere_quad = nested_config(c.quad, c.dim - 1);
  const QuadConfig ball_quad = nested_config(c.quad, c.dim);
  for (const auto& e : monomials(c.dim, 8)) {
    SmoothFn f = SmoothFn::from_poly(monomial_poly(c.dim, e));
    t.add(std::abs(sphere_moment(c.dim, e) - pair_callable(s, f, sphere_quad).value));
    t.add(std::abs(ball_moment(c.dim, e) - pair_callable(b, f, ball_quad).value));
  }
  t.note("sphere " + config_note(sphere_quad) + "; ball " + config_note(ball_quad));
  return t;
}

// ---------------------------------------------------------------------------
// divergence

Tally divergence_theorem_impl(Rng& rng, int dim, int count, int max_degree) {
  Tally t("relative", 1e-9, max_degree);
  const Dist ball = ball_unit(dim);
  const Dist sphere = sphere_unit(dim);
  for (int i = 0; i < count; ++i) {
    const VectorField f = random_field(rng, dim, max_degree);
    Poly normal(dim);
    for (int k = 0; k < dim; ++k) normal = normal + f[k] * Poly::variable(dim, k);
    const Poly divergence = div(f);
    t.add(rel_scaled(flux_unit_sphere(f), pair(ball, divergence),
                     std::max(magnitude(sphere, normal), magnitude(ball, divergence))));
  }
  return t;
}

Tally divergence_theorem(Context& c) { return divergence_theorem_impl(c.rng, c.dim, 100, 6); }

// ---------------------------------------------------------------------------
// wave

CheckFn wave_residual_check(SolutionKind k) {
  return [k](Context& c) {
    Tally t("relative", 1e-9, 8);
    for (int i = 0; i < 100; ++i) t.add(wave_sides(k, random_poly(c.rng, c.dim, 8)).relative_gap());
    return t;
  };
}

CheckFn initial_state_check(SolutionKind k) {
  return [k](Context& c) {
    Tally t("relative", 1e-10, 8);
    const bool one_d = output_dim(k) == 1;
    const double weight = one_d ? 2.0 : kFourPi;
    const bool position = k == SolutionKind::dim1_s || k == SolutionKind::dim3_p ||
                          k == SolutionKind::dim2_p;
    for (int i = 0; i < 100; ++i) {
      const Poly psi = random_poly(c.rng, c.dim, 8);
      const auto [q0, q1] = initial_state_pair(k, psi);
      const double expected = weight * origin_value(psi);
      const double e0 = position ? expected : 0.0;
      const double e1 = position ? 0.0 : expected;
      const double scale = std::max({std::abs(q0), std::abs(q1), std::abs(e0), std::abs(e1)});
      const double gap = std::max(std::abs(q0 - e0), std::abs(q1 - e1));
      t.add(scale == 0.0 ? gap : gap / scale);
    }
    return t;
  };
}

Tally derivative_closure(Context& c) {
  Tally t("relative", 1e-9, 8);
  for (int i = 0; i < 100; ++i) {
    const Poly psi = random_poly(c.rng, 3, 8);
    t.add(rel(derivative(pair_solution(SolutionKind::dim3_q, psi)),
              pair_solution(SolutionKind::dim3_p, psi)));
  }
  return t;
}

Tally projection_consistency(Context& c) {
  Tally t("relative", 1e-9, 6);
  const SmoothMap p(xy_projection());
  const std::pair<SolutionKind, SolutionKind> kinds[] = {
      {SolutionKind::dim2_p, SolutionKind::dim3_p}, {SolutionKind::dim2_q, SolutionKind::dim3_q}};
  for (int i = 0; i < 50; ++i) {
    const Poly psi = random_poly(c.rng, 2, 6);
    const double t0 = c.rng.uniform(-2.0, 2.0);
    for (const auto& [two, three] : kinds) {
      const UniPoly q = pair_solution(two, psi);
      t.add(rel(q, pair_solution(three, p.pullback(psi))));
      t.add(rel(q(t0), pair(solution_at(two, t0), psi)));
    }
  }
  return t;
}

Tally projected_dim1_proportional(Context& c) {
  Tally t("relative", 1e-9, 8);
  const Projection q{3, {0}};
  std::vector<std::pair<UniPoly, UniPoly>> samples;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Poly psi = random_poly(c.rng, 1, 8);
    UniPoly projected = pair_projected_solution(SolutionKind::dim3_p, q, psi);
    UniPoly line = pair_solution(SolutionKind::dim1_s, psi);
    for (int k = 0; k <= std::max(projected.degree(), line.degree()); ++k) {
      num += projected.coeff(k) * line.coeff(k);
      den += line.coeff(k) * line.coeff(k);
    }
    samples.emplace_back(std::move(projected), std::move(line));
  }
  const double constant = den == 0.0 ? 0.0 : num / den;
  for (const auto& [projected, line] : samples) t.add(rel(projected, constant * line));
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, constant, std::chars_format::general, 17);
  t.note("q_*(S^t + t^2 Laplace(B^t)) = constant * (1-d S^t) with constant = " +
         std::string(buf, res.ptr));
  return t;
}

// ---------------------------------------------------------------------------
// jets

Tally dim1_ball_expansion(Context& c) {
  Tally t("relative", 1e-10, 8);
  const Jet jet = jet_second_order(DiffOperator::laplacian(1), zero_dist(1),
                                   scale(2.0, dirac({0.0})), 5);
  for (int i = 0; i < 100; ++i) {
    const Poly psi = random_poly(c.rng, 1, 8);
    const UniPoly truncated = pair_solution(SolutionKind::dim1_b, psi).truncated(5);
    const double v0 = origin_value(psi);
    const double v2 = origin_value(partial(partial(psi, 0), 0));
    // 2 [t psi(0) + t^3/3! psi''(0)]
    const UniPoly explicit_form({0.0, 2.0 * v0, 0.0, 2.0 * v2 / 6.0});
    t.add(std::max(rel(truncated, explicit_form), rel(truncated, jet.pair(psi))));
  }
  return t;
}

Tally dim3_expansion(Context& c) {
  Tally t("relative", 1e-10, 8);
  const Jet jet = jet_second_order(DiffOperator::laplacian(3), zero_dist(3),
                                   scale(kFourPi, dirac({0.0, 0.0, 0.0})), 5);
  for (int i = 0; i < 100; ++i) {
    const Poly psi = random_poly(c.rng, 3, 8);
    const UniPoly truncated = pair_solution(SolutionKind::dim3_q, psi).truncated(5);
    // 4 pi [t psi(0) + t^3/3! Laplace psi(0)]
    const UniPoly explicit_form(
        {0.0, kFourPi * origin_value(psi), 0.0, kFourPi * origin_value(laplace(psi)) / 6.0});
    t.add(std::max(rel(truncated, explicit_form), rel(truncated, jet.pair(psi))));
  }
  t.note(std::string(kDim3ExpansionNote));
  return t;
}

CheckFn fundamental_expansion_check(SolutionKind k) {
  return [k](Context& c) {
    Tally t("relative", 1e-9, 8);
    const Jet jet = fundamental_jet(k, 8);
    for (int i = 0; i < 50; ++i) {
      const Poly psi = random_poly(c.rng, c.dim, 8);
      t.add(rel(pair_solution(k, psi).truncated(8), jet.pair(psi)));
    }
    return t;
  };
}

Tally second_order_recurrence(Context& c) {
  Tally t("relative", 1e-9, 8);
  constexpr int kOrder = 8;
  for (int i = 0; i < 4; ++i) {
    const DiffOperator op = i % 2 == 0 ? DiffOperator::laplacian(c.dim) : random_operator(c.rng, c.dim);
    const Dist v = random_dist(c.rng, c.dim, 1);
    const Dist w = random_dist(c.rng, c.dim, 1);
    const Jet jet = jet_second_order(op, v, w, kOrder);
    for (const auto& e : monomials(c.dim, 8)) {
      const Poly psi = monomial_poly(c.dim, e);
      std::vector<double> lhs;
      std::vector<double> rhs;
      for (int j = 0; j + 2 < kOrder; ++j) {
        lhs.push_back((j + 2.0) * (j + 1.0) * pair(jet.coeffs[static_cast<std::size_t>(j + 2)], psi));
        rhs.push_back(pair(apply_operator(op, jet.coeffs[static_cast<std::size_t>(j)]), psi));
      }
      t.add(rel(UniPoly(lhs), UniPoly(rhs)));
    }
  }
  return t;
}

Tally first_order_ode(Context& c) {
  Tally t("relative", 1e-9, 6);
  constexpr int kOrder = 6;
  for (int i = 0; i < 20; ++i) {
    const DiffOperator op = random_operator(c.rng, c.dim);
    const Jet jet = jet_first_order(op, random_dist(c.rng, c.dim, 1), kOrder);
    const Poly psi = random_poly(c.rng, c.dim, 6);
    std::vector<double> image;
    for (int j = 0; j + 1 < kOrder; ++j)
      image.push_back(pair(apply_operator(op, jet.coeffs[static_cast<std::size_t>(j)]), psi));
    t.add(rel(derivative(jet.pair(psi)), UniPoly(image)));
  }
  return t;
}

// ---------------------------------------------------------------------------

std::vector<CheckSpec> registry() {
  std::vector<CheckSpec> out;
  auto add = [&](const char* suite, std::string name, std::initializer_list<int> dims, CheckFn fn) {
    for (int d : dims) out.push_back({suite, name, d, fn});
  };
  add("core", "poly.laplace_is_div_grad", {1, 2, 3}, laplace_is_div_grad);
  add("core", "poly.antiderivative_inverse", {0}, antiderivative_inverse);
  add("core", "poly.compose_respects_products", {1, 2, 3}, compose_products);
  add("core", "poly.print_parse_roundtrip", {1, 2, 3}, print_roundtrip);
  add("core", "wallis.closed_form_vs_quadrature", {0}, wallis_vs_quadrature);
  add("core", "wallis.trig_reduction_vs_quadrature", {0}, trig_reduction);
  add("core", "quadrature.polynomial_exactness", {0}, quadrature_exactness);
  add("core", "quadrature.fubini_nesting_orders", {2, 3}, quadrature_fubini);
  add("core", "quadrature.additivity", {0}, quadrature_additivity);
  add("core", "dist.linearity", {1, 2, 3}, dist_linearity);
  add("core", "dist.functorality", {1, 2, 3}, dist_functorality);
  add("core", "dist.total_preservation", {1, 2, 3}, dist_total_preservation);
  add("core", "dist.homothety_zero_is_total_times_dirac", {1, 2, 3}, dist_homothety_zero);
  add("core", "dist.integration_by_substitution", {1}, dist_substitution);
  add("core", "dist.fubini_for_boxes", {2, 3}, dist_fubini_boxes);
  add("core", "dist.operator_adjunction", {1, 2, 3}, dist_adjunction);
  add("core", "dist.projection_commutes_with_laplacian", {3}, dist_projection_commutation);
  add("core", "dist.exact_vs_quadrature", {1, 2, 3}, dist_exact_vs_quadrature);

  add("spheres", "spheres.totals", {1, 2, 3}, sphere_totals);
  add("spheres", "spheres.expanding_sphere_derivative", {1, 2, 3},
      identity_check(expanding_sphere_identity));
  add("spheres", "spheres.ball_growth", {1, 2, 3}, identity_check(ball_growth_identity));
  add("spheres", "spheres.shell_growth", {1}, identity_check(shell_growth_identity));
  add("spheres", "spheres.weighted_shell_growth", {1, 2, 3}, identity_check(weighted_shell_identity));
  add("spheres", "spheres.diluted_ball_growth", {1, 2, 3}, identity_check(diluted_ball_identity));
  add("spheres", "spheres.ball_as_shell_integral", {1, 2, 3}, ball_as_shell_integral);
  add("spheres", "spheres.family_at_consistency", {1, 2, 3}, family_consistency);
  add("spheres", "spheres.homothety_divergence", {1, 2, 3}, homothety_divergence);
  add("spheres", "spheres.homothety_volume", {1, 2, 3}, homothety_volume);
  add("spheres", "spheres.quadrature_moments", {1, 2, 3}, sphere_quadrature_moments);

  add("divergence", "divergence.unit_ball", {1, 2, 3}, divergence_theorem);

  for (SolutionKind k : kAllSolutionKinds) {
    const std::string kn(name(k));
    add("wave", "wave.residual." + kn, {output_dim(k)}, wave_residual_check(k));
    add("wave", "wave.initial_state." + kn, {output_dim(k)}, initial_state_check(k));
    add("jets", "jets.fundamental_expansion." + kn, {output_dim(k)}, fundamental_expansion_check(k));
  }
  add("wave", "wave.derivative_closure", {3}, derivative_closure);
  add("wave", "wave.projection_consistency", {2}, projection_consistency);
  add("wave", "wave.projected_dim1_proportional", {1}, projected_dim1_proportional);

  add("jets", "jets.dim1_ball_expansion", {1}, dim1_ball_expansion);
  add("jets", "jets.dim3_expansion", {3}, dim3_expansion);
  add("jets", "jets.second_order_recurrence", {1, 2, 3}, second_order_recurrence);
  add("jets", "jets.first_order_ode", {1, 2, 3}, first_order_ode);
  return out;
}

CheckRecord finish(const CheckSpec& spec, const Tally& tally, std::optional<double> tol) {
  CheckRecord r = tally.record();
  r.suite = spec.suite;
  r.name = spec.name;
  r.dim = spec.dim;
  if (tol) r.tolerance = *tol;
  r.pass = r.max_abs_residual <= r.tolerance;
  return r;
}

void sort_records(std::vector<CheckRecord>& records) {
  std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.suite, a.name, a.dim) < std::tie(b.suite, b.name, b.dim);
  });
}

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

bool is_known_suite(std::string_view name) {
  return std::find(std::begin(kSuiteNames), std::end(kSuiteNames), name) != std::end(kSuiteNames);
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (!is_known_suite(options.suite))
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  options.quad.validate();
  VerifyReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  const Rng root(options.seed);
  for (const CheckSpec& spec : registry()) {
    if (options.suite != "all" && spec.suite != options.suite) continue;
    if (options.dim && spec.dim != 0 && spec.dim != *options.dim) continue;
    Context ctx{root.split(spec.name + "/" + std::to_string(spec.dim)), spec.dim, options.quad};
    report.checks.push_back(finish(spec, spec.run(ctx), options.tolerance));
  }
  sort_records(report.checks);
  return report;
}

VerifyReport run_flux(const FluxOptions& options) {
  if (options.count < 0) throw std::invalid_argument("flux count must be >= 0");
  if (options.max_degree < 0) throw std::invalid_argument("flux max degree must be >= 0");
  VerifyReport report;
  report.suite = "flux";
  report.seed = options.seed;
  if (options.count == 0) return report;
  const Rng root(options.seed);
  for (int dim = 1; dim <= 3; ++dim) {
    const CheckSpec spec{"flux", "divergence.unit_ball", dim, {}};
    Rng rng = root.split(spec.name + "/" + std::to_string(dim));
    report.checks.push_back(
        finish(spec, divergence_theorem_impl(rng, dim, options.count, options.max_degree),
               options.tolerance));
  }
  sort_records(report.checks);
  return report;
}

std::string to_json(const VerifyReport& report) {
  std::string out;
  out += "{\n";
  out += "  \"schema\": 1,\n";
  out += "  \"version\": " + quoted(kVersion) + ",\n";
  out += "  \"suite\": " + quoted(report.suite) + ",\n";
  out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
  out += "  \"pass\": " + std::string(report.pass() ? "true" : "false") + ",\n";
  out += "  \"checks\": [";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckRecord& r = report.checks[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"suite\": " + quoted(r.suite) + ", \"name\": " + quoted(r.name) +
           ", \"dim\": " + std::to_string(r.dim) + ", \"degree\": " + std::to_string(r.degree) +
           ", \"samples\": " + std::to_string(r.samples) +
           ", \"max_abs_residual\": " + number(r.max_abs_residual) +
           ", \"tolerance\": " + number(r.tolerance) + ", \"metric\": " + quoted(r.metric) +
           ", \"pass\": " + (r.pass ? "true" : "false") + ", \"notes\": " + quoted(r.notes) + "}";
  }
  out += report.checks.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

}  // namespace xqcalc
