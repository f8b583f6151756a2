#include "xqcalc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xqcalc {

void QuadConfig::validate() const {
  if (nodes < 2) throw std::invalid_argument("quadrature needs at least 2 nodes per panel");
  if (panels < 1) throw std::invalid_argument("quadrature needs at least 1 panel");
}

namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace

std::shared_ptr<const GaussRule> gauss_legendre(int nodes) {
  if (nodes < 2) throw std::invalid_argument("quadrature needs at least 2 nodes per panel");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const GaussRule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[nodes];
  if (!slot) slot = std::make_shared<const GaussRule>(compute_rule(nodes));
  return slot;
}

namespace {

// Flat, allocation-free evaluator for the hot quadrature loops.
class CompiledPoly {
 public:
  explicit CompiledPoly(const Poly& p) : dim_(p.dim()), fallback_(p) {
    for (const auto& [e, c] : p.terms()) {
      terms_.push_back({e, c});
      for (int i = 0; i < dim_; ++i) max_exp_ = std::max(max_exp_, e[static_cast<std::size_t>(i)]);
    }
  }

  double operator()(std::span<const double> x) const {
    if (max_exp_ >= kTable || static_cast<int>(x.size()) != dim_) return fallback_(x);
    double powers[kMaxDim][kTable];
    for (int i = 0; i < dim_; ++i) {
      powers[i][0] = 1.0;
      for (int k = 1; k <= max_exp_; ++k) powers[i][k] = powers[i][k - 1] * x[static_cast<std::size_t>(i)];
    }
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double term = c;
      for (int i = 0; i < dim_; ++i) term *= powers[i][e[static_cast<std::size_t>(i)]];
      sum += term;
    }
    return sum;
  }

 private:
  static constexpr int kTable = 32;
  int dim_;
  int max_exp_ = 0;
  std::vector<std::pair<Exponent, double>> terms_;
  Poly fallback_;
};

SmoothFn::Evaluator compiled(const Poly& p) {
  return [c = CompiledPoly(p)](std::span<const double> x) { return c(x); };
}

}  // namespace

SmoothFn SmoothFn::from_poly(const Poly& p) {
  SmoothFn f;
  f.arity = p.dim();
  f.value = compiled(p);
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = i; j < p.dim(); ++j) {
      Exponent first{};
      first[i] = 1;
      Exponent second = first;
      second[j] += 1;
      Poly d1 = partial(p, first);
      Poly d2 = partial(p, second);
      f.partials[first] = compiled(d1);
      f.partials[second] = compiled(d2);
    }
  }
  return f;
}

namespace {

// Central difference of g along `axis` with the standard step.
SmoothFn::Evaluator difference(SmoothFn::Evaluator g, int axis, int order) {
  const double h = kFiniteDifferenceStep;
  if (order == 2) {
    return [g, axis, h](std::span<const double> x) {
      std::vector<double> p(x.begin(), x.end());
      const double mid = g(p);
      p[static_cast<std::size_t>(axis)] = x[static_cast<std::size_t>(axis)] + h;
      const double up = g(p);
      p[static_cast<std::size_t>(axis)] = x[static_cast<std::size_t>(axis)] - h;
      const double down = g(p);
      return (up - 2.0 * mid + down) / (h * h);
    };
  }
  return [g, axis, h](std::span<const double> x) {
    std::vector<double> p(x.begin(), x.end());
    p[static_cast<std::size_t>(axis)] = x[static_cast<std::size_t>(axis)] + h;
    const double up = g(p);
    p[static_cast<std::size_t>(axis)] = x[static_cast<std::size_t>(axis)] - h;
    const double down = g(p);
    return (up - down) / (2.0 * h);
  };
}

}  // namespace

std::pair<SmoothFn::Evaluator, bool> partial_evaluator(const SmoothFn& f, const Exponent& alpha) {
  for (int i = f.arity; i < kMaxDim; ++i)
    if (alpha[i] != 0) throw DimensionError("multi-index longer than function arity");
  if (total_degree(alpha) == 0) return {f.value, false};
  if (auto it = f.partials.find(alpha); it != f.partials.end()) return {it->second, false};
  SmoothFn::Evaluator g = f.value;
  for (int axis = 0; axis < f.arity; ++axis) {
    int k = alpha[axis];
    while (k >= 2) {
      g = difference(g, axis, 2);
      k -= 2;
    }
    if (k == 1) g = difference(g, axis, 1);
  }
  return {g, true};
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadConfig& cfg) {
  cfg.validate();
  const auto rule = gauss_legendre(cfg.nodes);
  const double width = (b - a) / cfg.panels;
  double total = 0.0;
  for (int k = 0; k < cfg.panels; ++k) {
    const double lo = a + k * width;
    const double mid = lo + 0.5 * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i)
      panel += rule->weights[i] * f(mid + 0.5 * width * rule->nodes[i]);
    total += 0.5 * width * panel;
  }
  return total;
}

namespace {

double integrate_level(const SmoothFn& f, std::span<const std::pair<double, double>> box,
                       const QuadConfig& cfg, std::span<const int> order, std::size_t level,
                       std::vector<double>& point) {
  const int axis = order[level];
  const auto [a, b] = box[static_cast<std::size_t>(axis)];
  return integrate_1d(
      [&](double s) {
        point[static_cast<std::size_t>(axis)] = s;
        if (level + 1 == order.size()) return f(point);
        return integrate_level(f, box, cfg, order, level + 1, point);
      },
      a, b, cfg);
}

}  // namespace

double integrate_nd(const SmoothFn& f, std::span<const std::pair<double, double>> box,
                    const QuadConfig& cfg, std::span<const int> nesting) {
  if (static_cast<int>(box.size()) != f.arity)
    throw DimensionError("integration box has " + std::to_string(box.size()) +
                         " sides, integrand arity is " + std::to_string(f.arity));
  std::vector<int> order(nesting.begin(), nesting.end());
  if (order.empty())
    for (int i = 0; i < f.arity; ++i) order.push_back(i);
  if (order.size() != box.size()) throw DimensionError("nesting order must list every axis once");
  std::vector<bool> seen(box.size(), false);
  for (int axis : order) {
    if (axis < 0 || axis >= f.arity || seen[static_cast<std::size_t>(axis)])
      throw DimensionError("nesting order must list every axis once");
    seen[static_cast<std::size_t>(axis)] = true;
  }
  std::vector<double> point(box.size(), 0.0);
  return integrate_level(f, box, cfg, order, 0, point);
}

}  // namespace xqcalc
