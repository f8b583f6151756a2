#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "xqcalc/poly.hpp"

namespace xqcalc {

/// Panel layout used at every nesting level of an iterated integral.
struct QuadConfig {
  int nodes = 16;
  int panels = 8;

  void validate() const;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are computed once per node count by Newton iteration on P_n and
/// shared read-only afterwards.
std::shared_ptr<const GaussRule> gauss_legendre(int nodes);

/// A smooth test function R^arity -> R, optionally with exact partial
/// derivative evaluators keyed by multi-index (total order 1 or 2).
struct SmoothFn {
  using Evaluator = std::function<double(std::span<const double>)>;

  int arity = 1;
  Evaluator value;
  std::map<Exponent, Evaluator> partials;

  double operator()(std::span<const double> x) const { return value(x); }

  static SmoothFn from_poly(const Poly& p);
};

inline constexpr double kFiniteDifferenceStep = 1e-5;

/// d^alpha f: the exact evaluator when one is attached, otherwise a central
/// finite difference with step kFiniteDifferenceStep (error O(h^2)). The flag
/// is true when the fallback was used.
std::pair<SmoothFn::Evaluator, bool> partial_evaluator(const SmoothFn& f, const Exponent& alpha);

/// Signed composite Gauss-Legendre integral over [a, b].
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadConfig& cfg = {});

/// Iterated integral over a box. `nesting` lists the axes from outermost to
/// innermost; empty means 0, 1, ..., arity-1.
double integrate_nd(const SmoothFn& f, std::span<const std::pair<double, double>> box,
                    const QuadConfig& cfg = {}, std::span<const int> nesting = {});

}  // namespace xqcalc
