#pragma once

#include <string>
#include <vector>

#include "xqcalc/poly.hpp"
#include "xqcalc/quadrature.hpp"
#include "xqcalc/wave.hpp"

namespace xqcalc {

struct TraceRow {
  double t = 0.0;
  std::string series;
  double value = 0.0;
};

/// `steps` equally spaced samples over [t0, t1], both ends included.
std::vector<double> time_grid(double t0, double t1, int steps);

/// Rows (t_i, <Q(t_i), psi>) from the exact pairing polynomial.
std::vector<TraceRow> evolve_trace(SolutionKind k, const Poly& psi, double t0, double t1, int steps);

/// Smooth radial bump exp(-1/(1 - s^2)), s = (|x| - r) / width, zero for |s| >= 1.
SmoothFn radial_bump(int dim, double r, double width);

struct HuygensOptions {
  double radius = 2.0;
  double width = 0.5;
  double t0 = 0.0;
  double t1 = 4.0;
  int steps = 41;
  QuadConfig quad;
};

/// Series dim1-s, dim2-q, dim3-q paired with the radial bump by quadrature,
/// series-major with t ascending inside each series.
std::vector<TraceRow> huygens_trace(const HuygensOptions& options);

/// Header `t,series,value`, LF endings, 12 significant digits.
std::string to_csv(const std::vector<TraceRow>& rows);
/// {"schema": 1, "rows": [{"t", "series", "value"}, ...]} with 17 significant digits.
std::string to_json(const std::vector<TraceRow>& rows);

}  // namespace xqcalc
