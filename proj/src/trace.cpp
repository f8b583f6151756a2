#include "xqcalc/trace.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "xqcalc/dist.hpp"

namespace xqcalc {

namespace {

std::string format(double v, int digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<double> time_grid(double t0, double t1, int steps) {
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  if (!std::isfinite(t0) || !std::isfinite(t1)) throw std::invalid_argument("time range must be finite");
  if (t1 < t0) throw std::invalid_argument("t1 must be >= t0");
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) {
    out.push_back(i + 1 == steps ? t1 : t0 + (t1 - t0) * i / (steps - 1));
  }
  return out;
}

std::vector<TraceRow> evolve_trace(SolutionKind k, const Poly& psi, double t0, double t1, int steps) {
  const UniPoly curve = pair_solution(k, psi);
  std::vector<TraceRow> rows;
  for (double t : time_grid(t0, t1, steps)) rows.push_back({t, std::string(name(k)), curve(t)});
  return rows;
}

SmoothFn radial_bump(int dim, double r, double width) {
  if (!(r > 0.0)) throw std::invalid_argument("bump radius must be > 0");
  if (!(width > 0.0)) throw std::invalid_argument("bump width must be > 0");
  SmoothFn f;
  f.arity = dim;
  f.value = [r, width](std::span<const double> x) {
    double sq = 0.0;
    for (double v : x) sq += v * v;
    const double s = (std::sqrt(sq) - r) / width;
    return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0;
  };
  return f;
}

std::vector<TraceRow> huygens_trace(const HuygensOptions& options) {
  options.quad.validate();
  const auto grid = time_grid(options.t0, options.t1, options.steps);
  std::vector<TraceRow> rows;
  for (SolutionKind k : {SolutionKind::dim1_s, SolutionKind::dim2_q, SolutionKind::dim3_q}) {
    const SmoothFn bump = radial_bump(output_dim(k), options.radius, options.width);
    for (double t : grid) {
      rows.push_back({t, std::string(name(k)), pair_callable(solution_at(k, t), bump, options.quad).value});
    }
  }
  return rows;
}

std::string to_csv(const std::vector<TraceRow>& rows) {
  std::string out = "t,series,value\n";
  for (const auto& row : rows) out += format(row.t, 12) + "," + row.series + "," + format(row.value, 12) + "\n";
  return out;
}

std::string to_json(const std::vector<TraceRow>& rows) {
  std::string out = "{\n  \"schema\": 1,\n  \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"t\": " + format(rows[i].t, 17) + ", \"series\": " + nlohmann::json(rows[i].series).dump() +
           ", \"value\": " + format(rows[i].value, 17) + "}";
  }
  out += rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace xqcalc
