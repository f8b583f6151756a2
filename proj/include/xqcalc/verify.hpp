#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xqcalc/quadrature.hpp"

namespace xqcalc {

/// One property check, aggregated over its samples.
///
/// `max_abs_residual` holds the largest per-sample residual in the check's
/// metric: "relative" residuals are |lhs - rhs|_inf / max(|lhs|_inf, |rhs|_inf)
/// (0 when both vanish), where scalar pairings <T, psi> also include the
/// termwise size sum |c_m <T, x^m>| in the denominator; "absolute" residuals
/// are |lhs - rhs|_inf. A check passes iff max_abs_residual <= tolerance.
struct CheckRecord {
  std::string suite;
  std::string name;
  int dim = 0;  // 0: dimension independent
  int degree = 0;
  int samples = 0;
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string metric = "relative";
  std::string notes;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  bool pass() const;
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<int> dim;
  std::uint64_t seed = 0;
  /// Replaces every check's default tolerance.
  std::optional<double> tolerance;
  QuadConfig quad;
};

inline constexpr std::string_view kSuiteNames[] = {"all",   "core", "spheres",
                                                   "wave",  "jets", "divergence"};
bool is_known_suite(std::string_view name);

/// Runs a suite deterministically; throws std::invalid_argument for an
/// unknown suite name. Records are sorted by (suite, name, dim).
VerifyReport run_verify(const VerifyOptions& options);

struct FluxOptions {
  std::uint64_t seed = 0;
  int count = 100;
  int max_degree = 6;
  std::optional<double> tolerance;
};

/// Divergence theorem on the unit ball for `count` random fields per dimension.
VerifyReport run_flux(const FluxOptions& options);

/// Versioned JSON (schema 1), numbers with 17 significant digits.
std::string to_json(const VerifyReport& report);

}  // namespace xqcalc
