// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "xqcalc/dist.hpp"
#include "xqcalc/verify.hpp"

using namespace xqcalc;

namespace {

struct Need {
  std::string name;
  std::vector<int> dims;
  double tolerance;
  int min_samples;
};

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  std::string detail;
};

const CheckRecord* find(const VerifyReport& r, const std::string& name, int dim) {
  for (const auto& c : r.checks)
    if (c.name == name && c.dim == dim) return &c;
  return nullptr;
}

// Every listed check must exist, pass, and have been run at (or tighter
// than) the stated tolerance with at least the stated number of samples.
Outcome require(const VerifyReport& r, const std::vector<Need>& needs) {
  Outcome o;
  for (const auto& n : needs)
    for (int d : n.dims) {
      const CheckRecord* c = find(r, n.name, d);
      if (!c) {
        o.pass = false;
        o.detail += " missing " + n.name + "/" + std::to_string(d);
        continue;
      }
      o.worst = std::max(o.worst, c->max_abs_residual);
      if (!c->pass || c->tolerance > n.tolerance || c->samples < n.min_samples) {
        o.pass = false;
        o.detail += " " + n.name + "/" + std::to_string(d);
      }
    }
  return o;
}

void line(int id, const char* title, const Outcome& o, bool& all) {
  std::printf("%s %2d %-34s worst %.3g%s\n", o.pass ? "PASS" : "FAIL", id, title, o.worst,
              o.detail.empty() ? "" : (" :" + o.detail).c_str());
  all = all && o.pass;
}

}  // namespace

int main() {
  const VerifyReport report = run_verify({});
  bool all = true;
  constexpr double kPi = std::numbers::pi;

  {
    // stated values for the unit sphere and ball totals
    Outcome o;
    const double s[] = {2.0, 2.0 * kPi, 4.0 * kPi};
    const double b[] = {2.0, kPi, 4.0 * kPi / 3.0};
    for (int n = 1; n <= 3; ++n) {
      o.worst = std::max({o.worst, relative_gap(total(sphere_unit(n)), s[n - 1]),
                          relative_gap(total(ball_unit(n)), b[n - 1])});
    }
    o.pass = o.worst <= 1e-12;
    Outcome suite = require(report, {{"spheres.totals", {1, 2, 3}, 1e-12, 1}});
    o.pass = o.pass && suite.pass;
    o.detail = suite.detail;
    line(1, "sphere and ball totals", o, all);
  }
  line(2, "expanding sphere derivative",
       require(report, {{"spheres.expanding_sphere_derivative", {1, 2, 3}, 1e-9, 100}}), all);
  line(3, "ball and shell growth identities",
       require(report, {{"spheres.ball_growth", {1, 2, 3}, 1e-9, 100},
                        {"spheres.shell_growth", {1}, 1e-9, 100},
                        {"spheres.weighted_shell_growth", {1, 2, 3}, 1e-9, 100},
                        {"spheres.diluted_ball_growth", {1, 2, 3}, 1e-9, 100}}),
       all);
  {
    std::vector<Need> res;
    std::vector<Need> init;
    for (const char* k : {"dim1-s", "dim1-b", "dim3-p", "dim3-q", "dim2-p", "dim2-q"}) {
      const int d = k[3] - '0';
      res.push_back({std::string("wave.residual.") + k, {d}, 1e-9, 100});
      init.push_back({std::string("wave.initial_state.") + k, {d}, 1e-10, 1});
    }
    line(4, "wave equation residuals", require(report, res), all);
    line(5, "initial states", require(report, init), all);
  }
  {
    Outcome o = require(report, {{"jets.dim1_ball_expansion", {1}, 1e-10, 1},
                                 {"jets.dim3_expansion", {3}, 1e-10, 1}});
    const CheckRecord* c = find(report, "jets.dim3_expansion", 3);
    if (!c || c->notes.empty()) {
      o.pass = false;
      o.detail += " dim-3 note missing";
    }
    line(6, "nilpotent expansions", o, all);
  }
  line(7, "integration by substitution",
       require(report, {{"dist.integration_by_substitution", {1}, 1e-9, 100}}), all);
  line(8, "divergence theorem", require(report, {{"divergence.unit_ball", {1, 2, 3}, 1e-9, 100}}), all);
  line(9, "projection commutes with laplacian",
       require(report, {{"dist.projection_commutes_with_laplacian", {3}, 1e-9, 50}}), all);
  line(10, "exact vs quadrature backends",
       require(report, {{"dist.exact_vs_quadrature", {1, 2, 3}, 1e-8, 1},
                        {"spheres.quadrature_moments", {1, 2, 3}, 1e-8, 1},
                        {"wallis.closed_form_vs_quadrature", {0}, 1e-8, 242}}),
       all);
  {
    Outcome o = require(report, {{"dist.linearity", {1, 2, 3}, 1e-12, 1},
                                 {"dist.functorality", {1, 2, 3}, 1e-10, 1},
                                 {"dist.total_preservation", {1, 2, 3}, 1e-12, 1},
                                 {"dist.homothety_zero_is_total_times_dirac", {1, 2, 3}, 1e-12, 1},
                                 {"dist.fubini_for_boxes", {2, 3}, 1e-12, 1},
                                 {"jets.second_order_recurrence", {1, 2, 3}, 1e-9, 1},
                                 {"jets.first_order_ode", {1, 2, 3}, 1e-9, 1},
                                 {"spheres.family_at_consistency", {1, 2, 3}, 1e-9, 1}});
    const std::string cmd = std::string(XQCALC_CLI_PATH) + " verify --suite all > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status != 0) {
      o.pass = false;
      o.detail += " cli exit status " + std::to_string(status);
    }
    line(11, "property suite", o, all);
  }
  return all ? 0 : 1;
}
