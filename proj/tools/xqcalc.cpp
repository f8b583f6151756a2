#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "xqcalc/dist_json.hpp"
#include "xqcalc/parse.hpp"
#include "xqcalc/trace.hpp"
#include "xqcalc/verify.hpp"
#include "xqcalc/version.hpp"
#include "xqcalc/wave.hpp"

namespace {

using namespace xqcalc;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("XQCALC_SEED"); env && *env) {
    std::uint64_t v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw UsageError("XQCALC_SEED must be a non-negative integer");
    return v;
  }
  return 0;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + out + "' for writing");
  file << text;
}

SolutionKind kind_flag(const std::string& text) {
  auto k = parse_solution_kind(text);
  if (!k) throw UsageError("unknown kind '" + text + "'");
  return *k;
}

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string coeff_list(const UniPoly& p, int order) {
  std::string out = "[";
  for (int j = 0; j < order; ++j) out += (j ? ", " : "") + fmt(p.coeff(j));
  return out + "]";
}

nlohmann::json coeff_json(const UniPoly& p, int order) {
  auto arr = nlohmann::json::array();
  for (int j = 0; j < order; ++j) arr.push_back(p.coeff(j));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and quadrature pairing of compactly supported distributions"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
  int quad_nodes = QuadConfig{}.nodes;
  int quad_panels = QuadConfig{}.panels;
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 11;
  std::string psi = "1";
  std::string kind;

  auto add_quad = [&](CLI::App* sub) {
    sub->add_option("--quad-nodes", quad_nodes, "Gauss-Legendre nodes per panel")->check(CLI::PositiveNumber);
    sub->add_option("--quad-panels", quad_panels, "panels per nesting level")->check(CLI::PositiveNumber);
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--t0", t0, "first time");
    sub->add_option("--t1", t1, "last time");
    sub->add_option("--steps", steps, "number of samples (>= 2)");
  };

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::optional<int> dim;
  std::optional<double> tol;
  verify->add_option("--suite", suite, "all|core|spheres|wave|jets|divergence");
  verify->add_option("--dim", dim, "keep checks of this dimension")->check(CLI::Range(1, 3));
  verify->add_option("--seed", seed, "random seed (default $XQCALC_SEED or 0)");
  verify->add_option("--tol", tol, "override every tolerance")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", out, "report path (default stdout)");
  add_quad(verify);

  // evolve
  auto* evolve = app.add_subcommand("evolve", "trace <Q(t), psi> over a time grid");
  evolve->add_option("--kind", kind, "dim1-s|dim1-b|dim3-p|dim3-q|dim2-p|dim2-q")->required();
  evolve->add_option("--psi", psi, "test polynomial");
  evolve->add_option("--out", out, "trace path (default stdout)");
  evolve->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  add_range(evolve);

  // taylor
  auto* taylor = app.add_subcommand("taylor", "compare the solution with its formal jet");
  int order = 5;
  taylor->add_option("--kind", kind, "dim1-s|dim1-b|dim3-p|dim3-q|dim2-p|dim2-q")->required();
  taylor->add_option("--psi", psi, "test polynomial");
  taylor->add_option("--order", order, "jet order k <= 8 (t^k = 0)")->check(CLI::Range(1, 8));
  taylor->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  taylor->add_option("--out", out, "output path (default stdout)");

  // huygens
  auto* huygens = app.add_subcommand("huygens", "pair dim 1, 2, 3 solutions with a radial bump");
  HuygensOptions hopt;
  t0 = hopt.t0;
  t1 = hopt.t1;
  huygens->add_option("--radius", hopt.radius, "bump radius")->check(CLI::PositiveNumber);
  huygens->add_option("--width", hopt.width, "bump half width")->check(CLI::PositiveNumber);
  huygens->add_option("--out", out, "trace path (default stdout)");
  huygens->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  add_range(huygens);
  add_quad(huygens);

  // flux
  auto* flux = app.add_subcommand("flux", "divergence theorem on the unit ball");
  FluxOptions fopt;
  flux->add_option("--seed", seed, "random seed (default $XQCALC_SEED or 0)");
  flux->add_option("--count", fopt.count, "fields per dimension")->check(CLI::NonNegativeNumber);
  flux->add_option("--max-degree", fopt.max_degree, "field degree bound")->check(CLI::NonNegativeNumber);
  flux->add_option("--tol", tol, "override the tolerance")->check(CLI::NonNegativeNumber);
  flux->add_option("--out", out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    const QuadConfig quad{quad_nodes, quad_panels};
    if (verify->parsed()) {
      if (!is_known_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
      VerifyOptions opt;
      opt.suite = suite;
      opt.dim = dim;
      opt.seed = resolve_seed(seed);
      opt.tolerance = tol;
      opt.quad = quad;
      const VerifyReport report = run_verify(opt);
      emit(to_json(report), out);
      return report.pass() ? 0 : kExitFail;
    }
    if (flux->parsed()) {
      fopt.seed = resolve_seed(seed);
      fopt.tolerance = tol;
      const VerifyReport report = run_flux(fopt);
      emit(to_json(report), out);
      return report.pass() ? 0 : kExitFail;
    }
    if (evolve->parsed()) {
      const SolutionKind k = kind_flag(kind);
      const Poly p = parse_poly(psi, output_dim(k));
      const auto rows = evolve_trace(k, p, t0, t1, steps);
      emit(format == "json" ? to_json(rows) : to_csv(rows), out);
      return 0;
    }
    if (huygens->parsed()) {
      hopt.t0 = t0;
      hopt.t1 = t1;
      if (huygens->get_option("--steps")->count()) hopt.steps = steps;
      hopt.quad = quad;
      const auto rows = huygens_trace(hopt);
      emit(format == "json" ? to_json(rows) : to_csv(rows), out);
      return 0;
    }
    if (taylor->parsed()) {
      const SolutionKind k = kind_flag(kind);
      const Poly p = parse_poly(psi, output_dim(k));
      const UniPoly solution = pair_solution(k, p).truncated(order);
      const Jet jet = fundamental_jet(k, order);
      const UniPoly formal = jet.pair(p);
      const double residual = relative_gap(solution, formal);
      const bool note = output_dim(k) != 1;
      if (format == "json") {
        nlohmann::json doc;
        doc["schema"] = 1;
        doc["kind"] = std::string(name(k));
        doc["psi"] = to_string(p);
        doc["order"] = order;
        doc["solution"] = coeff_json(solution, order);
        doc["jet"] = coeff_json(formal, order);
        doc["residual"] = residual;
        auto coeffs = nlohmann::json::array();
        for (const Dist& c : jet.coeffs) coeffs.push_back(to_json(c));
        doc["jet_coefficients"] = coeffs;
        doc["notes"] = note ? std::string(kDim3ExpansionNote) : std::string();
        emit(doc.dump(2) + "\n", out);
      } else {
        std::string text;
        text += "kind      " + std::string(name(k)) + "\n";
        text += "psi       " + to_string(p) + "\n";
        text += "order     " + std::to_string(order) + "\n";
        text += "solution  " + coeff_list(solution, order) + "\n";
        text += "jet       " + coeff_list(formal, order) + "\n";
        text += "residual  " + fmt(residual) + "\n";
        if (note) text += "note      " + std::string(kDim3ExpansionNote) + "\n";
        emit(text, out);
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "xqcalc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "xqcalc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "xqcalc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "xqcalc: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
