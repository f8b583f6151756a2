#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "json.hpp"
#include "xqcalc/verify.hpp"

using namespace xqcalc;

namespace {
const CheckRecord* find(const VerifyReport& r, const std::string& name, int dim) {
  for (const auto& c : r.checks)
    if (c.name == name && c.dim == dim) return &c;
  return nullptr;
}
}  // namespace

TEST_CASE("unknown suite") {
  VerifyOptions opt;
  opt.suite = "nope";
  CHECK_THROWS_AS(run_verify(opt), std::invalid_argument);
  CHECK(is_known_suite("jets"));
  CHECK_FALSE(is_known_suite("flux"));
}

TEST_CASE("spheres suite with a fixed seed") {
  VerifyOptions opt;
  opt.suite = "spheres";
  opt.seed = 42;
  const VerifyReport r = run_verify(opt);
  CHECK(r.pass());
  for (int dim = 1; dim <= 3; ++dim) {
    const CheckRecord* c = find(r, "spheres.expanding_sphere_derivative", dim);
    REQUIRE(c != nullptr);
    CHECK(c->max_abs_residual <= 1e-9);
    CHECK(c->samples == 100);
  }
  for (const auto& c : r.checks) {
    CHECK(c.suite == "spheres");
    CHECK(c.pass == (c.max_abs_residual <= c.tolerance));
  }
}

TEST_CASE("dimension filter") {
  VerifyOptions opt;
  opt.suite = "core";
  opt.dim = 1;
  const VerifyReport r = run_verify(opt);
  CHECK(find(r, "dist.integration_by_substitution", 1) != nullptr);
  CHECK(find(r, "dist.fubini_for_boxes", 2) == nullptr);
  CHECK(std::none_of(r.checks.begin(), r.checks.end(), [](const CheckRecord& c) { return c.dim > 1; }));
}

TEST_CASE("tolerance override keeps the report well formed") {
  VerifyOptions opt;
  opt.suite = "wave";
  opt.tolerance = 1e-300;
  const VerifyReport r = run_verify(opt);
  CHECK_FALSE(r.pass());
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["schema"] == 1);
  CHECK(j["suite"] == "wave");
  CHECK(j["pass"] == false);
  for (const auto& c : j["checks"]) CHECK(c["tolerance"] == 1e-300);
}

TEST_CASE("determinism") {
  VerifyOptions opt;
  opt.suite = "jets";
  opt.seed = 99;
  CHECK(to_json(run_verify(opt)) == to_json(run_verify(opt)));
  opt.seed = 100;
  const std::string other = to_json(run_verify(opt));
  opt.seed = 99;
  CHECK(other != to_json(run_verify(opt)));
}

TEST_CASE("records are sorted") {
  const VerifyReport r = run_verify({});
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.suite, a.name, a.dim) < std::tie(b.suite, b.name, b.dim);
  }));
  CHECK(r.pass());
}

TEST_CASE("flux reports") {
  FluxOptions empty;
  empty.count = 0;
  const VerifyReport e = run_flux(empty);
  CHECK(e.checks.empty());
  CHECK(e.pass());
  const VerifyReport a = run_flux({});
  REQUIRE(a.checks.size() == 3);
  for (const auto& c : a.checks) CHECK(c.max_abs_residual <= 1e-9);
  CHECK(to_json(a) == to_json(run_flux({})));
}

TEST_CASE("json numbers") {
  VerifyReport r;
  r.suite = "x";
  r.seed = 18446744073709551615ULL;
  CheckRecord c;
  c.name = "n";
  c.max_abs_residual = 0.1;
  c.tolerance = 1.0 / 3.0;
  r.checks.push_back(c);
  const std::string text = to_json(r);
  CHECK(text.find("\"seed\": 18446744073709551615") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("\"max_abs_residual\": 0.10000000000000001") != std::string::npos);
}
