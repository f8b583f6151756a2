#include "xqcalc/dist_json.hpp"

#include "xqcalc/parse.hpp"

namespace xqcalc {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json node(const char* type, json args, json children = json::array()) {
  return json{{"type", type}, {"args", std::move(args)}, {"children", std::move(children)}};
}

json exponent_json(const Exponent& e, int dim) {
  json out = json::array();
  for (int i = 0; i < dim; ++i) out.push_back(e[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

json to_json(const SmoothMap& m) {
  return std::visit(
      Overloaded{[](const PolyMap& p) {
                   json comps = json::array();
                   for (const auto& c : p.components()) comps.push_back(to_string(c));
                   return json{{"kind", "poly"}, {"source_dim", p.source_dim()}, {"components", comps}};
                 },
                 [](const Homothety& h) {
                   return json{{"kind", "homothety"}, {"factor", h.factor}, {"dim", h.dim}};
                 },
                 [](const Projection& p) {
                   return json{{"kind", "projection"}, {"source_dim", p.source_dim}, {"keep", p.keep}};
                 },
                 [](const Cis&) { return json{{"kind", "cis"}}; },
                 [](const Sph&) { return json{{"kind", "sph"}}; }},
      m.variant());
}

json to_json(const DiffOperator& op) {
  json terms = json::array();
  for (const auto& t : op.terms())
    terms.push_back({{"coeff", to_string(t.coeff)}, {"alpha", exponent_json(t.alpha, op.dim())}});
  return json{{"dim", op.dim()}, {"terms", terms}};
}

json to_json(const Dist& t) {
  return std::visit(
      Overloaded{
          [](const DiracNode& d) { return node("dirac", {{"point", d.point}}); },
          [](const IntervalNode& iv) { return node("interval", {{"a", iv.a}, {"b", iv.b}}); },
          [](const BoxNode& b) {
            json sides = json::array();
            for (const auto& [a, bb] : b.sides) sides.push_back({a, bb});
            return node("box", {{"sides", sides}});
          },
          [](const SphereUnitNode& s) { return node("sphere_unit", {{"n", s.n}}); },
          [](const BallUnitNode& b) { return node("ball_unit", {{"n", b.n}}); },
          [](const PushforwardNode& p) {
            return node("pushforward", {{"map", to_json(p.map)}}, json::array({to_json(p.inner)}));
          },
          [](const MultFnNode& m) {
            return node("mult_fn", {{"g", to_string(m.g)}}, json::array({to_json(m.inner)}));
          },
          [](const OpImageNode& o) {
            return node("op_image", {{"op", to_json(o.op)}}, json::array({to_json(o.inner)}));
          },
          [](const LinCombNode& l) {
            json weights = json::array();
            json children = json::array();
            for (const auto& [c, d] : l.terms) {
              weights.push_back(c);
              children.push_back(to_json(d));
            }
            return node("lin_comb", {{"dim", l.dim}, {"weights", weights}}, children);
          },
          [](const ExtProductNode& x) {
            return node("ext_product",
                        {{"order", x.order == ProductOrder::standard ? "standard" : "reversed"}},
                        json::array({to_json(x.left), to_json(x.right)}));
          }},
      t.node().v);
}

}  // namespace xqcalc
