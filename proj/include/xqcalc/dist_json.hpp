#pragma once

#include "json.hpp"
#include "xqcalc/dist.hpp"

namespace xqcalc {

/// Canonical JSON form of a distribution tree. Every node is an object with
/// exactly three fields:
///
///     {"type": "<node tag>", "args": {...}, "children": [...]}
///
/// Tags: dirac, interval, box, sphere_unit, ball_unit, pushforward, mult_fn,
/// op_image, lin_comb, ext_product. Polynomials inside args are printed with
/// to_string (parseable by parse_poly). See docs/dist-json.md.
nlohmann::json to_json(const Dist& t);
nlohmann::json to_json(const SmoothMap& m);
nlohmann::json to_json(const DiffOperator& op);

}  // namespace xqcalc
