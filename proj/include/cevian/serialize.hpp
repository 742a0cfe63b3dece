#pragma once

// Text and JSON forms of field elements, points and the other value types.
//
// Text grammar for field expressions:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | '+' unary | atom
//   atom   := integer | 'sqrt' '(' integer ')' | '(' expr ')'
// Point and line literals are `[e1,e2,e3]`.
//
// JSON: an integer-valued element is a JSON integer (or a decimal string when
// it exceeds 64 bits); anything else is {"tower":[d1,d2], "coeffs":[["num","den"],...]}.

#include "cevian/conic.hpp"
#include "cevian/curve.hpp"
#include "cevian/report.hpp"

#include "json.hpp"

#include <string_view>

namespace cevian {

using Json = nlohmann::json;

/// Throw ParseError with the offending position.
FieldElement parse_field(std::string_view text);
Triple parse_triple(std::string_view text);
BaryPoint parse_point(std::string_view text);
BaryLine parse_line(std::string_view text);

Json to_json(const FieldElement &a);
Json to_json(const Triple &t);
Json to_json(const BaryPoint &p);
Json to_json(const BaryLine &l);
/// Upper triangle (m00, m01, m02, m11, m12, m22).
Json to_json(const Conic &c);
Json to_json(const WPoint &p);
Json to_json(const NFPoint &p);
Json to_json(const Report &r);

/// Throw ParseError on malformed input.
FieldElement field_from_json(const Json &j);
BaryPoint point_from_json(const Json &j);
Conic conic_from_json(const Json &j);
WPoint wpoint_from_json(const Json &j);

} // namespace cevian
