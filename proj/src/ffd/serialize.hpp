#pragma once
// Canonical JSON (de)serialization for every value that crosses the tool
// boundary: field descriptions, elements, polynomials, Laurent polynomials,
// multivariate forms, and whole problem files.  Serialization is canonical —
// fixed key order, graded-lex term order, two-space indent, trailing newline —
// so that parse followed by serialize is byte-identical on canonical files.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "ffd/galois_field.hpp"
#include "ffd/laurent.hpp"
#include "ffd/multipoly.hpp"
#include "ffd/planner.hpp"
#include "ffd/poly.hpp"

namespace ffd {

using Json = nlohmann::ordered_json;

// Fixed rendering: dump with two-space indent plus a trailing newline.
std::string canonical_dump(const Json& j);

// Field: {"p": .., "e": ..}.
Json field_to_json(const Fq& field);
FieldPtr field_from_json(const Json& j, const std::string& at);

// Element: prime field -> bare integer code; extension -> array of e
// coordinates over the prime field, low index first.
Json elem_to_json(const Fq& field, FqElem a);
FqElem elem_from_json(const FieldPtr& field, const Json& j, const std::string& at);

// Polynomial: array of elements, constant term first; zero -> [].
Json poly_to_json(const Poly& f);
Poly poly_from_json(const FieldPtr& field, const Json& j, const std::string& at);

// Laurent: array of [exponent, element] pairs, exponents strictly decreasing.
Json laurent_to_json(const LaurentPoly& a);
LaurentPoly laurent_from_json(const FieldPtr& field, const Json& j, const std::string& at);

// Form: list of {"exponents": [..], "coeff": <laurent>} in graded-lex order.
Json multipoly_to_json(const MultiPolyL& f);
MultiPolyL multipoly_from_json(const FieldPtr& field, uint32_t nvars, const Json& j,
                               const std::string& at);

// Problem file: {"field", "s", "variant", "forms", "target"}; the diagonal
// variant stores {"d", "lambdas"} under "forms".
Json form_file_to_json(const ProblemInstance& inst);
ProblemInstance form_file_from_json(const Json& j);

// Full-text parse; kParseError carries the position for malformed JSON and a
// JSON-pointer-style path for shape violations.
ProblemInstance parse_form_file(const std::string& text);
std::string serialize_form_file(const ProblemInstance& inst);

}  // namespace ffd
