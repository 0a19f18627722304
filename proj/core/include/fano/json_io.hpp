#pragma once

// JSON encodings. Rationals are "p/q" strings; polynomials are objects mapping
// space-separated exponent vectors over an ordered variable universe to
// rationals, in graded-lex order.

#include <span>

#include <json.hpp>

#include "fano/exterior.hpp"
#include "fano/linalg.hpp"
#include "fano/polynomial.hpp"
#include "fano/quintic.hpp"
#include "fano/skew.hpp"

namespace fano::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// Accepts "p/q" strings and integers. Throws Error(InvalidInput).
Rational rational_from_json(const Json& j);

/// Throws InvalidInput if p uses a variable outside the universe.
Json polynomial_to_json(const Polynomial& p, std::span<const Var> universe);
/// Accepts the exponent-map object or an expression string such as
/// "Z_0^3 + Z_1^3". Throws InvalidInput or ParseError.
Polynomial polynomial_from_json(const Json& j, std::span<const Var> universe);

/// {"degree": k, "denominator_exponent": e,
///  "terms": [{"variables": [...], "coefficient": polynomial}]}.
Json chart_form_to_json(const ChartForm& w);

Json matrix_to_json(const RationalMatrix& m);
Json vector_to_json(const RationalVector& v);

/// {"a": {"01": "1", "23": "-2/3"}}; pairs absent from the object are zero.
template <class Coeffs>
Coeffs skew_from_json(const Json& j);
template <class Coeffs>
Json skew_to_json(const Coeffs& a);

/// {"a23": ..., "a28": ..., "a35": ...}.
quintic::ConicPoint conic_from_json(const Json& j);
Json conic_to_json(const quintic::ConicPoint& c);

extern template So5Coeffs skew_from_json<So5Coeffs>(const Json&);
extern template So7Coeffs skew_from_json<So7Coeffs>(const Json&);
extern template Json skew_to_json<So5Coeffs>(const So5Coeffs&);
extern template Json skew_to_json<So7Coeffs>(const So7Coeffs&);

}  // namespace fano::io
