#pragma once

#include <json.hpp>
#include <optional>

#include "cyclosynth/localized.hpp"

namespace cyclosynth {

using Json = nlohmann::ordered_json;

/// Integers are JSON numbers when they fit in 64 bits, decimal strings
/// otherwise; both forms are accepted on input.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

/// {"ring": n, "coeffs": [...]}
Json elem_to_json(const CycInt& a);
/// `ring` (when given) must agree with the document's "ring" field.
CycInt elem_from_json(const Json& j, std::optional<int> ring = std::nullopt);

/// {"ring": n, "denom_exp": k, "coeffs": [...]}; denom_exp defaults to 0.
Json loc_elem_to_json(const LocElem& x);
LocElem loc_elem_from_json(const Json& j, std::optional<int> ring = std::nullopt);

/// {"ring": n, "denom_exp": f, "entries": [[...], ...]}
Json vector_to_json(const LocVector& v);
LocVector vector_from_json(const Json& j, std::optional<int> ring = std::nullopt);

/// {"ring": n, "denom_exp": f, "rows": [[[...], ...], ...]}
Json matrix_to_json(const LocMatrix& m);
LocMatrix matrix_from_json(const Json& j, std::optional<int> ring = std::nullopt);

/// Parses text, mapping nlohmann errors to ParseError.
Json parse_json_text(const std::string& text);

}  // namespace cyclosynth
