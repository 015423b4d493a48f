#pragma once

#include "detcoh/characters.hpp"
#include "detcoh/gamma.hpp"
#include "detcoh/loccoh.hpp"
#include "detcoh/lyubeznik.hpp"

#include <json.hpp>

#include <string>

namespace detcoh {

using json = nlohmann::json;

// JSON schemas: polynomials are arrays of {exp, coeff-as-decimal-string};
// bivariate exponents are [i, j] pairs.
json to_json(const LaurentPoly& p);
json to_json(const BiPoly& p);
json to_json(const GammaElem& g);
json to_json(const ModuleExpr& e);
json to_json(const MultiGradedTable& t);
json to_json(const LyubeznikTable& t);
json to_json(const CharacterSeries& cs);

/// One line per nonzero group:
///   "H^{j1}_{O0} H^{j2}_{O1} (start) = module".
std::string table_str(const MultiGradedTable& t, const std::string& start_name);

/// Flattened character terms "q^k * S[lambda] (x) S[mu]  (mult c)", sorted
/// by q-degree, then lexicographically by weight pair.
std::string character_str(const CharacterSeries& cs);

} // namespace detcoh
