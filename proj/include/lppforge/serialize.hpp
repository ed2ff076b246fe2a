#ifndef LPPFORGE_SERIALIZE_HPP
#define LPPFORGE_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "lppforge/census.hpp"

namespace lppforge {

using json = nlohmann::ordered_json;

/// {"p", "r", "modulus", "order"}; modulus low-to-high degree, order as
/// coefficient vectors.
json field_to_json(const Field& F);
Field::Ptr field_from_json(const json& j);

/// {"nvars", "terms": [{"exps": [...], "coeff": [...]}]} in descending graded
/// lexicographic term order (byte-stable).
json poly_to_json(const MPoly& f);
MPoly poly_from_json(const Field::Ptr& field, const json& j);

/// Human-readable form, e.g. "x^5 + 6*y^5 + 3*x^3 + 6".
std::string poly_to_string(const MPoly& f);

/// "(0,u)(u^2,u^3)" over element labels; identity prints as "()".
std::string perm_to_cycle_string(const Field& F, const Perm& a);
/// Image array plus cycle string.
json perm_to_json(const Field& F, const Perm& a);
/// Parse cycle notation over element labels (whitespace lenient).
Perm perm_from_cycle_string(const Field& F, const std::string& text);

json group_to_json(const EKlenianGroup& G);

/// CSV of element-order indices, one row per line.
std::string latin_to_csv(const LatinSquare& L);
LatinSquare latin_from_csv(int q, const std::string& text);
/// Matrix of element labels, rows indexed by the first variable.
std::string latin_to_grid(const Field& F, const LatinSquare& L);
/// Two squares rendered side by side.
std::string grids_side_by_side(const Field& F, const LatinSquare& a, const LatinSquare& b);

json census_to_json(const CensusReport& report);

/// {"q", "squares", "pairwise_orthogonal", "complete", "members_latin"}
/// plus a superimposition check for each pair.
json mols_to_json(const MolsSet& set);

} // namespace lppforge

#endif
