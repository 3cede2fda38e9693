#pragma once

#include "bettikit/betti.hpp"
#include "bettikit/free_complex.hpp"
#include "bettikit/ideal.hpp"
#include "bettikit/poset.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace bettikit {

using Json = nlohmann::json;

// Ideal: {"variables": [names...], "generators": [[e1,...,em], ...]}
Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

// Poset: {"elements": [ids...], "relations": [[i,j],...]} with relations as
// index pairs or id pairs (covering or general; closure is applied), plus an
// optional "grading": {id: [e1,...,em]}.
Json poset_to_json(const Poset& p);
Json poset_to_json(const GradedPoset& p);
Poset poset_from_json(const Json& j);
/// Requires a complete "grading" entry.
GradedPoset graded_poset_from_json(const Json& j);
bool json_has_grading(const Json& j);

// FreeComplex: {"num_vars": m, "basis": [[deg,...],...], "differentials":
// [[[row, col, scalar],...],...]} where differentials[n] maps basis[n+1] to
// basis[n] and scalars are strings like "-1" or "3/4".
Json complex_to_json(const FreeComplex& f);
FreeComplex complex_from_json(const Json& j);

// BettiTable: [{"d": int, "degree": [ints], "beta": int}, ...]
Json betti_table_to_json(const BettiTable& t);
BettiTable betti_table_from_json(const Json& j);

// DegreeMap: {"target_num_vars": t, "map": [[[src...],[dst...]], ...]}
Json degree_map_to_json(const DegreeMap& m);
DegreeMap degree_map_from_json(const Json& j);

/// Ideal source sniffing: JSON when the first non-space byte is '{',
/// otherwise the monomial-string format.
MonomialIdeal ideal_from_text(const std::string& text);

}  // namespace bettikit
