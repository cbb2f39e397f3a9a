#pragma once

#include "json.hpp"
#include "orbitclass/localize.hpp"
#include "orbitclass/matroid.hpp"
#include "orbitclass/schur.hpp"
#include "orbitclass/split.hpp"

namespace orbitclass {

// Serialization to and from the documented JSON shapes. Parsers throw
// ParseError on malformed input; where a document can be either a bare
// payload or wrapped in a result envelope ({"result": ...}), both forms are
// accepted.

// Array of {"c": "<signed-decimal-integer>", "u": [...], "t": [...]} in
// canonical term order.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const VarSpace& vs, const nlohmann::json& j);

// Array of parts.
nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// {"rows": r, "cols": n, "entries": [["p/q", ...], ...]}
nlohmann::json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);

// {"n": n, "r": r, "bases": [[sorted ints], ...]}
nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);

// Array of {"basis": [ints], "value": <poly JSON>}, one entry per r-subset.
// The parser accepts a bare array or an envelope carrying "r"/"n" fields;
// for bare arrays the sizes are inferred from the basis lists.
nlohmann::json tuple_to_json(const GKMTuple& f);
GKMTuple tuple_from_json(const nlohmann::json& j);

// Array of {"partition": [...], "coeff": <poly JSON>}.
nlohmann::json schur_expansion_to_json(const SchurExpansion& e);

// {"coefficients": [...], "overflow": [...], "convention": {"eps_u", "eps_t"}}
nlohmann::json schubert_expansion_to_json(const SchubertExpansion& e);
SchubertExpansion schubert_expansion_from_json(const VarSpace& vs, const nlohmann::json& j);

}  // namespace orbitclass
