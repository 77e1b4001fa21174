#ifndef CONCORDIUM_JSON_IO_HPP
#define CONCORDIUM_JSON_IO_HPP

// JSON wire formats for every domain value. Parsers accept unsorted and
// duplicated polynomial terms and validate the stated type invariants;
// serializers emit canonical representation (lex-sorted terms, no zero
// coefficients, alphabetically ordered keys) so identical values give
// byte-identical output.
//
// Coefficients are arbitrary precision: a term coefficient is a JSON
// integer when it fits in 64 bits and a decimal string otherwise; both are
// accepted on input.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "concordium/certify.hpp"
#include "concordium/diagram.hpp"
#include "concordium/laurent.hpp"
#include "concordium/legendrian.hpp"
#include "concordium/polymatrix.hpp"

namespace concordium {

using nlohmann::json;

json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

// {"terms": [{"c": <int|string>, "e": [<int>, <int>]}, ...]}
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

// {"n": <int>, "entries": [[<poly>, ...], ...]}
json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j);

// {"tb": <int>, "rot": <int>}
json knot_to_json(const LegendrianKnotInfo& k);
LegendrianKnotInfo knot_from_json(const json& j);

// {"tb": int, "rot": int, "winding": int, "n_plus": int|null,
//  "n_minus": int|null, "tau_pu": int|null, "pu_unknotted": bool}
json pattern_to_json(const PatternInvariants& p);
PatternInvariants pattern_from_json(const json& j);

// {"events": ["L_up", "L_down", "R_up", "R_down", "X+", "X-", ...]}
json front_to_json(const FrontDiagram& f);
FrontDiagram front_from_json(const json& j);

// {"components": [<label>, ...],
//  "crossings": [{"s": <+-1>, "over": <label>, "under": <label>}, ...]}
json diagram_to_json(const CrossingList& d);
CrossingList diagram_from_json(const json& j);

// {"lo": int|null, "hi": int|null}; null encodes the infinite endpoint.
json interval_to_json(const TauInterval& iv);
TauInterval interval_from_json(const json& j);

// {"conclusion": str, "steps": [{"claim": str, "cite": str, "data": {...}}]}
json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

// Parses a file, with line/column positions in parse-error messages.
json load_json_file(const std::filesystem::path& path);

}  // namespace concordium

#endif
