#pragma once

#include <string>

#include <json.hpp>

#include "totcof/chain_complex.hpp"
#include "totcof/conditions.hpp"
#include "totcof/derived_limits.hpp"
#include "totcof/diagram.hpp"
#include "totcof/homology.hpp"
#include "totcof/lattice.hpp"
#include "totcof/poset.hpp"

namespace totcof {

using Json = nlohmann::json;

/// Text to JSON; syntax errors become parse errors carrying line and column.
Json parse_json_text(const std::string& text);

// Every from_json below reports schema problems as parse errors prefixed by
// the JSON pointer of the offending value.

/// {"rows": r, "cols": c, "entries": [[i, j, "decimal"], ...]}, row-major,
/// zeros omitted.
Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j, const std::string& where = "");

/// {"free_rank": r, "torsion": ["d1", ...]}.
Json group_to_json(const GroupStructure& g);
/// {"degree": n, "free_rank": r, "torsion": [...]} for every degree lo..hi.
Json homology_to_json(const HomologySummary& h);

/// {"ambient_rank": n, "numerator": matrix, "denominator": matrix} with
/// generators as columns.
Json subquotient_to_json(const SubquotientGroup& g);
SubquotientGroup subquotient_from_json(const Json& j, const std::string& where = "");

/// {"elements": [...], "covers": [[a, b], ...], "ideal": [...]} plus
/// "ball_dimension" when recorded. Covers are written as the covering
/// relation in index order.
Json poset_pair_to_json(const PosetPair& pair);
PosetPair poset_pair_from_json(const Json& j, const std::string& where = "");
PosetPair parse_poset_json(const std::string& text);

/// {"lo": n, "bases": [[label, ...], ...], "differentials": [matrix, ...]}
/// with differentials[k] leaving degree lo + k.
Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j, const std::string& where = "");

/// {"kind": "complexes", "values": {label: complex}, "maps": [{"cover": [a,
/// b], "components": [{"degree": n, "matrix": m}, ...]}, ...]}. The poset
/// is given separately or embedded under "poset".
Json diagram_to_json(const DiagramOfComplexes& d);
DiagramOfComplexes diagram_from_json(const Json& j, const Poset& poset, const std::string& where = "");

/// {"kind": "abelian", "values": {label: subquotient}, "maps": [{"cover":
/// [a, b], "matrix": m}, ...]}.
Json abelian_diagram_to_json(const AbelianDiagram& a);
AbelianDiagram abelian_diagram_from_json(const Json& j, const Poset& poset, const std::string& where = "");

/// {"p1": {...}, "p2": {...}, "witnesses": [...]} plus strong variants when
/// computed.
Json condition_report_to_json(const ConditionReport& r);

}  // namespace totcof
