#pragma once

// JSON (de)serialization for every value that crosses the tool boundary.
//
// Formats (all scalars are decimal strings like "3", "-7", "2/5"; the
// coefficient backend is carried once at file level):
//   coefficient spec   "Z" | "Q" | "F_<p>"
//   matrix             {"rows": r, "cols": c, "entries": [[row strings]]}
//   object             {"dim": n} over a field; {"rank": r, "torsion": [...]}
//                      over the integers (torsion normalized to invariant
//                      factors on input)
//   chain complex      {"coefficients", "window": [lo, hi],
//                       "objects": {"k": object}, "differentials": {"k": d_k}}
//                      where column j of d_k acts on generator j of A_{k+1};
//                      omitted degrees are zero
//   chain map          {"components": {"k": matrix}}
//   2-morphism         {"domain": chain map, "homotopy": {"k": matrix}}
//   skeletal 2-group   {"G": mult table, "A": invariant factors,
//                       "action": [[a]], "z": [[[a]]]} (serial-number tables)
//
// Parsing is strict: unknown keys, malformed scalars, shape mismatches, and
// d.d != 0 are all rejected with std::invalid_argument naming the problem.

#include <string>
#include <utility>

#include <json.hpp>

#include "symchain/complex.hpp"
#include "symchain/oracle.hpp"
#include "symchain/skeletal.hpp"
#include "symchain/symmetry.hpp"

namespace symchain {

using Json = nlohmann::ordered_json;

Json spec_to_json(const CoefficientSpec& spec);
CoefficientSpec spec_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const CoefficientSpec& spec, const Json& j);

Json object_to_json(const CoeffObject& o);
CoeffObject object_from_json(const CoefficientSpec& spec, const Json& j);

Json complex_to_json(const ChainComplex& a);
ChainComplex complex_from_json(const Json& j);

Json chain_map_to_json(const ChainMap& f);
// endomorphism components A_k -> B_k of the given complexes
ChainMap chain_map_from_json(const ChainComplex& a, const ChainComplex& b, const Json& j);

Json two_morphism_to_json(const TwoCell& t);
// a 2-morphism on endomorphisms of a: domain chain map + degree-1 homotopy
TwoCell two_morphism_from_json(const ChainComplex& a, const Json& j);

Json skeletal_to_json(const SkeletalTwoGroup& t);
SkeletalTwoGroup skeletal_from_json(const Json& j);

/* ---- report fragments ----------------------------------------------------------- */

Json group_info_to_json(const GroupInfo& g);
Json theorem_report_to_json(const TheoremReport& t);
Json cross_check_to_json(const CrossCheckReport& r);
Json sinh_report_to_json(const SinhReport& r);
Json homology_to_json(const ChainComplex& a);

/* ---- files ------------------------------------------------------------------------ */

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);
ChainComplex load_complex(const std::string& path);

}  // namespace symchain
