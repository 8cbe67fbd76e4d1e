#pragma once

// JSON form of complexes, graded maps, structures, morphisms, retracts, CLWX data and
// reports.  Rationals are strings "num/den" (integers may also be JSON numbers).
//
//   complex   {"dims": [d0,d1,d2], "d1": rows, "d2": rows}
//   map       {"arity": n, "degree": g, "blocks": {"p1,..,pn": rows}}
//   structure {"schema": "lied/wlie3/1", "complex": .., "maps": {"l2": map, ..}}
//   morphism  {"schema": "lied/morphism/1", "source": structure, "target": structure, "maps": {..}}
//   retract   {"schema": "lied/retract/1", "big": complex, "small": complex, "p", "i", "h"}
//   lie3      {"schema": "lied/lie3/1", "complex": .., "maps": {"l2", "l3", "l4"}}
//   clwx      {"schema": "lied/clwx/1", "E0","E1","F": dims, "partial","D": rows,
//              "circ","Omega","S","rho": maps}
// Maps absent from "maps" are zero.  Readers throw std::invalid_argument.

#include "lied/clwx.hpp"
#include "lied/htt.hpp"

#include "json.hpp"

namespace lied {

using json = nlohmann::json;

json to_json(const Rat& q);
Rat rat_from_json(const json& j);
json to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j, int rows, int cols);
json to_json(const Complex3& c);
ComplexPtr complex_from_json(const json& j);
json to_json(const MultiMap& m);
MultiMap map_from_json(const json& j, const ComplexPtr& src, const ComplexPtr& tgt, int arity, int degree);

json to_json(const WeakLie3Structure& s);
WeakLie3Structure structure_from_json(const json& j);
json to_json(const WeakMorphism& f);
WeakMorphism morphism_from_json(const json& j);
json to_json(const DeformationRetract& r);
DeformationRetract retract_from_json(const json& j);
json to_json(const Lie3Structure& t);
json to_json(const Lie3Morphism& f);
json to_json(const CLWXData& x);
CLWXData clwx_from_json(const json& j);

json to_json(const Report& r);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace lied
