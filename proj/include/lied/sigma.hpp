#pragma once

// Free dg Sigma-modules presented by generators, and composite products of them
// realised as labelled two-level trees (see tree.hpp).  Unit slots of a composite
// are the arity-one vertex "1".

#include "lied/tree.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lied {

struct SigmaModule {
  std::string name;
  std::vector<int> generators;        // the unit is implicit when has_unit
  std::map<int, IExpr> differential;  // on untwisted generators; absent means zero
  bool has_unit = true;

  std::vector<int> generators_of(int arity) const;
  int max_arity() const;
};

// The identity module I (only the unit).
SigmaModule identity_module();

// Internal differential extended to trees as a degree -1 derivation.
IExpr apply_differential(const SigmaModule& m, const IExpr& x);

// Degree-r basis of (M o N)(n): one canonical labelled tree per basis element.
std::vector<Code> composite_basis(const SigmaModule& M, const SigmaModule& N, int n, int degree);
// Basis of (M o_(1) N)(n): trees with exactly one slot taken from the generators of N.
std::vector<Code> infinitesimal_basis(const SigmaModule& M, const SigmaModule& N, int n, int degree);
// Independent rank oracle: raw planar labelled trees modulo the symmetry relations of
// their vertices, rank computed by exact elimination.
int composite_rank_by_relations(const SigmaModule& M, const SigmaModule& N, int n, int degree,
                                bool infinitesimal = false);

// A degree-g map of Sigma-modules given on untwisted generators.
struct VertexMap {
  int degree = 0;
  std::function<IExpr(int)> image;
  static VertexMap identity();
};

enum class CompositeMode { Full, Linear, Prime };

// f o g, f o_(1) g, f o' g on two-level trees (top vertex first in preorder).
//   Full:   f on the top vertex and g on every second-level vertex.
//   Linear: f on the top vertex and g on the unique non-unit second-level vertex.
//   Prime:  sum over second-level slots of f on top, g on that slot, identity elsewhere.
IExpr map_composite(const IExpr& x, const VertexMap& f, const VertexMap& g, CompositeMode mode);

// Removes unit vertices (arity one, degree zero, so no signs arise).
IExpr strip_units(const IExpr& x);
// Inserts unit vertices so that every leaf sits at depth two below a two-level root;
// the input must have at most one vertex between root and each leaf.
IExpr pad_units(const IExpr& x);

}  // namespace lied
