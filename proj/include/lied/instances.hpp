#pragma once

// Generators of test instances: strict dg Lie algebras g (x) A, structures obtained from
// them by change of basis and by pulling back along weak morphisms with f1 = id, and
// (structure, retract) pairs for homotopy transfer.

#include "lied/htt.hpp"

#include <random>
#include <string>

namespace lied {

using Rng = std::mt19937;

QMatrix random_matrix(Rng& rng, int rows, int cols, int range = 1);
MultiMap random_map(Rng& rng, const ComplexPtr& src, const ComplexPtr& tgt, int arity, int degree, int range = 1);
// Invertible matrix with small entries.
QMatrix random_invertible(Rng& rng, int n);

// The structure g(x)A for a Lie algebra g in degree 0 and a dg commutative algebra A,
// plus a contractible abelian summand.  Named pieces are listed by describe().
struct StrictLieSpec {
  int lie = 0;     // 0 abelian line, 1 abelian plane, 2 affine plane, 3 sl2, 4 Heisenberg
  int algebra = 0; // 0 Q, 1 Q[e] de=0, 2 Q[e] de=1, 3 <1,e,t> dt=e, 4 <1,e,t> d=0, 5 Q[e1,e2]
  int c1 = 0, c2 = 0;  // d e_i = c_i for algebra 5
  int pairs10 = 0, pairs21 = 0;  // contractible pairs in degrees (1,0) and (2,1)
  std::string describe() const;
};
WeakLie3Structure strict_lie(const StrictLieSpec& spec);
StrictLieSpec random_strict_spec(Rng& rng, int max_dim = 4);

// New structure on an isomorphic complex: maps conjugated by g_k (one per degree).
WeakLie3Structure transport_structure(const WeakLie3Structure& s, const std::array<QMatrix, 3>& g);

// The unique structure on target.complex making (id, f2, f21, f3) a weak morphism into
// target, returned together with that morphism.
WeakMorphism pull_back(const WeakLie3Structure& target, const MultiMap& f2, const MultiMap& f21, const MultiMap& f3);
WeakMorphism random_pull_back(Rng& rng, const WeakLie3Structure& target);

// Strict Lie algebra, random change of basis, random pull-back: all seven maps generic.
WeakLie3Structure random_weak_structure(Rng& rng, int max_dim = 4, std::string* description = nullptr);

struct HttInstance {
  WeakLie3Structure structure;
  DeformationRetract retract;
  bool side_conditions;
  std::string description;
};
HttInstance random_htt_instance(Rng& rng, bool side_conditions, int max_dim = 4);

}  // namespace lied
