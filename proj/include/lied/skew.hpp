#pragma once

// Skew-symmetrization of weak Lie 3-algebras and their morphisms, the checker for
// (semi-strict) Lie 3-algebras, and the functoriality defect of skew-symmetrization.

#include "lied/wlie3.hpp"

namespace lied {

struct Lie3Structure {
  ComplexPtr complex;
  MultiMap l2, l3, l4;  // (2,0), (3,1), (4,2)

  static Lie3Structure zero(ComplexPtr c);
  void validate() const;
};

struct Lie3Morphism {
  Lie3Structure source, target;
  MultiMap f1, f2, f3;  // (1,0), (2,1), (3,2)

  void validate() const;
};

// Skew-symmetry of l2, l3, l4 under every permutation, then Leib3:l2 .. Leib3:l5.
Report check_lie3(const Lie3Structure& t);
// Leib3:f1 .. Leib3:f4 against the two endpoints.
Report check_lie3_morphism(const Lie3Morphism& f);

// Formulas in the weak structure maps (and f.., l..' for morphisms).
struct SkewFormula {
  std::string name;
  std::string label;
  std::string text;
};
const std::vector<SkewFormula>& skew_structure_formulas();
const std::vector<SkewFormula>& skew_morphism_formulas();

Lie3Structure skew_structure(const WeakLie3Structure& s);
Lie3Structure skew_structure(const WeakLie3Structure& s, const std::vector<SkewFormula>& formulas);
Lie3Morphism skew_morphism(const WeakMorphism& f);
Lie3Morphism skew_morphism(const WeakMorphism& f, const std::vector<SkewFormula>& formulas);

// Composition of Lie 3-algebra morphisms (the Leibniz components), g o f.
Lie3Morphism compose_lie3(const Lie3Morphism& g, const Lie3Morphism& f);

// The skew-symmetrized maps obtained by precomposing the structure with Phi, i.e. the
// images Phi(s^-1 ell_n) with s^-1 mu_x renamed to l_x, as expressions and as maps.
struct PhiPullback {
  std::vector<std::pair<std::string, QExpr>> expressions;  // "l2", "l3", "l4"
};
PhiPullback phi_pullback();
// Compares the expressions with the skew formulas term by term and the evaluated maps
// with skew_structure(s).
Report check_phi_consistency(const WeakLie3Structure& s);

struct FunctorialityDefect {
  MultiMap low1, low2;   // (S(f' f) - S(f') S(f))_1 and _2
  MultiMap defect;       // the same difference in arity 3
  MultiMap witness;      // -1/24 alt(f'21 o (f2, f1) + f'21 o (f1, f2)), arity 3, degree 3
  Report report;         // low1 = 0, low2 = 0, defect = d(witness)
};
// f : L -> L', fp : L' -> L''.
// On 3-term complexes the witness has no room (inputs of total degree -1), so the
// defect itself must vanish.
FunctorialityDefect functoriality_defect(const WeakMorphism& fp, const WeakMorphism& f);
FunctorialityDefect functoriality_defect(const WeakMorphism& fp, const WeakMorphism& f,
                                         const std::vector<SkewFormula>& formulas);

}  // namespace lied
