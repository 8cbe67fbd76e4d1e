#pragma once

// Homotopy transfer of weak Lie 3-algebra structures along a deformation retract
//   p : big -> small,  i : small -> big,  h : big -> big of degree 1,
//   id - i p = d h + h d,  p i = id.

#include "lied/wlie3.hpp"

#include <string>
#include <vector>

namespace lied {

struct DeformationRetract {
  ComplexPtr big, small;
  MultiMap p, i, h;

  // Throws std::invalid_argument on wrong shapes.
  void validate() const;
  // Chain maps, the homotopy relation and p i = id, one row each.
  Report check() const;
  // h^2 = 0, h i = 0, p h = 0 (not required for transfer).
  bool side_conditions() const;

  static DeformationRetract trivial(const ComplexPtr& c);
};

// Retract onto homology plus keep[k] of the contractible pairs in degrees (k+1, k).
// h satisfies the side conditions.
DeformationRetract standard_retract(const ComplexPtr& big, std::array<int, 2> keep = {0, 0});
// Replaces h by h + d(s) for a degree-2 map s; the retract relations survive.
DeformationRetract perturb_homotopy(const DeformationRetract& r, const MultiMap& s);

// Transfer formulas as tree expressions in l.. and h; the transferred map is
// p o T o (i, .., i).  Inclusion components are T o (i, .., i) for f2, f21, f3.
struct TransferFormula {
  std::string name;  // "l3", "f21", ...
  std::string label;  // equation label it transcribes, "htt:l3"
  std::string text;
};
const std::vector<TransferFormula>& transfer_formulas();
const std::vector<TransferFormula>& inclusion_formulas();

WeakLie3Structure transfer_structure(const WeakLie3Structure& s, const DeformationRetract& r);
// Weak morphism from transfer_structure(s, r) to s extending i.
WeakMorphism build_inclusion(const WeakLie3Structure& s, const DeformationRetract& r);
// Same with replacement tables (mutation tests).
WeakLie3Structure transfer_structure(const WeakLie3Structure& s, const DeformationRetract& r,
                                     const std::vector<TransferFormula>& formulas);
WeakMorphism build_inclusion(const WeakLie3Structure& s, const DeformationRetract& r,
                             const std::vector<TransferFormula>& structure_formulas,
                             const std::vector<TransferFormula>& components);

}  // namespace lied
