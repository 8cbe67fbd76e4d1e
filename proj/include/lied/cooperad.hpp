#pragma once

// Presented dg cooperads: generators, differential, and reduced decomposition map
// stored as two-level trees with explicit unit vertices.

#include "lied/report.hpp"
#include "lied/sigma.hpp"

#include <map>
#include <string>

namespace lied {

class Cooperad : public SigmaModule {
 public:
  std::map<int, IExpr> reduced;  // reduced decomposition of untwisted generators

  void finalize();  // caches full decompositions; call after editing the tables

  // x is a combination of single-vertex trees.
  IExpr d(const IExpr& x) const { return apply_differential(*this, x); }
  IExpr rdecomp(const IExpr& x) const;
  IExpr decomp(const IExpr& x) const;
  // Linear part of the reduced decomposition, as two-vertex trees without units.
  IExpr partial_decomp(const IExpr& x) const;

  // Full decomposition of a generator (the unit included), two-level with units.
  const IExpr& full_image(int id) const;

 private:
  std::map<int, IExpr> full_;
};

// Name of a LieD[3] generator in tables, e.g. mu_name(3, {1, 2}) = "mu312".
std::string mu_name(int n, const std::vector<int>& idx = {});

Cooperad build_leibk(int max_arity);
Cooperad build_liek(int max_arity);
Cooperad build_lied3();

// The signed Leibniz decomposition formula for arity n with generator names prefix+k
// (prefix "nu" for Leib^i, "mu" for the bottom generators of LieD[3]).
IExpr leib_reduced_decomposition(const std::string& prefix, int n);

// Differential squares to zero, decomposition commutes with it, coassociativity, counit.
Report check_cooperad(const Cooperad& c);

struct CooperadMorphism {
  std::string name;
  std::map<int, IExpr> images;  // untwisted generator -> combination in the target; absent is zero
  IExpr apply(const IExpr& tree) const;  // vertexwise on trees, the unit is fixed
};

CooperadMorphism build_psi(const Cooperad& source, const Cooperad& liek);
// psi d = d psi and (psi o psi) rdecomp = rdecomp psi on every generator.
Report check_cooperad_morphism(const CooperadMorphism& f, const Cooperad& source, const Cooperad& target);

// Copy of c with the coefficient of the term_index-th term of the reduced
// decomposition of generator name negated (mutation tests).
Cooperad flip_decomposition_term(const Cooperad& c, const std::string& name, size_t term_index);

}  // namespace lied
