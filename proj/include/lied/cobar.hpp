#pragma once

// Cobar constructions on desuspended cooperad generators and the right inverse Phi
// of Omega(psi) : Omega LieD[3] -> Omega Lie^i.
//
// A generator s^-1 x has the arity of x and degree |x| - 1.  Trees are ordinary
// Expr monomials (vertices in preorder carry the Koszul signs).  The differential is
// d = d1 - d2 extended as a derivation, with
//   d1(s^-1 x) = -s^-1 dx,
//   d2(s^-1 x) = (s^-1 o_(1) s^-1) Delta_(1)(x),  i.e.  sum c (-1)^{|x'|} s^-1 x' o_i s^-1 x''.

#include "lied/cooperad.hpp"
#include "lied/report.hpp"

#include <map>
#include <string>

namespace lied {

// Registers (idempotently) the generator s^-1 g, named "s_" + name.
int desuspend(int g);

struct Cobar {
  std::string name;
  std::map<int, int> desusp;      // cooperad generator -> s^-1 generator
  std::map<int, QExpr> d_images;  // on s^-1 generators, absent means zero

  QExpr d(const QExpr& t) const;
  // s^-1 applied vertexwise to a combination of single-vertex cooperad trees.
  QExpr s_inv(const IExpr& x) const;
};

// d1_sign is the sign in d1(s^-1 x) = d1_sign * s^-1 dx; -1 is the Koszul sign of
// moving d past s^-1 and the only choice making Phi a chain map.
Cobar build_cobar(const Cooperad& c, int d1_sign = -1);

// Morphism of free operads given on generators; absent generators map to zero.
struct OperadMap {
  std::string name;
  std::map<int, QExpr> images;
  QExpr apply(const QExpr& t) const;
};

OperadMap cobar_map(const Cobar& source, const Cobar& target, const CooperadMorphism& f);

struct PhiCoefficients {
  Rat c2{1, 2};
  Rat c3{1, 6};
  Rat c3_quadratic{-1, 24};
  Rat c4{1, 24};
  Rat c4_quadratic{1, 48};
};

// Phi on s^-1 ell_2, s^-1 ell_3, s^-1 ell_4.
OperadMap build_phi(const Cobar& lied3, const Cobar& liek, const PhiCoefficients& k = {});

// d Phi = Phi d and (Omega psi) Phi = id on the three generators.
Report check_phi(const OperadMap& phi, const Cobar& lied3, const Cobar& liek, const OperadMap& omega_psi);
// Builds LieD[3], Lie^i(<=4), their cobar constructions, Omega psi and Phi.
Report check_phi(const PhiCoefficients& k = {});

// (Delta phi - phi Delta)(ell_3) for the naive signed average phi(ell_n) = 1/n! sum sgn(s) mu_n^s,
// as two-level trees with unit vertices.
QExpr naive_phi_defect(const Cooperad& lied3, const Cooperad& liek);

}  // namespace lied
