#pragma once

// CLWX 2-algebroids over an abstract function space F, the weak Lie 3-algebra on
// E0 <- E1 <- F they induce, and the closed form of its skew-symmetrization.
//
// All data live on the complex L = (E0 <-partial- E1 <-D- F) as graded maps:
//   circ  (2, 0)  blocks (0,0) (0,1) (1,0)   values in E
//   omega (3, 1)  block (0,0,0)              values in E1
//   S     (2, 1)  blocks (0,1) (1,0)         values in F
//   rho   (2, 0)  block (0,2)                rho(e)(f)
// The checker treats E = E0 (+) E1 ungraded where the axioms quantify over all of it.

#include "lied/skew.hpp"

#include <string>
#include <vector>

namespace lied {

struct CLWXData {
  ComplexPtr complex;
  MultiMap circ, omega, S, rho;

  static CLWXData zero(ComplexPtr c);
  void validate() const;  // shapes only
  int e0() const { return complex->dims[0]; }
  int e1() const { return complex->dims[1]; }
  int f() const { return complex->dims[2]; }
};

Report check_clwx(const CLWXData& data);
// Throws std::invalid_argument naming the first failed axiom.
WeakLie3Structure clwx_to_wlie3(const CLWXData& data);
Lie3Structure corollary_closed_form(const CLWXData& data);
// skew_structure(clwx_to_wlie3(data)) against the closed form, one row per map.
Report check_corollary(const CLWXData& data);

// Parameterized family searched for instances passing check_clwx.
//   E0 = g, E1 = g^*, F = Q, S the evaluation pairing, alpha = a x_0^*,
//   x o y = [x,y],  x o b = ad^*_x b + alpha(x) b,  b o x = b(x) alpha - x o b,
//   rho(x)(1) = alpha(x),  D(1) = alpha,  partial = t K,  omega = w vol (dimension 4).
struct CLWXFamily {
  int lie = 0;  // 0 abelian of dimension dim, 1 sl2, 2 Heisenberg, 3 affine plane
  int dim = 1;
  int t = 0, a = 0, w = 0;
  std::string describe() const;
};
// Throws std::invalid_argument when partial D != 0.
CLWXData clwx_family(const CLWXFamily& p);

struct CLWXInstance {
  CLWXFamily family;
  CLWXData data;
};
// Every family member with t, a, w in {-1, 0, 1} that passes check_clwx.
std::vector<CLWXInstance> clwx_search();

}  // namespace lied
