#pragma once

// Chain complexes attached to a presented cooperad C:
//   C(n) itself, with basis the twisted generators g^s;
//   the twisted composite product (C o_k Lie)(n), k = kappa o psi.
// A basis element of (C o Lie)(n) is a generator g of arity m (or the unit) together
// with an ordered partition of {1..n} into m blocks, each block carrying a
// left-normed Lie basis word whose first letter is the least one of the block.

#include "lied/cooperad.hpp"
#include "lied/homology.hpp"
#include "lied/lie.hpp"
#include "lied/report.hpp"

#include <map>
#include <vector>

namespace lied {

struct ArityComplex {
  int arity = 0;
  std::map<int, std::vector<Code>> basis;  // degree -> single-vertex trees g^s
  IntegerComplex complex;
};

ArityComplex cooperad_arity_complex(const Cooperad& c, int n);

// H_r(psi) : H_r(C(n)) -> H_r(Lie^i(n)) is an isomorphism for r <= max_degree and
// 1 <= n <= max_arity.  Lie^i(n) is Z in degree n-1 and zero elsewhere.
Report check_psi_homology(const Cooperad& lied3, int max_arity, int max_degree = 3);

struct TwistedBasis {
  int generator;            // unit_generator() in degree 0
  std::vector<Word> blocks; // planar order of the slots
  bool operator<(const TwistedBasis& o) const {
    return generator != o.generator ? generator < o.generator : blocks < o.blocks;
  }
};

struct TwistedComplex {
  int arity = 0;
  bool twisted = true;
  std::map<int, std::vector<TwistedBasis>> basis;
  IntegerComplex complex;
};

// Degrees 0..top.  With twisted = false the differential is d_C o 1 alone.
TwistedComplex build_twisted_complex(const Cooperad& c, int n, int top, bool twisted = true);

struct AcyclicityRow {
  int arity;
  int degree;
  int rank;            // dim of the chain group
  HomologyGroup homology;
};

// H_r((C o_k Lie)(n)) = 0 for r <= max_degree and 2 <= n <= max_arity, plus d^2 = 0.
Report verify_acyclicity(const Cooperad& c, int max_arity, int max_degree = 3, bool twisted = true,
                         std::vector<AcyclicityRow>* rows = nullptr);

}  // namespace lied
