#pragma once

// 3-term chain complexes L0 <- L1 <- L2 over Q and graded multilinear maps between them,
// with the sign conventions of the endomorphism operad:
//   mu^s(v1..vn)       = eps(s; v) mu(v_{s^-1(1)}, ..., v_{s^-1(n)})
//   d(mu)              = d o mu - (-1)^{|mu|} mu o d^{(x)n}
//   (mu o_i nu)(v)     = (-1)^{|nu|(|v1|+..+|v_{i-1}|)} mu(v1, .., nu(vi, ..), ..)

#include "lied/matrix.hpp"
#include "lied/perm.hpp"
#include "lied/tree.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lied {

struct Complex3 {
  std::array<int, 3> dims{0, 0, 0};
  QMatrix d1;  // L1 -> L0, dims[0] x dims[1]
  QMatrix d2;  // L2 -> L1, dims[1] x dims[2]

  static Complex3 make(std::array<int, 3> dims, QMatrix d1 = {}, QMatrix d2 = {});  // empty = zero
  // Differential L_p -> L_{p-1}; p in {1, 2}.
  const QMatrix& d(int p) const;
  int dim(int p) const { return p < 0 || p > 2 ? 0 : dims[p]; }
  bool is_complex() const;  // shapes and d1 d2 = 0
  bool operator==(const Complex3& o) const = default;
};

using ComplexPtr = std::shared_ptr<const Complex3>;
ComplexPtr share(Complex3 c);

// Multilinear map L^{(x)n} -> L' of degree g, stored by input degree tuple.  A block
// for (p1..pn) is a dim L'_{p+g} x prod dim L_{pi} matrix, tensor index row-major.
class MultiMap {
 public:
  using Degrees = std::vector<int>;

  MultiMap() = default;
  MultiMap(ComplexPtr src, ComplexPtr tgt, int arity, int degree);
  static MultiMap identity(ComplexPtr c);
  // Degree-0 arity-1 map from a block matrix per degree.
  static MultiMap linear(ComplexPtr src, ComplexPtr tgt, int degree, const std::array<QMatrix, 3>& parts);

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const ComplexPtr& src() const { return src_; }
  const ComplexPtr& tgt() const { return tgt_; }

  // All input degree tuples whose output degree lies in 0..2.
  std::vector<Degrees> tuples() const;
  bool in_window(const Degrees& p) const;
  int rows(const Degrees& p) const;
  int cols(const Degrees& p) const;

  // Zero matrix of the right shape when absent.
  QMatrix block(const Degrees& p) const;
  const std::map<Degrees, QMatrix>& blocks() const { return blocks_; }
  void set_block(const Degrees& p, QMatrix m);  // zero blocks are dropped
  void add_block(const Degrees& p, const QMatrix& m, const Rat& c = Rat(1));

  // Value on a tensor of basis vectors (degree, index); the output is a column vector.
  QMatrix apply(const std::vector<std::pair<int, int>>& basis) const;

  MultiMap operator+(const MultiMap& o) const;
  MultiMap operator-(const MultiMap& o) const;
  MultiMap operator-() const { return scaled(Rat(-1)); }
  MultiMap scaled(const Rat& k) const;
  void add(const MultiMap& o, const Rat& c = Rat(1));
  bool is_zero() const { return blocks_.empty(); }
  bool operator==(const MultiMap& o) const;
  bool operator!=(const MultiMap& o) const { return !(*this == o); }

  // "block (0,1,0) entry (2,3) = -1/2" for reports, "" when zero.
  std::string first_nonzero() const;

 private:
  void check_shape(const MultiMap& o, const char* what) const;

  ComplexPtr src_, tgt_;
  int arity_ = 0, degree_ = 0;
  std::map<Degrees, QMatrix> blocks_;
};

MultiMap act(const MultiMap& mu, const Perm& s);
MultiMap act(const MultiMap& mu, const GroupAlgebraElement& a);
// sum_s sgn(s) mu^s
MultiMap alternate(const MultiMap& mu);
MultiMap hom_differential(const MultiMap& mu);
MultiMap partial_compose(const MultiMap& mu, int i, const MultiMap& nu);
// mu o (nu_1..nu_k) = (((mu o_1 nu_1) o_{1+k_1} nu_2) ...); all nu_j share a source.
MultiMap full_compose(const MultiMap& mu, const std::vector<MultiMap>& nus);

// Value of a tree expression under an assignment of maps to generators.  Leaves are
// the identity of bottom; top is the target of the result (used for the zero shape).
using Assignment = std::function<const MultiMap*(int generator)>;
MultiMap evaluate(const QExpr& e, const Assignment& a, const ComplexPtr& bottom, const ComplexPtr& top,
                  int arity, int degree);

}  // namespace lied
