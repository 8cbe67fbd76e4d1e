#pragma once

#include "lied/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lied {

// Permutation of {1..n} in one-line notation: img[i-1] = p(i).
// Composition is (p*q)(i) = p(q(i)) everywhere in this library.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // validates bijectivity
  static Perm identity(int n);
  // Cycle notation "(12)(34)", "(132)", "id"/"1"; digits are single points unless
  // separated by spaces or commas inside a cycle, e.g. "(10 11)".
  static Perm parse(const std::string& cycles, int n);

  int arity() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  int sign() const;
  bool is_identity() const;
  std::string cycles() const;  // "id" for the identity
  std::string one_line() const;

  friend Perm operator*(const Perm& p, const Perm& q);  // p after q
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

Perm compose(const Perm& p, const Perm& q);

// All permutations of {1..n} in lexicographic one-line order.
std::vector<Perm> all_perms(int n);

// Shuffle families for a block decomposition n = n_1 + ... + n_m.
std::vector<Perm> shuffles(const std::vector<int>& blocks);
std::vector<Perm> reduced_shuffles(const std::vector<int>& blocks);
std::vector<Perm> unshuffles(const std::vector<int>& blocks);
std::vector<Perm> reduced_unshuffles(const std::vector<int>& blocks);
bool is_shuffle(const Perm& p, const std::vector<int>& blocks);
bool is_reduced_shuffle(const Perm& p, const std::vector<int>& blocks);

// Koszul sign of reordering graded symbols x_1..x_n into x_{order[0]},...,x_{order[n-1]}
// (order holds 0-based source indices).
int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& order);

// Element of Z[S_n]; zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n = 1) : n_(n) {}
  static GroupAlgebraElement from_perm(const Perm& p, Int c = 1);
  // "1-(12)+(123)", "2(13)", "-id"
  static GroupAlgebraElement parse(const std::string& s, int n);

  int arity() const { return n_; }
  const std::map<Perm, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Perm& p, const Int& c);

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-() const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const Int& c) const;
  bool operator==(const GroupAlgebraElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  std::string str() const;

 private:
  int n_;
  std::map<Perm, Int> terms_;
};

Int factorial(int n);
Int multinomial(const std::vector<int>& blocks);

}  // namespace lied
