#pragma once

// Lie(n) realised inside the associative operad: a Lie element of arity n is an
// integer combination of words in the letters 1..n, each letter used once.

#include "lied/perm.hpp"
#include "lied/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lied {

using Word = std::vector<int>;

class AssWord {
 public:
  using Terms = std::map<Word, Int>;

  AssWord() = default;
  static AssWord letter(int i);
  static AssWord word(const Word& w, Int c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int arity() const;  // word length, -1 when zero
  void add(const Word& w, const Int& c);
  void add(const AssWord& o, const Int& c = 1);

  AssWord operator+(const AssWord& o) const;
  AssWord operator-(const AssWord& o) const;
  AssWord operator-() const;
  AssWord scaled(const Int& c) const;
  AssWord operator*(const AssWord& o) const;  // concatenation
  bool operator==(const AssWord& o) const = default;

  std::string str() const;

 private:
  Terms terms_;
};

AssWord bracket(const AssWord& a, const AssWord& b);

// "[[1,2],3]" style binary bracketing with distinct positive letters.
AssWord expand_bracket(const std::string& tree);

// Right action: letter l becomes p^{-1}(l), so that (w^p)^q = w^{p*q}.
AssWord act(const AssWord& w, const Perm& p);

// Left-normed bracket [[..[x_{w1},x_{w2}],..],x_{wk}].
AssWord left_comb(const Word& w);

// Basis of Lie(n): left-normed brackets starting with x_1, indexed by words
// (1, t2, ..., tn) in lexicographic order.
std::vector<Word> lie_basis_words(int n);
std::vector<AssWord> lie_basis(int n);

// Coordinates in the left-normed basis on the letter set of w (first letter the
// least one).  Empty optional when the combination is not a Lie element.
std::optional<std::map<Word, Int>> lie_coordinates(const AssWord& w);
bool is_lie(const AssWord& w);

// a o_i b: letter i of a replaced by b, letters relabelled consecutively.
AssWord lie_compose(const AssWord& a, int i, const AssWord& b);

// kappa o psi on a generator of the bottom of LieD[3], twisted by p:
// mu2 -> [x1,x2], every other generator -> 0.
AssWord kappa_psi(int generator, const Perm& p);

}  // namespace lied
