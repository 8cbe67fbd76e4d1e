#pragma once

// Operadic expressions as linear combinations of leaf-labelled planar trees.
//
// A monomial is stored as its preorder code: a vertex is its generator id (>= 0)
// followed by the codes of its children, a leaf is -label.  The value of a
// monomial is the planar composite of its vertex labels (tensor factors taken in
// preorder, Koszul rule) acted on by the permutation whose inverse is the leaf
// label sequence; i.e. input number j enters at the leaf labelled j.
// Right actions satisfy (x^s)^t = x^{s*t}.

#include "lied/perm.hpp"
#include "lied/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lied {

enum class Symmetry { Free, Sign, Trivial };

struct Generator {
  std::string name;
  std::string display;
  int arity;
  int degree;
  Symmetry sym;
};

// Process-wide generator table.  Registration is idempotent for identical data.
int define_generator(const std::string& name, int arity, int degree, Symmetry sym = Symmetry::Free,
                     const std::string& display = "");
int gen_id(const std::string& name);
std::optional<int> find_generator(const std::string& name);
const Generator& gen(int id);
// Arity-one degree-zero generator "1" used for units in composite products.
int unit_generator();

using Code = std::vector<int>;

size_t subtree_end(const Code& c, size_t pos);
int code_arity(const Code& c);
int code_degree(const Code& c);
int vertex_count(const Code& c);
std::vector<int> leaf_labels(const Code& c);  // in planar order
std::string code_str(const Code& c);
// Paper-style rendering of a two-level tree, e.g. "mu2∘(mu2,1)^(12)".
std::string composite_str(const Code& c);
// Canonical representative for Sign/Trivial vertices (children ordered by least leaf);
// returns the sign, 0 if the monomial vanishes.
int canonicalize(Code& c);

template <class K>
class Expr {
 public:
  using Terms = std::map<Code, K>;

  Expr() = default;
  static Expr gen(int id, K c = K(1));
  static Expr gen(const std::string& name, K c = K(1));
  static Expr leaf(K c = K(1));  // the operadic identity
  static Expr mono(Code code, K c = K(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  int arity() const;   // -1 when zero
  int degree() const;  // -1000 when zero or inhomogeneous

  void add(const Code& c, const K& k);  // canonicalizes
  void add_canonical(const Code& c, const K& k);
  void add(const Expr& e, const K& k = K(1));

  Expr operator+(const Expr& o) const;
  Expr operator-(const Expr& o) const;
  Expr operator-() const;
  Expr scaled(const K& k) const;
  bool operator==(const Expr& o) const { return terms_ == o.terms_; }
  bool operator!=(const Expr& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Terms terms_;
};

using IExpr = Expr<Int>;
using QExpr = Expr<Rat>;

QExpr to_rational(const IExpr& e);
// Throws std::domain_error when a coefficient is not integral.
IExpr to_integral(const QExpr& e);

template <class K>
Expr<K> act(const Expr<K>& e, const Perm& p);
template <class K>
Expr<K> act(const Expr<K>& e, const GroupAlgebraElement& a);
// Signed average sum_{s in S_n} sgn(s) e^s.
template <class K>
Expr<K> alternate(const Expr<K>& e);

// Partial composition a o_i b.
template <class K>
Expr<K> partial(const Expr<K>& a, int i, const Expr<K>& b);
// Full composition a o (b_1,...,b_m) = (((a o_1 b_1) o_{1+k_1} b_2) ...).
template <class K>
Expr<K> full(const Expr<K>& a, const std::vector<Expr<K>>& bs);

// Substitutes simultaneously the vertices selected by images (preorder vertex index,
// nullptr keeps the vertex).  map_degrees[v] is the degree of the map producing images[v];
// the tensor Koszul sign is applied.
template <class K>
Expr<K> replace_vertices(const Code& c, const K& coef, const std::vector<const Expr<K>*>& images,
                         const std::vector<int>& map_degrees);

// Operad morphism (degree 0) defined on generators; f returns nullptr to keep a vertex.
template <class K>
Expr<K> map_generators(const Expr<K>& e, const std::function<const Expr<K>*(int)>& f);

// Derivation of the given degree defined on generators (nullptr means zero).
template <class K>
Expr<K> apply_derivation(const Expr<K>& e, const std::function<const Expr<K>*(int)>& f, int degree);

// Parser for the textual notation used in all formula tables.
//   terms:     [coef] composite [^perm | ^{group algebra}]   coef like 2, 1/24
//   composite: x o1 y,   x o (y, 1, z),   left associative
//   primaries: name, name[(12)], 1, (expr), alt(expr)
// With units_as_vertices the symbol 1 is the arity-one generator "1" (composite
// products of cooperads); otherwise it is the bare identity leaf.
QExpr parse_expr(const std::string& text, bool units_as_vertices = false);
IExpr parse_iexpr(const std::string& text, bool units_as_vertices = false);

}  // namespace lied
