#include "doctest.h"

#include "lied/wlie3.hpp"
#include "random_maps.hpp"

using namespace lied;
using namespace testutil;

namespace {

// sl2 with basis e, f, h in degree 0.
WeakLie3Structure sl2() {
  auto L = share(Complex3::make({3, 0, 0}));
  WeakLie3Structure s = WeakLie3Structure::zero(L);
  QMatrix b(3, 9);
  auto set = [&](int x, int y, std::vector<int> v) {
    for (int r = 0; r < 3; ++r) {
      b(r, 3 * x + y) = v[r];
      b(r, 3 * y + x) = -v[r];
    }
  };
  set(2, 0, {2, 0, 0});   // [h,e] = 2e
  set(2, 1, {0, -2, 0});  // [h,f] = -2f
  set(0, 1, {0, 0, 1});   // [e,f] = h
  s["l2"].set_block({0, 0}, b);
  return s;
}

bool passes(const Report& r) { return all_ok(r); }

bool fails_at(const Report& r, const std::string& label) {
  for (auto& c : r)
    if (c.label == label) return !c.ok;
  return false;
}

// Transports a structure along invertible matrices (one per degree).
WeakLie3Structure transport(const WeakLie3Structure& s, const std::array<QMatrix, 3>& g) {
  std::array<QMatrix, 3> gi;
  for (int p = 0; p < 3; ++p) gi[p] = *inverse(g[p]);
  const Complex3& c = *s.complex;
  auto L = share(Complex3::make(c.dims, g[0] * c.d1 * gi[1], g[1] * c.d2 * gi[2]));
  MultiMap G = MultiMap::linear(s.complex, L, 0, g), Gi = MultiMap::linear(L, s.complex, 0, gi);
  WeakLie3Structure t;
  t.complex = L;
  for (auto& [name, m] : s.maps) t.maps.emplace(name, full_compose(G, {full_compose(m, std::vector<MultiMap>(m.arity(), Gi))}));
  return t;
}

}  // namespace

TEST_CASE("equation tables agree with the Maurer-Cartan expansion") {
  Report r = check_equation_tables();
  CHECK(r.size() == 23);
  for (auto& c : r) CHECK_MESSAGE(c.ok, c.label, " ", c.subject, " ", c.detail);
  CHECK(structure_equations().size() == 15);
  CHECK(morphism_equations().size() == 8);
}

TEST_CASE("worked expansions") {
  for (auto& s : synthesize_structure_equations()) {
    if (s.generator == "mu31") CHECK(s.expr == parse_expr("l3 + l3^(12) + l2 o1 l21"));
    if (s.generator == "mu2") CHECK(s.expr.is_zero());
    if (s.generator == "mu5") CHECK_FALSE(s.has_d);
  }
  for (auto& s : synthesize_morphism_equations())
    if (s.generator == "mu21") CHECK(s.expr == parse_expr("-f2 - f2^(12) + f1 o1 l21 - l21' o (f1, f1)"));
}

TEST_CASE("a mistranscribed table row is caught") {
  auto syn = synthesize_structure_equations();
  QExpr wrong = parse_expr("l3 - l3^(12) + l2 o1 l21");
  for (auto& s : syn)
    if (s.generator == "mu31") CHECK(s.expr != wrong);
}

TEST_CASE("zero structures and identity morphisms") {
  std::mt19937 rng(11);
  for (int t = 0; t < 5; ++t) {
    auto L = random_complex(rng, 3);
    WeakLie3Structure z = WeakLie3Structure::zero(L);
    CHECK(passes(check_structure(z)));
    CHECK(passes(check_morphism(WeakMorphism::identity(z))));
  }
}

TEST_CASE("Lie algebras in degree 0") {
  WeakLie3Structure s = sl2();
  CHECK(passes(check_structure(s)));
  CHECK(passes(check_morphism(WeakMorphism::identity(s))));
  // a non-skew bracket violates l21, a skew non-Jacobi one violates l3
  WeakLie3Structure bad = s;
  QMatrix b = bad["l2"].block({0, 0});
  b(0, 0) = 1;
  bad["l2"].set_block({0, 0}, b);
  Report r = check_structure(bad);
  CHECK(fails_at(r, "ELie3:l21"));
  WeakLie3Structure nj = s;
  QMatrix c = nj["l2"].block({0, 0});
  c(0, 3 * 0 + 1) = 1;  // [e,f] = h + e
  c(0, 3 * 1 + 0) = -1;
  nj["l2"].set_block({0, 0}, c);
  Report r2 = check_structure(nj);
  CHECK_FALSE(fails_at(r2, "ELie3:l21"));
  CHECK(fails_at(r2, "Leib3:l3"));
}

TEST_CASE("strict morphisms of Lie algebras") {
  WeakLie3Structure s = sl2();
  // e -> 2e, f -> f/2, h -> h is an automorphism
  QMatrix a = QMatrix::from_rows({{2, 0, 0}, {0, Rat(1, 2), 0}, {0, 0, 1}});
  WeakMorphism f = WeakMorphism::strict(s, s, MultiMap::linear(s.complex, s.complex, 0, {a, QMatrix(0, 0), QMatrix(0, 0)}));
  CHECK(passes(check_morphism(f)));
  QMatrix bad = QMatrix::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  WeakMorphism g = WeakMorphism::strict(s, s, MultiMap::linear(s.complex, s.complex, 0, {bad, QMatrix(0, 0), QMatrix(0, 0)}));
  CHECK(fails_at(check_morphism(g), "Leib3:f2"));
  WeakMorphism ff = compose_morphisms(f, f);
  CHECK(passes(check_morphism(ff)));
  CHECK(ff["f1"].block({0}) == a * a);
  WeakMorphism id = WeakMorphism::identity(s);
  CHECK(compose_morphisms(id, f).maps == f.maps);
  CHECK(compose_morphisms(f, id).maps == f.maps);
  CHECK_THROWS(compose_morphisms(f, WeakMorphism::identity(WeakLie3Structure::zero(s.complex))));
}

TEST_CASE("the checker is invariant under change of basis") {
  std::mt19937 rng(12);
  WeakLie3Structure s = sl2();
  std::array<QMatrix, 3> g{QMatrix::from_rows({{1, 2, 0}, {0, 1, 0}, {1, 0, 1}}), QMatrix(0, 0), QMatrix(0, 0)};
  WeakLie3Structure t = transport(s, g);
  CHECK(passes(check_structure(t)));
  WeakLie3Structure bad = s;
  QMatrix c = bad["l2"].block({0, 0});
  c(0, 1) += 1;
  c(0, 3) -= 1;
  bad["l2"].set_block({0, 0}, c);
  CHECK_FALSE(passes(check_structure(transport(bad, g))));
}

TEST_CASE("shape validation") {
  WeakLie3Structure s = sl2();
  s.maps.erase("l4");
  CHECK_THROWS_AS(check_structure(s), std::invalid_argument);
  WeakLie3Structure t = sl2();
  t.maps.at("l3") = MultiMap(t.complex, t.complex, 3, 0);
  CHECK_THROWS_AS(check_structure(t), std::invalid_argument);
}
