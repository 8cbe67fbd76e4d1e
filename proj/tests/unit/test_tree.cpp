#include "doctest.h"
#include "lied/tree.hpp"

#include <random>

using namespace lied;

namespace {

void register_test_generators() {
  define_generator("ta2", 2, 1);
  define_generator("tb3", 3, 0);
  define_generator("tc2", 2, 1, Symmetry::Sign);
  define_generator("te2", 2, 2);
  define_generator("tf1", 1, 1);
}

IExpr random_expr(std::mt19937& rng, int depth) {
  static const char* names[] = {"ta2", "tb3", "tc2", "te2", "tf1"};
  IExpr e = IExpr::gen(names[rng() % 5]);
  for (int d = 0; d < depth; ++d) {
    int i = 1 + rng() % e.arity();
    e = partial(e, i, IExpr::gen(names[rng() % 5]));
  }
  auto perms = all_perms(e.arity());
  return act(e, perms[rng() % perms.size()]);
}

}  // namespace

TEST_CASE("parser builds composites") {
  register_test_generators();
  auto x = parse_iexpr("ta2 o1 ta2");
  CHECK(x.size() == 1);
  CHECK(x.terms().begin()->first == Code{gen_id("ta2"), gen_id("ta2"), -1, -2, -3});
  auto y = parse_iexpr("ta2 o (ta2, 1)");
  CHECK(x == y);
  auto z = parse_iexpr("ta2 o2 ta2");
  CHECK(z.terms().begin()->second == 1);
  CHECK(parse_iexpr("(ta2 o2 ta2) o1 ta2").terms().begin()->second == -1);
  CHECK(parse_iexpr("tc2^(12)") == parse_iexpr("-tc2"));
  CHECK(parse_iexpr("ta2[(12)] o1 tb3") == partial(act(parse_iexpr("ta2"), Perm::parse("(12)", 2)), 1, parse_iexpr("tb3")));
  CHECK(parse_iexpr("2 ta2 - ta2 - ta2").is_zero());
  CHECK(parse_expr("1/2 ta2 + 1/2 ta2") == to_rational(parse_iexpr("ta2")));
  CHECK(parse_iexpr("alt(tc2)") == parse_iexpr("2 tc2"));
  CHECK(parse_iexpr("ta2^{1+(12)}") == parse_iexpr("ta2 + ta2^(12)"));
  auto u = parse_iexpr("ta2 o (ta2, 1)", true);
  CHECK(code_arity(u.terms().begin()->first) == 3);
  CHECK(vertex_count(u.terms().begin()->first) == 3);
  CHECK_THROWS(parse_iexpr("nosuch o1 ta2"));
  CHECK_THROWS(parse_iexpr("ta2 o5 ta2"));
}

TEST_CASE("right action") {
  register_test_generators();
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    auto e = random_expr(rng, 2);
    auto perms = all_perms(e.arity());
    const auto& s = perms[rng() % perms.size()];
    const auto& u = perms[rng() % perms.size()];
    CHECK(act(act(e, s), u) == act(e, s * u));
  }
}

TEST_CASE("operad axioms for partial composition") {
  register_test_generators();
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    auto a = random_expr(rng, 1), b = random_expr(rng, 1), c = random_expr(rng, 0);
    int na = a.arity(), nb = b.arity(), nc = c.arity();
    int i = 1 + rng() % na, j = 1 + rng() % nb;
    // sequential
    CHECK(partial(partial(a, i, b), i + j - 1, c) == partial(a, i, partial(b, j, c)));
    // parallel
    if (na >= 2) {
      int k = 1 + rng() % na;
      if (k == i) continue;
      int lo = std::min(i, k), hi = std::max(i, k);
      IExpr x = lo == i ? b : c, y = lo == i ? c : b;
      int sign = ((x.degree() * y.degree()) & 1) ? -1 : 1;
      CHECK(partial(partial(a, lo, x), hi + x.arity() - 1, y) ==
            partial(partial(a, hi, y), lo, x).scaled(sign));
    }
    (void)nc;
  }
}

TEST_CASE("equivariance of partial composition") {
  register_test_generators();
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    auto a = random_expr(rng, 1), b = random_expr(rng, 0);
    auto perms = all_perms(a.arity());
    const auto& s = perms[rng() % perms.size()];
    int i = 1 + rng() % a.arity();
    // (a^s) o_i b is a relabelling of a o_{s(i)} b
    auto lhs = partial(act(a, s), i, b);
    auto rhs = partial(a, s(i), b);
    CHECK(lhs.size() == rhs.size());
    bool found = false;
    for (auto& p : all_perms(lhs.arity()))
      if (act(rhs, p) == lhs) found = true;
    CHECK(found);
  }
}

TEST_CASE("morphisms and derivations respect composition") {
  register_test_generators();
  IExpr fa = parse_iexpr("ta2 o1 tf1 - tf1 o1 ta2");
  IExpr fb = parse_iexpr("tb3 + tb3^(12)");
  auto phi = [&](int id) -> const IExpr* { return id == gen_id("tb3") ? &fb : nullptr; };
  auto der = [&](int id) -> const IExpr* { return id == gen_id("ta2") ? &fa : nullptr; };
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto a = random_expr(rng, 1), b = random_expr(rng, 1);
    int i = 1 + rng() % a.arity();
    auto ab = partial(a, i, b);
    CHECK(map_generators<Int>(ab, phi) == partial(map_generators<Int>(a, phi), i, map_generators<Int>(b, phi)));
    int sgn = (a.degree() & 1) ? -1 : 1;
    CHECK(apply_derivation<Int>(ab, der, 1) ==
          partial(apply_derivation<Int>(a, der, 1), i, b) + partial(a, i, apply_derivation<Int>(b, der, 1)).scaled(sgn));
  }
}
