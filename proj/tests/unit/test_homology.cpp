#include "doctest.h"

#include "lied/cooperad.hpp"
#include "lied/homology.hpp"
#include "lied/koszul.hpp"

#include <numeric>
#include <random>

using namespace lied;

namespace {

Int det(std::vector<std::vector<Int>> a) {
  // Laplace expansion; only used on tiny minors
  size_t n = a.size();
  if (n == 1) return a[0][0];
  Int s = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> m;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Int> r;
      for (size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(a[i][k]);
      m.push_back(r);
    }
    Int t = a[0][j] * det(m);
    s += (j % 2) ? -t : t;
  }
  return s;
}

void subsets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
std::vector<Int> factors_by_minors(const IntMatrix& m) {
  std::vector<Int> dk{Int(1)};
  for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(m.rows, k, 0, cur, rs);
    subsets(m.cols, k, 0, cur, cs);
    Int g = 0;
    for (auto& r : rs)
      for (auto& c : cs) {
        std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) a[i][j] = m(r[i], c[j]);
        Int d = det(a);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<Int> out;
  for (size_t k = 1; k < dk.size(); ++k) out.push_back(dk[k] / dk[k - 1]);
  return out;
}

IntegerComplex two_term(int b) {
  IntegerComplex c;
  c.dims = {{0, 1}, {1, 1}};
  SparseMatrix d(1, 1);
  d.add(0, 0, b);
  c.boundary[1] = d;
  return c;
}

}  // namespace

TEST_CASE("Smith normal form") {
  auto id = smith_normal_form(IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id == std::vector<Int>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
  CHECK(smith_normal_form(IntMatrix(3, 2)).empty());
  CHECK(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})) == std::vector<Int>{2, 4});
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    int r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m(r, c);
    for (auto& x : m.a) x = static_cast<int>(rng() % 9) - 4;
    auto f = smith_normal_form(m);
    CHECK(f == factors_by_minors(m));
    CHECK(invariant_factors(SparseMatrix::from_dense(m)) == f);
  }
}

TEST_CASE("sparse elimination agrees with the dense algorithm") {
  std::mt19937 rng(9);
  for (int t = 0; t < 60; ++t) {
    int r = 3 + rng() % 12, c = 3 + rng() % 12;
    IntMatrix m(r, c);
    for (auto& x : m.a)
      if (rng() % 3 == 0) x = static_cast<int>(rng() % 7) - 3;
    auto s = SparseMatrix::from_dense(m);
    CHECK(invariant_factors(s) == smith_normal_form(m));
    CHECK(static_cast<int>(invariant_factors(s).size()) == rational_rank(s));
  }
}

TEST_CASE("homology of small complexes") {
  auto h = homology(two_term(1), 0);
  CHECK(h.is_zero());
  CHECK(homology(two_term(1), 1).is_zero());
  auto h2 = homology(two_term(2), 0);
  CHECK(h2.free_rank == 0);
  CHECK(h2.torsion == std::vector<Int>{2});
  CHECK(h2.str() == "Z/2");
  CHECK(homology(two_term(0), 0).free_rank == 1);
  CHECK(rational_betti(two_term(2), 0) == 0);
  IntegerComplex bad = two_term(1);
  bad.dims[0] = 2;
  CHECK_THROWS(homology(bad, 0));
}

TEST_CASE("homology of LieD[3](n) is Lie^i(n) in degrees <= 3") {
  Cooperad c = build_lied3();
  for (int n = 2; n <= 4; ++n) {
    auto ac = cooperad_arity_complex(c, n);
    CHECK(ac.complex.is_complex());
    auto hs = homology_range(ac.complex, 0, 3);
    for (int r = 0; r <= 3; ++r) {
      if (r == n - 1) {
        CHECK(hs[r].free_rank == 1);
        CHECK(hs[r].torsion.empty());
      } else {
        CHECK(hs[r].is_zero());
      }
      CHECK(rational_betti(ac.complex, r) == hs[r].free_rank);
    }
  }
  CHECK(all_ok(check_psi_homology(c, 6)));
}

TEST_CASE("twisted composite product") {
  Cooperad c = build_lied3();
  auto tc = build_twisted_complex(c, 2, 2);
  const int mu2 = gen_id("mu2"), unit = unit_generator();
  REQUIRE(tc.basis[0].size() == 1);
  CHECK(tc.basis[0][0].generator == unit);
  CHECK(tc.basis[1].size() == 2);
  // d(mu2 o (x1, x2)) = [x1,x2],  d(mu2 o (x2, x1)) = -[x1,x2]
  const auto& d1 = tc.complex.boundary.at(1);
  for (size_t j = 0; j < tc.basis[1].size(); ++j) {
    const auto& x = tc.basis[1][j];
    REQUIRE(x.generator == mu2);
    int expect = x.blocks[0] == Word{1} ? 1 : -1;
    CHECK(d1.col[j].at(0) == expect);
  }
  // ranks: generators times n! sum 1/k_i over ordered compositions
  auto t3 = build_twisted_complex(c, 3, 4);
  CHECK(t3.complex.dim(0) == 2);
  CHECK(t3.complex.dim(1) == 6);  // mu2 o (Lie(1), Lie(2)) and mu2 o (Lie(2), Lie(1)), 3 labellings each
  for (int n = 2; n <= 4; ++n) {
    auto t = build_twisted_complex(c, n, 4);
    CHECK(t.complex.is_complex());
    auto hs = homology_range(t.complex, 0, 3);
    for (int r = 0; r <= 3; ++r) CHECK_MESSAGE(hs[r].is_zero(), "n=", n, " r=", r, " H=", hs[r].str());
  }
}

TEST_CASE("without the twist homology survives") {
  Cooperad c = build_lied3();
  auto rep = verify_acyclicity(c, 3, 3, false);
  bool d2 = true, some_nonzero = false;
  for (auto& ch : rep) {
    if (ch.label == "d^2=0") d2 = d2 && ch.ok;
    if (ch.label == "H_r=0" && !ch.ok) some_nonzero = true;
  }
  CHECK(d2);
  CHECK(some_nonzero);
  auto t = build_twisted_complex(c, 3, 1, false);
  CHECK(homology(t.complex, 0).free_rank == 2);  // Lie(3) untouched
}
