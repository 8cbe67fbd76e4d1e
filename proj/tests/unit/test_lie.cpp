#include "doctest.h"

#include "lied/cooperad.hpp"
#include "lied/homology.hpp"
#include "lied/lie.hpp"
#include "lied/matrix.hpp"

#include <random>

using namespace lied;

namespace {

AssWord words(std::initializer_list<std::pair<Word, int>> ts) {
  AssWord a;
  for (auto& [w, c] : ts) a.add(w, c);
  return a;
}

// Word matrix of a family of arity-n elements, one column per element.
SparseMatrix word_matrix(const std::vector<AssWord>& els, int n) {
  auto perms = all_perms(n);
  std::map<Word, int> row;
  for (auto& p : perms) row.emplace(p.images(), static_cast<int>(row.size()));
  SparseMatrix m(static_cast<int>(row.size()), static_cast<int>(els.size()));
  for (size_t j = 0; j < els.size(); ++j)
    for (auto& [w, k] : els[j].terms()) m.add(row.at(w), static_cast<int>(j), k);
  return m;
}

AssWord random_bracket(std::mt19937& rng, std::vector<int> letters) {
  if (letters.size() == 1) return AssWord::letter(letters[0]);
  std::shuffle(letters.begin(), letters.end(), rng);
  size_t cut = 1 + rng() % (letters.size() - 1);
  std::vector<int> a(letters.begin(), letters.begin() + cut), b(letters.begin() + cut, letters.end());
  return bracket(random_bracket(rng, a), random_bracket(rng, b));
}

AssWord random_lie(std::mt19937& rng, int n) {
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 1;
  AssWord a = random_bracket(rng, letters);
  a.add(random_bracket(rng, letters), static_cast<int>(rng() % 5) - 2);
  return a;
}

}  // namespace

TEST_CASE("brackets expand to commutators") {
  CHECK(expand_bracket("[1,2]") == words({{{1, 2}, 1}, {{2, 1}, -1}}));
  CHECK(expand_bracket("[[x1,x2],x3]") ==
        words({{{1, 2, 3}, 1}, {{2, 1, 3}, -1}, {{3, 1, 2}, -1}, {{3, 2, 1}, 1}}));
  AssWord jac = expand_bracket("[[1,2],3]") + expand_bracket("[[2,3],1]") + expand_bracket("[[3,1],2]");
  CHECK(jac.is_zero());
  CHECK_THROWS(expand_bracket("[1,1]"));
  CHECK_THROWS(expand_bracket("[1,2"));
}

TEST_CASE("Lie(n) has rank (n-1)! by Smith normal form") {
  CHECK(lie_basis(1).size() == 1);
  CHECK(lie_basis(1)[0] == AssWord::letter(1));
  for (int n = 1; n <= 6; ++n) {
    auto b = lie_basis(n);
    REQUIRE(static_cast<long>(b.size()) == factorial(n - 1).get_si());
    auto f = invariant_factors(word_matrix(b, n));
    CHECK(static_cast<long>(f.size()) == factorial(n - 1).get_si());
    for (auto& x : f) CHECK(x == 1);  // a direct summand of the words
  }
  auto f3 = smith_normal_form(word_matrix(lie_basis(3), 3).dense());
  CHECK(f3.size() == 2);
}

TEST_CASE("coordinates agree with exact linear solving") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n) {
    auto b = lie_basis(n);
    auto words_n = lie_basis_words(n);
    auto M = word_matrix(b, n);
    QMatrix q(M.rows, M.cols);
    for (int j = 0; j < M.cols; ++j)
      for (auto& [i, v] : M.col[j]) q(i, j) = Rat(v);
    for (int t = 0; t < 5; ++t) {
      AssWord x = random_lie(rng, n);
      auto coords = lie_coordinates(x);
      REQUIRE(coords.has_value());
      auto xs = word_matrix({x}, n);
      QMatrix rhs(M.rows, 1);
      for (auto& [i, v] : xs.col[0]) rhs(i, 0) = Rat(v);
      auto sol = solve(q, rhs);
      REQUIRE(sol.has_value());
      for (size_t j = 0; j < words_n.size(); ++j) {
        auto it = coords->find(words_n[j]);
        Rat c = it == coords->end() ? Rat(0) : Rat(it->second);
        CHECK((*sol)(static_cast<int>(j), 0) == c);
      }
    }
  }
  CHECK_FALSE(is_lie(AssWord::word({1, 2})));
  CHECK_FALSE(is_lie(words({{{1, 2, 3}, 1}, {{3, 2, 1}, 1}})));
}

TEST_CASE("symmetric action preserves Lie(n)") {
  for (int n = 2; n <= 5; ++n)
    for (auto& p : all_perms(n))
      for (auto& b : lie_basis(n)) REQUIRE(is_lie(act(b, p)));
  std::mt19937 rng(11);
  auto p6 = all_perms(6);
  auto b6 = lie_basis(6);
  for (int t = 0; t < 40; ++t) CHECK(is_lie(act(b6[rng() % b6.size()], p6[rng() % p6.size()])));
  // right action
  auto x = expand_bracket("[[1,2],3]");
  Perm s = Perm::parse("(12)", 3), u = Perm::parse("(123)", 3);
  CHECK(act(act(x, s), u) == act(x, s * u));
}

TEST_CASE("operadic composition in Lie") {
  auto b = expand_bracket("[1,2]");
  CHECK(lie_compose(AssWord::letter(1), 1, b) == b);
  CHECK(lie_compose(b, 2, AssWord::letter(1)) == b);
  CHECK(lie_compose(b, 1, b) == expand_bracket("[[1,2],3]"));
  CHECK(lie_compose(b, 2, b) == expand_bracket("[1,[2,3]]"));
  CHECK_THROWS(lie_compose(b, 3, b));
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    int na = 2 + rng() % 2, nb = 1 + rng() % 3, nc = 1 + rng() % 2;
    AssWord a = random_lie(rng, na), bb = random_lie(rng, nb), c = random_lie(rng, nc);
    int i = 1 + rng() % na, j = 1 + rng() % nb;
    // sequential
    CHECK(lie_compose(lie_compose(a, i, bb), i + j - 1, c) == lie_compose(a, i, lie_compose(bb, j, c)));
    // parallel
    if (na >= 2) {
      int k = 1 + rng() % na, l = 1 + rng() % na;
      if (k != l) {
        if (k > l) std::swap(k, l);
        CHECK(lie_compose(lie_compose(a, k, bb), l + nb - 1, c) ==
              lie_compose(lie_compose(a, l, c), k, bb));
      }
    }
    CHECK(is_lie(lie_compose(a, i, bb)));
  }
}

TEST_CASE("kappa o psi") {
  build_lied3();
  int mu2 = gen_id("mu2");
  CHECK(kappa_psi(mu2, Perm::identity(2)) == expand_bracket("[1,2]"));
  CHECK(kappa_psi(mu2, Perm::parse("(12)", 2)) == -expand_bracket("[1,2]"));
  CHECK(kappa_psi(gen_id("mu21"), Perm::identity(2)).is_zero());
  CHECK(kappa_psi(gen_id("mu3"), Perm::identity(3)).is_zero());
}
