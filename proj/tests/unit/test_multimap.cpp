#include "doctest.h"

#include "random_maps.hpp"

#include <algorithm>
#include <numeric>

using namespace lied;
using namespace testutil;

namespace {

using Basis = std::vector<std::pair<int, int>>;

// All tensors of basis vectors with the given input degrees.
std::vector<Basis> basis_tuples(const Complex3& L, const std::vector<int>& p) {
  std::vector<Basis> out;
  Basis cur;
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == p.size()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a < L.dim(p[j]); ++a) {
      cur.emplace_back(p[j], a);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> all_degree_tuples(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n, 0);
  while (true) {
    out.push_back(p);
    int j = n - 1;
    while (j >= 0 && p[j] == 2) p[j--] = 0;
    if (j < 0) break;
    ++p[j];
  }
  return out;
}

// Koszul sign of listing v_{s^-1(1)}, ..., v_{s^-1(n)}: pairs put out of order.
int eps(const Perm& s, const std::vector<int>& deg) {
  int n = s.arity(), sign = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (s(i) > s(j) && (deg[i - 1] * deg[j - 1]) % 2) sign = -sign;
  return sign;
}

QMatrix column_sum(const QMatrix& a, const QMatrix& b, const Rat& k) { return a + b.scaled(k); }

template <class F>
void for_all_inputs(const MultiMap& m, F f) {
  for (auto& p : all_degree_tuples(m.arity()))
    for (auto& v : basis_tuples(*m.src(), p)) f(p, v);
}

struct Gens {
  int a = define_generator("tA2", 2, 1);
  int b = define_generator("tB3", 3, 0);
  int c = define_generator("tC2", 2, 2);
  int d = define_generator("tD1", 1, 1);
};

}  // namespace

TEST_CASE("complexes") {
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) CHECK(random_complex(rng, 3)->is_complex());
  QMatrix d1 = QMatrix::from_rows({{1}});
  QMatrix d2 = QMatrix::from_rows({{1}});
  CHECK_THROWS(Complex3::make({1, 1, 1}, d1, d2));
  CHECK_NOTHROW(Complex3::make({1, 1, 0}, d1));
}

TEST_CASE("MultiMap windows and storage") {
  auto L = share(Complex3::make({2, 1, 1}));
  MultiMap m(L, L, 2, 1);
  // input degrees sum to at most 1
  CHECK(m.tuples() == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(m.rows({0, 1}) == 1);
  CHECK(m.cols({0, 0}) == 4);
  CHECK_THROWS(m.set_block({1, 1}, QMatrix(1, 1)));
  CHECK_THROWS(m.set_block({0, 0}, QMatrix(2, 2)));
  m.set_block({0, 0}, QMatrix(1, 4));
  CHECK(m.is_zero());
  auto id = MultiMap::identity(L);
  CHECK(id.apply({{0, 1}})(1, 0) == 1);
}

TEST_CASE("symmetric group action against the defining formula") {
  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    auto L = random_complex(rng);
    int n = 1 + rng() % 3, g = rng() % 3;
    MultiMap mu = random_map(rng, L, L, n, g);
    for (auto& s : all_perms(n)) {
      MultiMap ms = act(mu, s);
      Perm inv = s.inverse();
      for_all_inputs(ms, [&](const std::vector<int>& p, const Basis& v) {
        Basis w(n);
        for (int j = 0; j < n; ++j) w[j] = v[inv(j + 1) - 1];
        QMatrix expect = mu.apply(w).scaled(Rat(eps(s, p)));
        CHECK(ms.apply(v) == expect);
      });
      for (auto& u : all_perms(n)) CHECK(act(ms, u) == act(mu, s * u));
    }
    CHECK(act(mu, Perm::identity(n)) == mu);
  }
}

TEST_CASE("two odd inputs swap with a sign") {
  auto L = share(Complex3::make({1, 1, 1}));
  MultiMap mu(L, L, 2, 0);
  mu.set_block({1, 1}, QMatrix::from_rows({{3}}));
  MultiMap sw = act(mu, Perm::parse("(12)", 2));
  CHECK(sw.block({1, 1})(0, 0) == -3);
}

TEST_CASE("hom differential against the defining formula") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    auto L = random_complex(rng), T = random_complex(rng);
    int n = 1 + rng() % 3, g = rng() % 4 - 1;
    MultiMap mu = random_map(rng, L, T, n, g);
    MultiMap dm = hom_differential(mu);
    for_all_inputs(dm, [&](const std::vector<int>& p, const Basis& v) {
      int out = std::accumulate(p.begin(), p.end(), g);
      QMatrix expect(T->dim(out - 1), 1);
      if (out >= 1 && out <= 2) expect = T->d(out) * mu.apply(v);
      int before = 0;
      for (int i = 0; i < n; ++i) {
        if (p[i] >= 1) {
          const QMatrix& D = L->d(p[i]);
          for (int b = 0; b < D.rows(); ++b) {
            Basis w = v;
            w[i] = {p[i] - 1, b};
            Rat k = D(b, v[i].second) * ((g % 2 != 0) ? 1 : -1) * ((before % 2) ? -1 : 1);
            expect = column_sum(expect, mu.apply(w), k);
          }
        }
        before += p[i];
      }
      CHECK(dm.apply(v) == expect);
    });
    CHECK(hom_differential(dm).is_zero());
  }
}

TEST_CASE("chain maps are cycles") {
  std::mt19937 rng(4);
  auto L = random_complex(rng, {2, 2, 1});
  CHECK(hom_differential(MultiMap::identity(L)).is_zero());
  MultiMap d = MultiMap::linear(L, L, -1, {QMatrix(0, 2), L->d1, L->d2});
  CHECK(hom_differential(d).is_zero());
}

TEST_CASE("partial composition against the defining formula") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto L = random_complex(rng);
    int n = 1 + rng() % 3, k = 1 + rng() % 2, g = rng() % 3, h = rng() % 3;
    MultiMap mu = random_map(rng, L, L, n, g), nu = random_map(rng, L, L, k, h);
    int i = 1 + rng() % n;
    MultiMap c = partial_compose(mu, i, nu);
    CHECK(c.degree() == g + h);
    for_all_inputs(c, [&](const std::vector<int>& p, const Basis& v) {
      int pre = 0;
      for (int j = 0; j < i - 1; ++j) pre += p[j];
      Basis inner(v.begin() + (i - 1), v.begin() + (i - 1 + k));
      QMatrix y = nu.apply(inner);
      int q = h;
      for (auto& x : inner) q += x.first;
      QMatrix expect(L->dim(std::accumulate(p.begin(), p.end(), g + h)), 1);
      for (int b = 0; b < y.rows(); ++b) {
        Basis w(v.begin(), v.begin() + (i - 1));
        w.emplace_back(q, b);
        w.insert(w.end(), v.begin() + (i - 1 + k), v.end());
        expect = column_sum(expect, mu.apply(w), y(b, 0) * (((h * pre) % 2) ? -1 : 1));
      }
      CHECK(c.apply(v) == expect);
    });
    CHECK(partial_compose(mu, i, MultiMap::identity(L)) == mu);
  }
  CHECK_THROWS(partial_compose(MultiMap::identity(random_complex(rng)), 2, MultiMap::identity(random_complex(rng))));
}

TEST_CASE("sign for an odd map behind an odd input") {
  auto L = share(Complex3::make({1, 1, 1}));
  MultiMap mu(L, L, 2, 0), nu(L, L, 1, 1);
  mu.set_block({1, 1}, QMatrix::from_rows({{1}}));
  nu.set_block({0}, QMatrix::from_rows({{1}}));
  CHECK(partial_compose(mu, 2, nu).block({1, 0})(0, 0) == -1);
}

TEST_CASE("operad axioms and the derivation rule in End") {
  std::mt19937 rng(6);
  for (int t = 0; t < 25; ++t) {
    auto L = random_complex(rng);
    int g = rng() % 2, h = rng() % 2, e = rng() % 2;
    MultiMap mu = random_map(rng, L, L, 2, g), nu = random_map(rng, L, L, 2, h), rho = random_map(rng, L, L, 1 + rng() % 2, e);
    int r = rho.arity();
    // sequential
    CHECK(partial_compose(partial_compose(mu, 1, nu), 2, rho) == partial_compose(mu, 1, partial_compose(nu, 2, rho)));
    CHECK(partial_compose(partial_compose(mu, 1, nu), 1, rho) == partial_compose(mu, 1, partial_compose(nu, 1, rho)));
    // parallel: (mu o_1 nu) o_{2+1} rho = (-1)^{|nu||rho|} (mu o_2 rho) o_1 nu
    MultiMap lhs = partial_compose(partial_compose(mu, 1, nu), 3, rho);
    MultiMap rhs = partial_compose(partial_compose(mu, 2, rho), 1, nu);
    CHECK(lhs == rhs.scaled(Rat((h * e) % 2 ? -1 : 1)));
    // d(mu o_i nu) = d mu o_i nu + (-1)^{|mu|} mu o_i d nu
    MultiMap dl = hom_differential(partial_compose(mu, 2, rho));
    MultiMap dr = partial_compose(hom_differential(mu), 2, rho) +
                  partial_compose(mu, 2, hom_differential(rho)).scaled(Rat(g % 2 ? -1 : 1));
    CHECK(dl == dr);
    (void)r;
  }
}

TEST_CASE("evaluation of trees is an operad morphism") {
  Gens G;
  std::mt19937 rng(7);
  for (int t = 0; t < 12; ++t) {
    auto L = random_complex(rng);
    std::map<int, MultiMap> val;
    val.emplace(G.a, random_map(rng, L, L, 2, 1));
    val.emplace(G.b, random_map(rng, L, L, 3, 0));
    val.emplace(G.c, random_map(rng, L, L, 2, 2));
    val.emplace(G.d, random_map(rng, L, L, 1, 1));
    Assignment as = [&](int id) -> const MultiMap* {
      auto it = val.find(id);
      return it == val.end() ? nullptr : &it->second;
    };
    auto ev = [&](const QExpr& x) { return evaluate(x, as, L, L, x.arity(), x.degree()); };
    std::vector<QExpr> pool = {QExpr::gen(G.a), QExpr::gen(G.b), QExpr::gen(G.c), QExpr::gen(G.d)};
    for (int s = 0; s < 12; ++s) {
      const QExpr& x = pool[rng() % pool.size()];
      const QExpr& y = pool[rng() % pool.size()];
      int i = 1 + rng() % x.arity();
      QExpr z = partial(x, i, y);
      std::vector<int> img(z.arity());
      std::iota(img.begin(), img.end(), 1);
      std::shuffle(img.begin(), img.end(), rng);
      Perm p(img);
      QExpr zp = act(z, p);
      if (!zp.is_zero() && zp.degree() <= 2 && zp.arity() <= 5) {
        CHECK(ev(zp) == act(ev(z), p));
        CHECK(ev(z) == partial_compose(ev(x), i, ev(y)));
        pool.push_back(zp);
      }
    }
    QExpr f = parse_expr("tA2 o (tD1, tB3)");
    CHECK(ev(f) == full_compose(val.at(G.a), {val.at(G.d), val.at(G.b)}));
  }
}
