#include "lied/instances.hpp"

#include <stdexcept>

namespace lied {

namespace {

struct LieAlgebra {
  int n;
  std::vector<std::vector<std::vector<Rat>>> c;  // c[x][y] = [x, y]
};

LieAlgebra lie_algebra(int which) {
  static const int dims[] = {1, 2, 2, 3, 3};
  if (which < 0 || which > 4) throw std::invalid_argument("unknown Lie algebra");
  LieAlgebra g{dims[which], {}};
  g.c.assign(g.n, std::vector<std::vector<Rat>>(g.n, std::vector<Rat>(g.n)));
  auto set = [&](int x, int y, int z, int k) {
    g.c[x][y][z] += k;
    g.c[y][x][z] -= k;
  };
  if (which == 2) set(0, 1, 1, 1);
  if (which == 3) {  // e, f, h
    set(2, 0, 0, 2);
    set(2, 1, 1, -2);
    set(0, 1, 2, 1);
  }
  if (which == 4) set(0, 1, 2, 1);
  return g;
}

// Graded commutative algebra in degrees 0..2; element 0 is the unit.
struct DGCA {
  std::vector<int> deg;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> mul;  // non-unit products
  std::vector<std::vector<std::pair<int, Rat>>> d;

  std::vector<std::pair<int, Rat>> product(int a, int b) const {
    if (a == 0) return {{b, Rat(1)}};
    if (b == 0) return {{a, Rat(1)}};
    auto it = mul.find({a, b});
    return it == mul.end() ? std::vector<std::pair<int, Rat>>{} : it->second;
  }
  int dim(int k) const {
    int n = 0;
    for (int x : deg) n += x == k;
    return n;
  }
  int pos(int a) const {
    int n = 0;
    for (int j = 0; j < a; ++j) n += deg[j] == deg[a];
    return n;
  }
};

DGCA dgca(int which, int c1, int c2) {
  DGCA A;
  switch (which) {
    case 0: A.deg = {0}; break;
    case 1: A.deg = {0, 1}; break;
    case 2: A.deg = {0, 1}; break;
    case 3: A.deg = {0, 1, 2}; break;
    case 4: A.deg = {0, 1, 2}; break;
    case 5: A.deg = {0, 1, 1, 2}; break;
    default: throw std::invalid_argument("unknown dg algebra");
  }
  A.d.assign(A.deg.size(), {});
  if (which == 2) A.d[1] = {{0, Rat(1)}};
  if (which == 3) A.d[2] = {{1, Rat(1)}};
  if (which == 5) {
    A.mul[{1, 2}] = {{3, Rat(1)}};
    A.mul[{2, 1}] = {{3, Rat(-1)}};
    A.d[1] = {{0, Rat(c1)}};
    A.d[2] = {{0, Rat(c2)}};
    A.d[3] = {{2, Rat(c1)}, {1, Rat(-c2)}};
  }
  return A;
}

}  // namespace

QMatrix random_matrix(Rng& rng, int rows, int cols, int range) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rat(static_cast<int>(rng() % (2 * range + 1)) - range);
  return m;
}

MultiMap random_map(Rng& rng, const ComplexPtr& src, const ComplexPtr& tgt, int arity, int degree, int range) {
  MultiMap m(src, tgt, arity, degree);
  for (auto& p : m.tuples()) m.set_block(p, random_matrix(rng, m.rows(p), m.cols(p), range));
  return m;
}

QMatrix random_invertible(Rng& rng, int n) {
  while (true) {
    QMatrix m = random_matrix(rng, n, n, 1);
    if (rank(m) == n) return m;
  }
}

std::string StrictLieSpec::describe() const {
  static const char* lies[] = {"abelian line", "abelian plane", "affine plane", "sl2", "Heisenberg"};
  static const char* algs[] = {"Q", "Q[e] de=0", "Q[e] de=1", "<1,e,t> dt=e", "<1,e,t> d=0", "Q[e1,e2]"};
  std::string s = std::string(lies[lie]) + " (x) " + algs[algebra];
  if (algebra == 5) s += " de=(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
  if (pairs10 || pairs21) s += " + contractible(" + std::to_string(pairs10) + "," + std::to_string(pairs21) + ")";
  return s;
}

WeakLie3Structure strict_lie(const StrictLieSpec& spec) {
  LieAlgebra g = lie_algebra(spec.lie);
  DGCA A = dgca(spec.algebra, spec.c1, spec.c2);
  std::array<int, 3> core, dims;
  for (int k = 0; k < 3; ++k) core[k] = g.n * A.dim(k);
  dims = {core[0] + spec.pairs10, core[1] + spec.pairs10 + spec.pairs21, core[2] + spec.pairs21};
  auto index = [&](int x, int a) { return x * A.dim(A.deg[a]) + A.pos(a); };
  QMatrix d1(dims[0], dims[1]), d2(dims[1], dims[2]);
  for (int a = 0; a < static_cast<int>(A.deg.size()); ++a) {
    if (A.deg[a] == 0) continue;
    QMatrix& d = A.deg[a] == 1 ? d1 : d2;
    for (int x = 0; x < g.n; ++x)
      for (auto& [b, k] : A.d[a]) d(index(x, b), index(x, a)) += k;
  }
  for (int j = 0; j < spec.pairs10; ++j) d1(core[0] + j, core[1] + j) = 1;
  for (int j = 0; j < spec.pairs21; ++j) d2(core[1] + spec.pairs10 + j, core[2] + j) = 1;
  auto L = share(Complex3::make(dims, d1, d2));
  WeakLie3Structure s = WeakLie3Structure::zero(L);
  MultiMap& l2 = s["l2"];
  for (auto& p : l2.tuples()) {
    QMatrix b(l2.rows(p), l2.cols(p));
    for (int a = 0; a < static_cast<int>(A.deg.size()); ++a)
      for (int c = 0; c < static_cast<int>(A.deg.size()); ++c) {
        if (A.deg[a] != p[0] || A.deg[c] != p[1]) continue;
        for (auto& [e, k] : A.product(a, c))
          for (int x = 0; x < g.n; ++x)
            for (int y = 0; y < g.n; ++y)
              for (int z = 0; z < g.n; ++z)
                if (g.c[x][y][z] != 0) b(index(z, e), index(x, a) * dims[p[1]] + index(y, c)) += g.c[x][y][z] * k;
      }
    l2.set_block(p, b);
  }
  return s;
}

StrictLieSpec random_strict_spec(Rng& rng, int max_dim) {
  while (true) {
    StrictLieSpec s;
    s.lie = static_cast<int>(rng() % 5);
    s.algebra = static_cast<int>(rng() % 6);
    s.c1 = static_cast<int>(rng() % 3) - 1;
    s.c2 = static_cast<int>(rng() % 3) - 1;
    LieAlgebra g = lie_algebra(s.lie);
    DGCA A = dgca(s.algebra, s.c1, s.c2);
    std::array<int, 3> core;
    for (int k = 0; k < 3; ++k) core[k] = g.n * A.dim(k);
    if (core[0] > max_dim || core[1] > max_dim || core[2] > max_dim) continue;
    int room10 = std::min(max_dim - core[0], max_dim - core[1]);
    s.pairs10 = static_cast<int>(rng() % (room10 + 1));
    int room21 = std::min(max_dim - core[1] - s.pairs10, max_dim - core[2]);
    s.pairs21 = static_cast<int>(rng() % (room21 + 1));
    return s;
  }
}

WeakLie3Structure transport_structure(const WeakLie3Structure& s, const std::array<QMatrix, 3>& g) {
  const Complex3& c = *s.complex;
  std::array<QMatrix, 3> gi;
  for (int k = 0; k < 3; ++k) {
    if (g[k].rows() != c.dim(k) || g[k].cols() != c.dim(k)) throw std::invalid_argument("transport: wrong size");
    auto inv = inverse(g[k]);
    if (!inv) throw std::invalid_argument("transport: matrix is not invertible");
    gi[k] = *inv;
  }
  auto L = share(Complex3::make(c.dims, g[0] * c.d1 * gi[1], g[1] * c.d2 * gi[2]));
  MultiMap G = MultiMap::linear(s.complex, L, 0, g), Gi = MultiMap::linear(L, s.complex, 0, gi);
  WeakLie3Structure t;
  t.complex = L;
  for (auto& [name, m] : s.maps)
    t.maps.emplace(name, full_compose(G, {full_compose(m, std::vector<MultiMap>(m.arity(), Gi))}));
  return t;
}

WeakMorphism pull_back(const WeakLie3Structure& target, const MultiMap& f2, const MultiMap& f21, const MultiMap& f3) {
  WeakMorphism f = WeakMorphism::identity(target);
  f.source = WeakLie3Structure::zero(target.complex);
  f["f2"] = f2;
  f["f21"] = f21;
  f["f3"] = f3;
  f.validate();
  // With f1 = id every equation reads  l_x = (its residual at l_x = 0); solve in table order.
  for (auto& eq : morphism_equations()) {
    if (eq.generator == "1") continue;
    std::string name = "l" + eq.generator.substr(2);
    f.source[name] = residual(eq, morphism_assignment(f), f.source.complex, f.target.complex);
  }
  return f;
}

WeakMorphism random_pull_back(Rng& rng, const WeakLie3Structure& target) {
  const ComplexPtr& c = target.complex;
  return pull_back(target, random_map(rng, c, c, 2, 1), random_map(rng, c, c, 2, 2), random_map(rng, c, c, 3, 2));
}

WeakLie3Structure random_weak_structure(Rng& rng, int max_dim, std::string* description) {
  StrictLieSpec spec = random_strict_spec(rng, max_dim);
  WeakLie3Structure s = strict_lie(spec);
  std::array<QMatrix, 3> g;
  for (int k = 0; k < 3; ++k) g[k] = random_invertible(rng, s.complex->dim(k));
  s = transport_structure(s, g);
  if (description) *description = spec.describe();
  return random_pull_back(rng, s).source;
}

HttInstance random_htt_instance(Rng& rng, bool side_conditions, int max_dim) {
  HttInstance out;
  out.structure = random_weak_structure(rng, max_dim, &out.description);
  const ComplexPtr& L = out.structure.complex;
  std::array<int, 2> pairs{rank(L->d1), rank(L->d2)};
  std::array<int, 2> keep{static_cast<int>(rng() % (pairs[0] + 1)), static_cast<int>(rng() % (pairs[1] + 1))};
  if (rng() % 2) keep = {0, 0};
  out.retract = standard_retract(L, keep);
  if (!side_conditions) out.retract = perturb_homotopy(out.retract, random_map(rng, L, L, 1, 2));
  out.side_conditions = out.retract.side_conditions();
  out.description += " keep(" + std::to_string(keep[0]) + "," + std::to_string(keep[1]) + ")";
  return out;
}

}  // namespace lied
