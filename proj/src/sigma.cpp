#include "lied/sigma.hpp"

#include "lied/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lied {

std::vector<int> SigmaModule::generators_of(int arity) const {
  std::vector<int> out;
  for (int g : generators)
    if (gen(g).arity == arity) out.push_back(g);
  return out;
}

int SigmaModule::max_arity() const {
  int m = has_unit ? 1 : 0;
  for (int g : generators) m = std::max(m, gen(g).arity);
  return m;
}

SigmaModule identity_module() {
  SigmaModule m;
  m.name = "I";
  m.generators = {unit_generator()};
  m.has_unit = false;
  return m;
}

IExpr apply_differential(const SigmaModule& m, const IExpr& x) {
  return apply_derivation<Int>(
      x,
      [&](int id) -> const IExpr* {
        auto it = m.differential.find(id);
        return it == m.differential.end() ? nullptr : &it->second;
      },
      -1);
}

namespace {

std::vector<int> slot_choices(const SigmaModule& m) {
  std::vector<int> out = m.generators;
  if (m.has_unit && std::find(out.begin(), out.end(), unit_generator()) == out.end())
    out.push_back(unit_generator());
  return out;
}

// Raw two-level planar trees with planar leaf positions 1..n (labels assigned later).
void enumerate_shapes(const std::vector<int>& tops, const std::vector<int>& slots, int n, int degree,
                      bool infinitesimal, const SigmaModule& N,
                      const std::function<void(int, const std::vector<int>&)>& emit) {
  const int unit = unit_generator();
  std::set<int> nslots;
  for (int g : N.generators)
    if (g != unit) nslots.insert(g);
  // for the identity module the unit itself is the linear slot
  bool only_unit = nslots.empty();
  for (int t : tops) {
    int m = gen(t).arity;
    if (m > n) continue;
    std::vector<int> kids;
    std::function<void(int, int, int, int)> rec = [&](int slot, int ar, int deg, int from_n) {
      if (slot == m) {
        if (ar != n || deg != degree) return;
        if (infinitesimal && from_n != (only_unit ? 0 : 1)) return;
        emit(t, kids);
        return;
      }
      for (int s : slots) {
        int a = gen(s).arity;
        if (ar + a + (m - slot - 1) > n) continue;
        kids.push_back(s);
        int counted = nslots.count(s) ? 1 : 0;
        rec(slot + 1, ar + a, deg + gen(s).degree, from_n + counted);
        kids.pop_back();
      }
    };
    rec(0, 0, gen(t).degree, 0);
  }
}

Code build_tree(int top, const std::vector<int>& kids, const Perm& labels) {
  Code c{top};
  int pos = 1;
  for (int k : kids) {
    c.push_back(k);
    for (int j = 0; j < gen(k).arity; ++j) c.push_back(-labels(pos++));
  }
  return c;
}

std::vector<int> top_choices(const SigmaModule& M) {
  std::vector<int> out = M.generators;
  if (M.has_unit && std::find(out.begin(), out.end(), unit_generator()) == out.end())
    out.push_back(unit_generator());
  return out;
}

std::vector<Code> basis_impl(const SigmaModule& M, const SigmaModule& N, int n, int degree, bool inf) {
  std::set<Code> seen;
  std::vector<int> slots = inf ? N.generators : slot_choices(N);
  if (inf) {
    auto u = unit_generator();
    if (std::find(slots.begin(), slots.end(), u) == slots.end()) slots.push_back(u);
  }
  auto perms = all_perms(n);
  enumerate_shapes(top_choices(M), slots, n, degree, inf, N, [&](int top, const std::vector<int>& kids) {
    for (const auto& p : perms) {
      Code c = build_tree(top, kids, p);
      if (canonicalize(c) != 0) seen.insert(c);
    }
  });
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Code> composite_basis(const SigmaModule& M, const SigmaModule& N, int n, int degree) {
  return basis_impl(M, N, n, degree, false);
}

std::vector<Code> infinitesimal_basis(const SigmaModule& M, const SigmaModule& N, int n, int degree) {
  return basis_impl(M, N, n, degree, true);
}

int composite_rank_by_relations(const SigmaModule& M, const SigmaModule& N, int n, int degree,
                                bool infinitesimal) {
  std::vector<int> slots = infinitesimal ? N.generators : slot_choices(N);
  if (infinitesimal) {
    auto u = unit_generator();
    if (std::find(slots.begin(), slots.end(), u) == slots.end()) slots.push_back(u);
  }
  std::map<Code, int> index;
  std::vector<Code> raw;
  auto perms = all_perms(n);
  enumerate_shapes(top_choices(M), slots, n, degree, infinitesimal, N,
                   [&](int top, const std::vector<int>& kids) {
                     for (const auto& p : perms) {
                       Code c = build_tree(top, kids, p);
                       if (index.emplace(c, static_cast<int>(raw.size())).second) raw.push_back(c);
                     }
                   });
  // Relations: swapping adjacent children of a symmetric vertex.
  std::vector<std::vector<std::pair<int, int>>> rels;
  for (const auto& c : raw) {
    for (size_t v = 0; v < c.size(); ++v) {
      if (c[v] < 0) continue;
      const auto& g = gen(c[v]);
      if (g.sym == Symmetry::Free) continue;
      std::vector<std::pair<size_t, size_t>> ch;
      size_t p = v + 1;
      for (int j = 0; j < g.arity; ++j) {
        size_t e = subtree_end(c, p);
        ch.emplace_back(p, e);
        p = e;
      }
      for (int j = 0; j + 1 < g.arity; ++j) {
        Code a(c.begin() + ch[j].first, c.begin() + ch[j].second);
        Code b(c.begin() + ch[j + 1].first, c.begin() + ch[j + 1].second);
        Code sw(c.begin(), c.begin() + ch[j].first);
        sw.insert(sw.end(), b.begin(), b.end());
        sw.insert(sw.end(), a.begin(), a.end());
        sw.insert(sw.end(), c.begin() + ch[j + 1].second, c.end());
        int s = ((code_degree(a) * code_degree(b)) & 1) ? -1 : 1;
        if (g.sym == Symmetry::Sign) s = -s;
        auto it = index.find(sw);
        if (it == index.end()) throw std::logic_error("relation leaves the raw tree set");
        rels.push_back({{index[c], 1}, {it->second, -s}});
      }
    }
  }
  if (rels.empty()) return static_cast<int>(raw.size());
  QMatrix m(static_cast<int>(rels.size()), static_cast<int>(raw.size()));
  for (size_t r = 0; r < rels.size(); ++r)
    for (auto [col, val] : rels[r]) m(static_cast<int>(r), col) += val;
  return static_cast<int>(raw.size()) - rank(m);
}

VertexMap VertexMap::identity() {
  return {0, [](int id) { return IExpr::gen(id); }};
}

IExpr map_composite(const IExpr& x, const VertexMap& f, const VertexMap& g, CompositeMode mode) {
  IExpr out;
  const int unit = unit_generator();
  for (auto& [c, k] : x.terms()) {
    std::vector<size_t> level2;
    if (c.empty() || c[0] < 0) throw std::invalid_argument("map_composite: expected a rooted tree");
    size_t p = 1;
    for (int j = 0; j < gen(c[0]).arity; ++j) {
      if (c[p] >= 0) level2.push_back(p);
      p = subtree_end(c, p);
    }
    // vertex indices in preorder
    std::map<size_t, int> vindex;
    int nv = 0;
    for (size_t t = 0; t < c.size(); ++t)
      if (c[t] >= 0) vindex[t] = nv++;
    auto run = [&](const std::vector<std::pair<size_t, const VertexMap*>>& plan) {
      std::vector<IExpr> store;
      store.reserve(plan.size());
      std::vector<const IExpr*> imgs(nv, nullptr);
      std::vector<int> degs(nv, 0);
      for (auto& [pos, m] : plan) {
        store.push_back(m->image(c[pos]));
        imgs[vindex[pos]] = &store.back();
        degs[vindex[pos]] = m->degree;
      }
      out.add(replace_vertices(c, k, imgs, degs));
    };
    if (mode == CompositeMode::Full) {
      std::vector<std::pair<size_t, const VertexMap*>> plan{{0, &f}};
      for (size_t q : level2) plan.emplace_back(q, &g);
      run(plan);
    } else if (mode == CompositeMode::Linear) {
      std::vector<size_t> nonunit;
      for (size_t q : level2)
        if (c[q] != unit) nonunit.push_back(q);
      if (nonunit.size() != 1) throw std::invalid_argument("map_composite: term is not linear");
      run({{0, &f}, {nonunit[0], &g}});
    } else {
      for (size_t q : level2) run({{0, &f}, {q, &g}});
    }
  }
  return out;
}

IExpr strip_units(const IExpr& x) {
  const int unit = unit_generator();
  IExpr out;
  for (auto& [c, k] : x.terms()) {
    Code s;
    for (int v : c)
      if (v != unit) s.push_back(v);
    out.add(s, k);
  }
  return out;
}

IExpr pad_units(const IExpr& x) {
  const int unit = unit_generator();
  IExpr out;
  for (auto& [c, k] : x.terms()) {
    if (c.empty() || c[0] < 0) throw std::invalid_argument("pad_units: expected a rooted tree");
    Code s{c[0]};
    size_t p = 1;
    for (int j = 0; j < gen(c[0]).arity; ++j) {
      size_t e = subtree_end(c, p);
      if (c[p] < 0) s.push_back(unit);
      s.insert(s.end(), c.begin() + p, c.begin() + e);
      p = e;
    }
    out.add(s, k);
  }
  return out;
}

}  // namespace lied
