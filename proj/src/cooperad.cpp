#include "lied/cooperad.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lied {

namespace {

const IExpr kZero;

std::string mu_display(int n, const std::vector<int>& idx) {
  std::string s = "mu" + std::to_string(n);
  for (size_t k = 0; k < idx.size(); ++k) s += (k == 0 ? ";" : ",") + std::to_string(idx[k]);
  return s;
}

int define_mu(int n, const std::vector<int>& idx) {
  return define_generator(mu_name(n, idx), n, n - 1 + static_cast<int>(idx.size()), Symmetry::Free,
                          mu_display(n, idx));
}

// Compositions of n into j positive parts.
void compositions(int n, int j, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (j == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int a = 1; a <= n - (j - 1); ++a) {
    cur.push_back(a);
    compositions(n - a, j - 1, cur, out);
    cur.pop_back();
  }
}

std::string first_term(const IExpr& e) {
  if (e.is_zero()) return "";
  auto& [c, k] = *e.terms().begin();
  return to_string(k) + " " + composite_str(c);
}

}  // namespace

std::string mu_name(int n, const std::vector<int>& idx) {
  std::string s = "mu" + std::to_string(n);
  for (int i : idx) s += std::to_string(i);
  return s;
}

IExpr leib_reduced_decomposition(const std::string& prefix, int n) {
  IExpr out;
  const int unit = unit_generator();
  auto gid = [&](int k) { return k == 1 ? unit : gen_id(prefix + std::to_string(k)); };
  for (int j = 2; j < n; ++j) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(n, j, cur, comps);
    for (const auto& blocks : comps) {
      int e = (j - 1) * (n - j);
      for (int p = 1; p <= j; ++p) e += (p - 1) * (blocks[p - 1] - 1);
      Code base{gid(j)};
      int leaf = 1;
      for (int b : blocks) {
        base.push_back(gid(b));
        for (int t = 0; t < b; ++t) base.push_back(-(leaf++));
      }
      IExpr tree = IExpr::mono(base);
      for (const auto& s : reduced_unshuffles(blocks)) {
        int sign = ((e & 1) ? -1 : 1) * s.sign();
        out.add(act(tree, s), Int(sign));
      }
    }
  }
  return out;
}

void Cooperad::finalize() {
  full_.clear();
  const int unit = unit_generator();
  full_[unit] = IExpr::mono(Code{unit, unit, -1});
  for (int g : generators) {
    int k = gen(g).arity;
    Code top{unit, g};
    Code bottom{g};
    for (int j = 1; j <= k; ++j) {
      top.push_back(-j);
      bottom.push_back(unit);
      bottom.push_back(-j);
    }
    IExpr f = IExpr::mono(top) + IExpr::mono(bottom);
    if (auto it = reduced.find(g); it != reduced.end()) f.add(it->second);
    full_[g] = std::move(f);
  }
}

const IExpr& Cooperad::full_image(int id) const {
  auto it = full_.find(id);
  if (it == full_.end()) throw std::invalid_argument("generator " + gen(id).display + " not in " + name);
  return it->second;
}

namespace {

IExpr substitute_single(const IExpr& x, const std::function<const IExpr*(int)>& image) {
  IExpr out;
  for (auto& [c, k] : x.terms()) {
    if (c.empty() || c[0] < 0 || vertex_count(c) != 1)
      throw std::invalid_argument("expected a combination of generators");
    const IExpr* img = image(c[0]);
    if (!img) continue;
    out.add(replace_vertices(c, k, {img}, {0}));
  }
  return out;
}

}  // namespace

IExpr Cooperad::rdecomp(const IExpr& x) const {
  return substitute_single(x, [&](int id) -> const IExpr* {
    auto it = reduced.find(id);
    return it == reduced.end() ? nullptr : &it->second;
  });
}

IExpr Cooperad::decomp(const IExpr& x) const {
  return substitute_single(x, [&](int id) { return &full_image(id); });
}

IExpr Cooperad::partial_decomp(const IExpr& x) const {
  IExpr r = rdecomp(x);
  const int unit = unit_generator();
  IExpr lin;
  for (auto& [c, k] : r.terms()) {
    int nonunit = 0;
    for (int v : c)
      if (v >= 0 && v != unit) ++nonunit;
    if (nonunit == 2) lin.add_canonical(c, k);
  }
  return strip_units(lin);
}

Cooperad build_leibk(int max_arity) {
  Cooperad c;
  c.name = "Leib^i";
  for (int k = 2; k <= max_arity; ++k)
    c.generators.push_back(define_generator("nu" + std::to_string(k), k, k - 1, Symmetry::Free));
  for (int k = 3; k <= max_arity; ++k) c.reduced[gen_id("nu" + std::to_string(k))] = leib_reduced_decomposition("nu", k);
  c.finalize();
  return c;
}

Cooperad build_liek(int max_arity) {
  Cooperad leib = build_leibk(max_arity);
  Cooperad c;
  c.name = "Lie^i";
  std::map<int, IExpr> to_ell;
  for (int k = 2; k <= max_arity; ++k) {
    int e = define_generator("ell" + std::to_string(k), k, k - 1, Symmetry::Sign);
    c.generators.push_back(e);
    to_ell[gen_id("nu" + std::to_string(k))] = IExpr::gen(e);
  }
  auto psi = [&](int id) -> const IExpr* {
    auto it = to_ell.find(id);
    return it == to_ell.end() ? nullptr : &it->second;
  };
  for (auto& [g, r] : leib.reduced) c.reduced[to_ell[g].terms().begin()->first[0]] = map_generators<Int>(r, psi);
  c.finalize();
  return c;
}

Cooperad build_lied3() {
  Cooperad c;
  c.name = "LieD[3]";
  // generators
  const std::vector<std::pair<int, std::vector<int>>> gens = {
      {2, {}},     {2, {1}},    {2, {1, 1}}, {2, {1, 1, 1}}, {3, {}},     {3, {1}},    {3, {2}},    {3, {1, 1}},
      {3, {1, 2}}, {3, {2, 2}}, {4, {}},     {4, {1}},       {4, {2}},    {4, {3}},    {5, {}}};
  for (auto& [n, idx] : gens) c.generators.push_back(define_mu(n, idx));

  auto dset = [&](const std::string& g, const std::string& text) { c.differential[gen_id(g)] = parse_iexpr(text); };
  dset("mu21", "-mu2 - mu2^(12)");
  dset("mu211", "-mu21 + mu21^(12)");
  dset("mu2111", "-mu211 - mu211^(12)");
  dset("mu31", "-mu3 - mu3^(12)");
  dset("mu32", "-mu3 - mu3^(23)");
  dset("mu311", "-mu31 + mu31^(12)");
  dset("mu312", "mu31 + mu31^(23) + mu31^(132) - mu32 - mu32^(12) - mu32^(123)");
  dset("mu322", "-mu32 + mu32^(23)");
  dset("mu41", "-mu4 - mu4^(12)");
  dset("mu42", "-mu4 - mu4^(23)");
  dset("mu43", "-mu4 - mu4^(34)");

  auto rset = [&](const std::string& g, const std::string& text) { c.reduced[gen_id(g)] = parse_iexpr(text, true); };
  rset("mu3", "- mu2 o (mu2, 1) + mu2 o (1, mu2) - mu2 o (1, mu2)^(12)");
  rset("mu31", "mu2 o (mu21, 1)");
  rset("mu32", "- mu21 o (mu2, 1) - mu2 o (1, mu21) - mu21 o (1, mu2)^(12)");
  rset("mu311", "- mu2 o (mu211, 1)");
  rset("mu312",
       "- mu21 o (mu21, 1) - mu21 o (1, mu21) - mu21 o (1, mu21)^(12)"
       " + mu211 o (1, mu2)^(132)");
  rset("mu322", "- mu211 o (mu2, 1) + mu2 o (1, mu211) - mu211 o (1, mu2)^(12)");
  rset("mu4",
       "mu2 o (mu3, 1) + mu2 o (1, mu3) - mu2 o (1, mu3)^(12) + mu2 o (1, mu3)^(123)"
       " - mu2 o (mu2, mu2) + mu2 o (mu2, mu2)^(23) - mu2 o (mu2, mu2)^(132)"
       " + mu3 o (mu2, 1, 1) - mu3 o (1, mu2, 1) + mu3 o (1, mu2, 1)^(12)"
       " + mu3 o (1, 1, mu2) - mu3 o (1, 1, mu2)^(23) + mu3 o (1, 1, mu2)^(132)");
  rset("mu41",
       "- mu2 o (mu31, 1) - mu2 o (1, mu31)^(123) + mu2 o (mu21, mu2)"
       " + mu3 o (mu21, 1, 1) + mu31 o (1, 1, mu2)");
  rset("mu42",
       "- mu2 o (mu32, 1) - mu2 o (1, mu31) + mu2 o (mu21, mu2)^(132)"
       " + mu31 o (mu2, 1, 1) + mu31 o (1, mu2, 1)^(12)"
       " - mu3 o (1, mu21, 1) + mu31 o (1, 1, mu2)^(132)");
  rset("mu43",
       "mu21 o (1, mu3)^(123) - mu2 o (1, mu32) + mu2 o (1, mu32)^(12) + mu21 o (mu3, 1)"
       " - mu2 o (mu2, mu21) - mu21 o (mu2, mu2)^(132) + mu21 o (mu2, mu2)^(23)"
       " + mu32 o (mu2, 1, 1) - mu32 o (1, 1, mu2)^(23) + mu32 o (1, 1, mu2)^(132)"
       " + mu3 o (1, 1, mu21) - mu32 o (1, mu2, 1) + mu32 o (1, mu2, 1)^(12)");
  rset("mu5",
       "- mu2 o (mu4, 1)"
       " + mu2 o (mu3, mu2) - mu2 o (mu3, mu2)^(34) + mu2 o (mu3, mu2)^(243) - mu2 o (mu3, mu2)^(1432)"
       " - mu2 o (mu2, mu3) + mu2 o (mu2, mu3)^(23) - mu2 o (mu2, mu3)^(234) - mu2 o (mu2, mu3)^(132)"
       " + mu2 o (mu2, mu3)^(1342) - mu2 o (mu2, mu3)^(13)(24)"
       " + mu2 o (1, mu4) - mu2 o (1, mu4)^(12) + mu2 o (1, mu4)^(123) - mu2 o (1, mu4)^(1234)"
       " + mu3 o (mu3, 1, 1)"
       " - mu3 o (mu2, mu2, 1) + mu3 o (mu2, mu2, 1)^(23) - mu3 o (mu2, mu2, 1)^(132)"
       " + mu3 o (mu2, 1, mu2) + mu3 o (mu2, 1, mu2)^(243) - mu3 o (mu2, 1, mu2)^(34)"
       // completes the reduced-unshuffle sum for the blocks (2,1,2)
       " - mu3 o (mu2, 1, mu2)^(1432)"
       " + mu3 o (1, mu3, 1) - mu3 o (1, mu3, 1)^(12) + mu3 o (1, mu3, 1)^(123)"
       " - mu3 o (1, mu2, mu2) + mu3 o (1, mu2, mu2)^(34) - mu3 o (1, mu2, mu2)^(243)"
       " + mu3 o (1, mu2, mu2)^(12) - mu3 o (1, mu2, mu2)^(12)(34) + mu3 o (1, mu2, mu2)^(1243)"
       " - mu3 o (1, mu2, mu2)^(143) + mu3 o (1, mu2, mu2)^(1432)"
       " + mu3 o (1, 1, mu3) - mu3 o (1, 1, mu3)^(23) + mu3 o (1, 1, mu3)^(234) + mu3 o (1, 1, mu3)^(132)"
       " - mu3 o (1, 1, mu3)^(1342) + mu3 o (1, 1, mu3)^(13)(24)"
       " - mu4 o (mu2, 1, 1, 1) + mu4 o (1, mu2, 1, 1) - mu4 o (1, mu2, 1, 1)^(12)"
       " - mu4 o (1, 1, mu2, 1) + mu4 o (1, 1, mu2, 1)^(23) - mu4 o (1, 1, mu2, 1)^(132)"
       " + mu4 o (1, 1, 1, mu2) - mu4 o (1, 1, 1, mu2)^(34) + mu4 o (1, 1, 1, mu2)^(243)"
       " - mu4 o (1, 1, 1, mu2)^(1432)");
  c.finalize();
  return c;
}

Report check_cooperad(const Cooperad& c) {
  Report rep;
  const int unit = unit_generator();
  for (int g : c.generators) {
    const std::string who = gen(g).display;
    IExpr x = IExpr::gen(g);

    IExpr dd = c.d(c.d(x));
    rep.push_back({"d^2=0", who, dd.is_zero(), first_term(dd)});

    IExpr lhs = c.rdecomp(c.d(x));
    IExpr rhs = apply_differential(c, c.rdecomp(x));
    IExpr diff = lhs - rhs;
    rep.push_back({"decomp:dg", who, diff.is_zero(), first_term(diff)});

    IExpr dx = c.decomp(x);
    IExpr left, right;
    for (auto& [code, k] : dx.terms()) {
      std::vector<const IExpr*> top(vertex_count(code), nullptr);
      top[0] = &c.full_image(code[0]);
      std::vector<int> zeros(top.size(), 0);
      left.add(replace_vertices(code, k, top, zeros));
      std::vector<const IExpr*> low(vertex_count(code), nullptr);
      for (size_t v = 1; v < low.size(); ++v) {
        // second-level vertices are all vertices except the root
        int id = -1, seen = -1;
        for (int t : code)
          if (t >= 0 && ++seen == static_cast<int>(v)) {
            id = t;
            break;
          }
        low[v] = &c.full_image(id);
      }
      right.add(replace_vertices(code, k, low, zeros));
    }
    IExpr cd = left - right;
    rep.push_back({"coassoc", who, cd.is_zero(), first_term(cd)});

    IExpr top_unit, bottom_units;
    for (auto& [code, k] : dx.terms()) {
      if (code[0] == unit) top_unit.add_canonical(code, k);
      bool all_units = true;
      for (size_t t = 1; t < code.size(); ++t)
        if (code[t] >= 0 && code[t] != unit) all_units = false;
      if (all_units) bottom_units.add_canonical(code, k);
    }
    bool counit = strip_units(top_unit) == x && strip_units(bottom_units) == x;
    rep.push_back({"counit", who, counit, counit ? "" : "counit projection differs"});
  }
  return rep;
}

IExpr CooperadMorphism::apply(const IExpr& tree) const {
  const int unit = unit_generator();
  return map_generators<Int>(tree, [&](int id) -> const IExpr* {
    if (id == unit) return nullptr;
    auto it = images.find(id);
    return it == images.end() ? &kZero : &it->second;
  });
}

CooperadMorphism build_psi(const Cooperad& source, const Cooperad& liek) {
  CooperadMorphism f;
  f.name = "psi";
  for (int g : source.generators) {
    const auto& info = gen(g);
    bool bottom = info.degree == info.arity - 1;
    if (!bottom) continue;
    auto target = find_generator("ell" + std::to_string(info.arity));
    if (!target || std::find(liek.generators.begin(), liek.generators.end(), *target) == liek.generators.end())
      throw std::invalid_argument("psi: target lacks arity " + std::to_string(info.arity));
    f.images[g] = IExpr::gen(*target);
  }
  return f;
}

Report check_cooperad_morphism(const CooperadMorphism& f, const Cooperad& source, const Cooperad& target) {
  Report rep;
  for (int g : source.generators) {
    const std::string who = gen(g).display;
    IExpr x = IExpr::gen(g);
    IExpr a = f.apply(source.d(x)) - target.d(f.apply(x));
    rep.push_back({f.name + ":d", who, a.is_zero(), first_term(a)});
    IExpr b = f.apply(source.rdecomp(x)) - target.rdecomp(f.apply(x));
    rep.push_back({f.name + ":decomp", who, b.is_zero(), first_term(b)});
  }
  return rep;
}

Cooperad flip_decomposition_term(const Cooperad& c, const std::string& name, size_t term_index) {
  Cooperad m = c;
  int g = gen_id(name);
  auto it = m.reduced.find(g);
  if (it == m.reduced.end() || term_index >= it->second.size())
    throw std::out_of_range("no such decomposition term");
  auto t = std::next(it->second.terms().begin(), static_cast<long>(term_index));
  IExpr flipped;
  flipped.add_canonical(t->first, Int(-2) * t->second);
  it->second.add(flipped);
  m.finalize();
  return m;
}

}  // namespace lied
