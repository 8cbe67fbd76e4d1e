#include "lied/skew.hpp"

#include "lied/cobar.hpp"

#include <stdexcept>

namespace lied {

namespace {

bool same(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

void expect(const MultiMap& m, const ComplexPtr& src, const ComplexPtr& tgt, int arity, int degree, const char* what) {
  if (m.arity() != arity || m.degree() != degree || !same(m.src(), src) || !same(m.tgt(), tgt))
    throw std::invalid_argument(std::string("lie3: map ") + what + " has the wrong shape");
}

using Table = std::map<int, const MultiMap*>;

Assignment from_table(Table t) {
  return [t](int id) -> const MultiMap* {
    auto it = t.find(id);
    return it == t.end() ? nullptr : it->second;
  };
}

Table structure_table(const Lie3Structure& t, bool primed) {
  auto sym = [&](const char* n) { return primed ? target_symbol(n) : structure_symbol(n); };
  return {{sym("l2"), &t.l2}, {sym("l3"), &t.l3}, {sym("l4"), &t.l4}};
}

std::string first_term(const QExpr& e) {
  if (e.is_zero()) return "";
  auto& [c, k] = *e.terms().begin();
  return to_string(k) + " " + code_str(c);
}

}  // namespace

Lie3Structure Lie3Structure::zero(ComplexPtr c) {
  return {c, MultiMap(c, c, 2, 0), MultiMap(c, c, 3, 1), MultiMap(c, c, 4, 2)};
}

void Lie3Structure::validate() const {
  if (!complex || !complex->is_complex()) throw std::invalid_argument("lie3: not a 3-term complex");
  expect(l2, complex, complex, 2, 0, "l2");
  expect(l3, complex, complex, 3, 1, "l3");
  expect(l4, complex, complex, 4, 2, "l4");
}

void Lie3Morphism::validate() const {
  source.validate();
  target.validate();
  expect(f1, source.complex, target.complex, 1, 0, "f1");
  expect(f2, source.complex, target.complex, 2, 1, "f2");
  expect(f3, source.complex, target.complex, 3, 2, "f3");
}

Report check_lie3(const Lie3Structure& t) {
  t.validate();
  Report rep;
  for (auto [name, m] : {std::pair<const char*, const MultiMap*>{"l2", &t.l2}, {"l3", &t.l3}, {"l4", &t.l4}}) {
    std::string bad;
    for (auto& s : all_perms(m->arity())) {
      if (act(*m, s) != m->scaled(Rat(s.sign()))) {
        bad = "fails for " + s.cycles();
        break;
      }
    }
    rep.push_back({"skew-symmetry", name, bad.empty(), bad});
  }
  Assignment a = from_table(structure_table(t, false));
  for (auto& eq : leibniz_equations()) {
    MultiMap r = residual(eq, a, t.complex, t.complex);
    rep.push_back({eq.label, "", r.is_zero(), r.first_nonzero()});
  }
  return rep;
}

Report check_lie3_morphism(const Lie3Morphism& f) {
  f.validate();
  Table tab = structure_table(f.source, false);
  tab.merge(structure_table(f.target, true));
  tab[morphism_symbol("f1")] = &f.f1;
  tab[morphism_symbol("f2")] = &f.f2;
  tab[morphism_symbol("f3")] = &f.f3;
  Assignment a = from_table(tab);
  Report rep;
  for (auto& eq : morphism_equations()) {
    if (eq.label.rfind("Leib3:", 0) != 0) continue;
    MultiMap r = residual(eq, a, f.source.complex, f.target.complex);
    rep.push_back({eq.label, "", r.is_zero(), r.first_nonzero()});
  }
  return rep;
}

const std::vector<SkewFormula>& skew_structure_formulas() {
  static const std::vector<SkewFormula> v = {
      {"l2", "df:SS:l2", "1/2 alt(l2)"},
      {"l3", "df:SS:l3", "1/6 alt(l3) - 1/24 alt(l21 o1 l2 + l21 o2 l2)"},
      {"l4", "df:SS:l4",
       "1/24 alt(l4) + 1/48 alt(l21 o1 l3 - l31 o1 l2 + l32 o2 l2 - l21 o2 l3 - l31 o2 l2 + l32 o3 l2)"},
  };
  return v;
}

const std::vector<SkewFormula>& skew_morphism_formulas() {
  static const std::vector<SkewFormula> v = {
      {"f2", "df:SS:mor", "1/2 alt(f2)"},
      {"f3", "df:SS:mor",
       "1/6 alt(f3) - 1/24 alt(f21 o1 l2 + f21 o2 l2 - l21' o (f2, f1) - l21' o (f1, f2))"},
  };
  return v;
}

Lie3Structure skew_structure(const WeakLie3Structure& s) { return skew_structure(s, skew_structure_formulas()); }

Lie3Structure skew_structure(const WeakLie3Structure& s, const std::vector<SkewFormula>& formulas) {
  s.validate();
  Assignment a = structure_assignment(s);
  Lie3Structure t = Lie3Structure::zero(s.complex);
  for (auto& f : formulas) {
    MultiMap& out = f.name == "l2" ? t.l2 : f.name == "l3" ? t.l3 : t.l4;
    out = evaluate(parse_expr(f.text), a, s.complex, s.complex, out.arity(), out.degree());
  }
  return t;
}

Lie3Morphism skew_morphism(const WeakMorphism& f) { return skew_morphism(f, skew_morphism_formulas()); }

Lie3Morphism skew_morphism(const WeakMorphism& f, const std::vector<SkewFormula>& formulas) {
  f.validate();
  Assignment a = morphism_assignment(f);
  Lie3Morphism g{skew_structure(f.source), skew_structure(f.target), f["f1"], f["f2"], f["f3"]};
  for (auto& c : formulas) {
    MultiMap& out = c.name == "f2" ? g.f2 : g.f3;
    out = evaluate(parse_expr(c.text), a, f.source.complex, f.target.complex, out.arity(), out.degree());
  }
  return g;
}

Lie3Morphism compose_lie3(const Lie3Morphism& g, const Lie3Morphism& f) {
  if (!same(f.target.complex, g.source.complex) || f.target.l2 != g.source.l2 || f.target.l3 != g.source.l3 ||
      f.target.l4 != g.source.l4)
    throw std::invalid_argument("compose_lie3: target of f is not the source of g");
  Lie3Morphism r{f.source, g.target, full_compose(g.f1, {f.f1}), {}, {}};
  r.f2 = full_compose(g.f2, {f.f1, f.f1}) + full_compose(g.f1, {f.f2});
  MultiMap g2_12 = full_compose(g.f2, {f.f1, f.f2});
  r.f3 = full_compose(g.f3, {f.f1, f.f1, f.f1}) - full_compose(g.f2, {f.f2, f.f1}) + g2_12 -
         act(g2_12, Perm::parse("(12)", 3)) + full_compose(g.f1, {f.f3});
  return r;
}

PhiPullback phi_pullback() {
  static const PhiPullback cached = [] {
    Cooperad lied3 = build_lied3();
    Cooperad liek = build_liek(5);
    Cobar a = build_cobar(lied3), b = build_cobar(liek);
    OperadMap phi = build_phi(a, b);
    std::map<int, QExpr> rename;
    for (auto& [g, sg] : a.desusp) {
      const std::string& n = gen(g).name;
      if (n.rfind("mu", 0) == 0) rename.emplace(sg, QExpr::gen(structure_symbol("l" + n.substr(2))));
    }
    PhiPullback p;
    for (int n = 2; n <= 4; ++n) {
      const QExpr& img = phi.images.at(gen_id("s_ell" + std::to_string(n)));
      p.expressions.emplace_back("l" + std::to_string(n), map_generators<Rat>(img, [&](int id) -> const QExpr* {
                                   auto it = rename.find(id);
                                   return it == rename.end() ? nullptr : &it->second;
                                 }));
    }
    return p;
  }();
  return cached;
}

Report check_phi_consistency(const WeakLie3Structure& s) {
  Report rep;
  Lie3Structure t = skew_structure(s);
  Assignment a = structure_assignment(s);
  PhiPullback p = phi_pullback();
  for (size_t j = 0; j < p.expressions.size(); ++j) {
    auto& [name, e] = p.expressions[j];
    QExpr diff = e - parse_expr(skew_structure_formulas()[j].text);
    rep.push_back({"Phi*:terms", name, diff.is_zero(), first_term(diff)});
    const MultiMap& m = name == "l2" ? t.l2 : name == "l3" ? t.l3 : t.l4;
    MultiMap r = evaluate(e, a, s.complex, s.complex, m.arity(), m.degree()) - m;
    rep.push_back({"Phi*:maps", name, r.is_zero(), r.first_nonzero()});
  }
  return rep;
}

FunctorialityDefect functoriality_defect(const WeakMorphism& fp, const WeakMorphism& f) {
  return functoriality_defect(fp, f, skew_morphism_formulas());
}

FunctorialityDefect functoriality_defect(const WeakMorphism& fp, const WeakMorphism& f,
                                         const std::vector<SkewFormula>& formulas) {
  WeakMorphism comp = compose_morphisms(fp, f);
  Lie3Morphism a = skew_morphism(comp, formulas);
  Lie3Morphism b = compose_lie3(skew_morphism(fp, formulas), skew_morphism(f, formulas));
  FunctorialityDefect out;
  out.low1 = a.f1 - b.f1;
  out.low2 = a.f2 - b.f2;
  out.defect = a.f3 - b.f3;
  const MultiMap &g21 = fp["f21"], &f1 = f["f1"], &f2 = f["f2"];
  out.witness = alternate(full_compose(g21, {f2, f1}) + full_compose(g21, {f1, f2})).scaled(Rat(-1, 24));
  MultiMap gap = out.defect - hom_differential(out.witness);
  out.report.push_back({"S(f'f)_1 = (S(f')S(f))_1", "", out.low1.is_zero(), out.low1.first_nonzero()});
  out.report.push_back({"S(f'f)_2 = (S(f')S(f))_2", "", out.low2.is_zero(), out.low2.first_nonzero()});
  out.report.push_back({"defect_3 = d(witness)", "", gap.is_zero(), gap.first_nonzero()});
  return out;
}

}  // namespace lied
