#include "lied/wlie3.hpp"

#include "lied/cobar.hpp"

#include <regex>
#include <stdexcept>

namespace lied {

namespace {

// LieD[3] generator suffixes: mu21 <-> l21, l21', f21.
const std::vector<std::string> kSuffixes = {"2",  "3",    "4",  "5",  "21",  "211", "2111", "31",
                                            "32", "311", "312", "322", "41", "42",  "43"};

int generator_degree(const std::string& sfx) { return sfx[0] - '0' - 1 + static_cast<int>(sfx.size()) - 1; }

std::string pretty(const std::string& head, const std::string& sfx, bool prime) {
  std::string s = head + (prime ? "'" : "") + sfx.substr(0, 1);
  for (size_t j = 1; j < sfx.size(); ++j) s += (j == 1 ? ";" : ",") + sfx.substr(j, 1);
  return s;
}

void register_symbols() {
  static const bool done = [] {
    for (auto& s : kSuffixes) {
      int n = s[0] - '0', g = generator_degree(s);
      define_generator("l" + s, n, g - 1, Symmetry::Free, pretty("l", s, false));
      define_generator("l" + s + "'", n, g - 1, Symmetry::Free, pretty("l", s, true));
      define_generator("f" + s, n, g, Symmetry::Free, pretty("f", s, false));
    }
    define_generator("f1", 1, 0, Symmetry::Free, "f1");
    return true;
  }();
  (void)done;
}

std::string suffix_of(const std::string& name, char head) {
  std::string s = name;
  if (!s.empty() && s.back() == '\'') s.pop_back();
  if (s.size() < 2 || s[0] != head) throw std::invalid_argument("unknown map name '" + name + "'");
  return s.substr(1);
}

bool same(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

Equation parse_equation(const std::string& label, const std::string& generator, const std::string& text) {
  register_symbols();
  Equation eq{label, generator, text, std::nullopt, {}};
  auto at = text.find('=');
  if (at == std::string::npos) throw std::logic_error(label + ": missing '='");
  std::string left = text.substr(0, at), right = text.substr(at + 1);
  static const std::regex dform(R"(\s*d\(\s*([A-Za-z0-9_']+)\s*\)\s*)");
  std::smatch m;
  QExpr lhs;
  if (std::regex_match(left, m, dform))
    eq.d_of = gen_id(m[1]);
  else
    lhs = parse_expr(left);
  eq.expr = parse_expr(right) - lhs;
  return eq;
}

std::vector<Equation> make_structure_equations() {
  std::vector<Equation> v;
  auto add = [&](const char* label, const char* g, const char* text) { v.push_back(parse_equation(label, g, text)); };
  add("Leib3:l2", "mu2", "d(l2) = 0");
  add("Leib3:l3", "mu3", "d(l3) = l2 o2 l2 - l2 o1 l2 - (l2 o2 l2)^(12)");
  add("Leib3:l4", "mu4",
      "d(l4) = l2 o1 l3 + l2 o2 l3 - (l2 o2 l3)^(12) + (l2 o2 l3)^(123) - l3 o1 l2"
      " + l3 o2 l2 - (l3 o2 l2)^(12) - l3 o3 l2 + (l3 o3 l2)^(23) - (l3 o3 l2)^(132)");
  add("Leib3:l5", "mu5",
      "0 = l2 o1 l4 - l2 o2 l4 + (l2 o2 l4)^(12) - (l2 o2 l4)^(123) + (l2 o2 l4)^(1234)"
      " + l3 o1 l3 + l3 o2 l3 - (l3 o2 l3)^(12) + (l3 o2 l3)^(123) + l3 o3 l3"
      " - (l3 o3 l3)^(23) + (l3 o3 l3)^(132) + (l3 o3 l3)^(234) - (l3 o3 l3)^(1342) + (l3 o3 l3)^(13)(24)"
      " + l4 o1 l2 - l4 o2 l2 + (l4 o2 l2)^(12) + l4 o3 l2 - (l4 o3 l2)^(23)"
      " + (l4 o3 l2)^(132) - l4 o4 l2 + (l4 o4 l2)^(34) - (l4 o4 l2)^(243) + (l4 o4 l2)^(1432)");
  add("ELie3:l21", "mu21", "d(l21) = l2 + l2^(12)");
  add("ELie3:l211", "mu211", "d(l211) = l21 - l21^(12)");
  add("ELie3:l31", "mu31", "d(l31) = l3 + l3^(12) + l2 o1 l21");
  add("ELie3:l32", "mu32", "d(l32) = l3 + l3^(23) - l2 o2 l21 + l21 o1 l2 + (l21 o2 l2)^(12)");
  add("ELie3:l2111", "mu2111", "l211 + l211^(12) = 0");
  add("ELie3:l311", "mu311", "l31 - l31^(12) = l2 o1 l211");
  add("ELie3:l312", "mu312",
      "l31 - l32^(12) + l31^(132) - l32 + l31^(23) - l32^(123)"
      " = l21 o2 l21 + l21 o1 l21 + (l21 o2 l21)^(12) + (l211 o2 l2)^(132)");
  add("ELie3:l322", "mu322", "l32 - l32^(23) = -l2 o2 l211 + l211 o1 l2 + (l211 o2 l2)^(12)");
  add("ELie3:l41", "mu41", "l4 + l4^(12) = l2 o1 l31 - l31 o3 l2 + (l2 o2 l31)^(123) + l3 o1 l21");
  add("ELie3:l42", "mu42",
      "l4 + l4^(23) = l2 o1 l32 - l3 o2 l21 + l2 o2 l31 - l31 o1 l2 - (l31 o2 l2)^(12) - (l31 o3 l2)^(132)");
  add("ELie3:l43", "mu43",
      "l4 + l4^(34) = l21 o1 l3 - l32 o1 l2 + l32 o2 l2 - (l32 o2 l2)^(12) + l3 o3 l21"
      " + (l32 o3 l2)^(23) - (l32 o3 l2)^(132) + l2 o2 l32 - (l2 o2 l32)^(12) + (l21 o2 l3)^(123)");
  return v;
}

std::vector<Equation> make_morphism_equations() {
  std::vector<Equation> v;
  auto add = [&](const char* label, const char* g, const char* text) { v.push_back(parse_equation(label, g, text)); };
  add("Leib3:f1", "1", "d(f1) = 0");
  add("Leib3:f2", "mu2", "d(f2) = f1 o1 l2 - l2' o (f1, f1)");
  add("Leib3:f3", "mu3",
      "d(f3) = f1 o1 l3 - f2 o2 l2 + f2 o1 l2 + (f2 o2 l2)^(12)"
      " - l3' o (f1, f1, f1) - l2' o (f1, f2) + l2' o (f2, f1) + (l2' o (f1, f2))^(12)");
  add("Leib3:f4", "mu4",
      "f1 o1 l4 - l4' o (f1, f1, f1, f1) = f2 o1 l3 + f2 o2 l3 - (f2 o2 l3)^(12) + (f2 o2 l3)^(123)"
      " - f3 o1 l2 + f3 o2 l2 - (f3 o2 l2)^(12) - f3 o3 l2 + (f3 o3 l2)^(23) - (f3 o3 l2)^(132)"
      " + l2' o (f3, f1) + l2' o (f1, f3) - (l2' o (f1, f3))^(12) + (l2' o (f1, f3))^(123)"
      " - l2' o (f2, f2) + (l2' o (f2, f2))^(23) - (l2' o (f2, f2))^(132) + l3' o (f2, f1, f1)"
      " - l3' o (f1, f2, f1) + (l3' o (f1, f2, f1))^(12) + l3' o (f1, f1, f2)"
      " - (l3' o (f1, f1, f2))^(23) + (l3' o (f1, f1, f2))^(132)");
  add("ELie3:f21", "mu21", "d(f21) = -f2 - f2^(12) + f1 o1 l21 - l21' o (f1, f1)");
  add("ELie3:f211", "mu211", "f1 o1 l211 - l211' o (f1, f1) = f21 - f21^(12)");
  add("ELie3:f31", "mu31", "f1 o1 l31 - l31' o (f1, f1, f1) = f3 + f3^(12) + f2 o1 l21 + l2' o (f21, f1)");
  add("ELie3:f32", "mu32",
      "f1 o1 l32 - l32' o (f1, f1, f1) = f3 + f3^(23) - f2 o2 l21 + f21 o1 l2 + (f21 o2 l2)^(12)"
      " - l2' o (f1, f21) - l21' o (f2, f1) - (l21' o (f1, f2))^(12)");
  return v;
}

void check_maps(const std::map<std::string, MultiMap>& maps, const std::vector<MapSpec>& specs,
                const ComplexPtr& src, const ComplexPtr& tgt, const std::string& what) {
  for (auto& s : specs) {
    auto it = maps.find(s.name);
    if (it == maps.end()) throw std::invalid_argument(what + ": missing map " + s.name);
    const MultiMap& m = it->second;
    if (m.arity() != s.arity || m.degree() != s.degree)
      throw std::invalid_argument(what + ": map " + s.name + " has the wrong arity or degree");
    if (!same(m.src(), src) || !same(m.tgt(), tgt))
      throw std::invalid_argument(what + ": map " + s.name + " lives on the wrong complex");
  }
  for (auto& [name, m] : maps) {
    bool known = false;
    for (auto& s : specs) known = known || s.name == name;
    if (!known) throw std::invalid_argument(what + ": unknown map " + name);
  }
}

std::string first_term(const QExpr& e) {
  if (e.is_zero()) return "";
  auto& [c, k] = *e.terms().begin();
  return to_string(k) + " " + code_str(c);
}

}  // namespace

const std::vector<MapSpec>& structure_map_specs() {
  static const std::vector<MapSpec> v = {{"l2", 2, 0},  {"l21", 2, 1}, {"l211", 2, 2}, {"l3", 3, 1},
                                         {"l31", 3, 2}, {"l32", 3, 2}, {"l4", 4, 2}};
  return v;
}

const std::vector<MapSpec>& morphism_map_specs() {
  static const std::vector<MapSpec> v = {{"f1", 1, 0}, {"f2", 2, 1}, {"f21", 2, 2}, {"f3", 3, 2}};
  return v;
}

WeakLie3Structure WeakLie3Structure::zero(ComplexPtr c) {
  WeakLie3Structure s;
  s.complex = c;
  for (auto& m : structure_map_specs()) s.maps.emplace(m.name, MultiMap(c, c, m.arity, m.degree));
  return s;
}

const MultiMap& WeakLie3Structure::operator[](const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw std::out_of_range("structure has no map " + name);
  return it->second;
}

MultiMap& WeakLie3Structure::operator[](const std::string& name) {
  auto it = maps.find(name);
  if (it == maps.end()) throw std::out_of_range("structure has no map " + name);
  return it->second;
}

void WeakLie3Structure::validate() const {
  if (!complex || !complex->is_complex()) throw std::invalid_argument("structure: not a 3-term complex");
  check_maps(maps, structure_map_specs(), complex, complex, "structure");
}

WeakMorphism WeakMorphism::strict(const WeakLie3Structure& source, const WeakLie3Structure& target, MultiMap f1) {
  WeakMorphism f;
  f.source = source;
  f.target = target;
  for (auto& m : morphism_map_specs())
    f.maps.emplace(m.name, MultiMap(source.complex, target.complex, m.arity, m.degree));
  f.maps.at("f1") = std::move(f1);
  return f;
}

WeakMorphism WeakMorphism::identity(const WeakLie3Structure& s) {
  return strict(s, s, MultiMap::identity(s.complex));
}

const MultiMap& WeakMorphism::operator[](const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw std::out_of_range("morphism has no component " + name);
  return it->second;
}

MultiMap& WeakMorphism::operator[](const std::string& name) {
  auto it = maps.find(name);
  if (it == maps.end()) throw std::out_of_range("morphism has no component " + name);
  return it->second;
}

void WeakMorphism::validate() const {
  source.validate();
  target.validate();
  check_maps(maps, morphism_map_specs(), source.complex, target.complex, "morphism");
}

const std::vector<Equation>& structure_equations() {
  static const std::vector<Equation> v = make_structure_equations();
  return v;
}

const std::vector<Equation>& morphism_equations() {
  static const std::vector<Equation> v = make_morphism_equations();
  return v;
}

std::vector<Equation> leibniz_equations() {
  std::vector<Equation> out;
  for (auto& e : structure_equations())
    if (e.label.rfind("Leib3:", 0) == 0) out.push_back(e);
  return out;
}

int structure_symbol(const std::string& name) {
  register_symbols();
  suffix_of(name, 'l');
  return gen_id(name);
}

int target_symbol(const std::string& name) {
  register_symbols();
  return gen_id(name + "'");
}

int morphism_symbol(const std::string& name) {
  register_symbols();
  suffix_of(name, 'f');
  return gen_id(name);
}

MultiMap residual(const Equation& eq, const Assignment& a, const ComplexPtr& bottom, const ComplexPtr& top) {
  if (eq.d_of) {
    const Generator& g = gen(*eq.d_of);
    MultiMap lhs(bottom, top, g.arity, g.degree - 1);
    if (const MultiMap* m = a(*eq.d_of)) lhs = hom_differential(*m);
    return lhs - evaluate(eq.expr, a, bottom, top, g.arity, g.degree - 1);
  }
  return evaluate(eq.expr, a, bottom, top, eq.expr.arity(), eq.expr.degree());
}

Assignment structure_assignment(const WeakLie3Structure& s) {
  std::map<int, const MultiMap*> m;
  for (auto& [name, map] : s.maps) m[structure_symbol(name)] = &map;
  return [m](int id) -> const MultiMap* {
    auto it = m.find(id);
    return it == m.end() ? nullptr : it->second;
  };
}

Assignment morphism_assignment(const WeakMorphism& f) {
  std::map<int, const MultiMap*> m;
  for (auto& [name, map] : f.source.maps) m[structure_symbol(name)] = &map;
  for (auto& [name, map] : f.target.maps) m[target_symbol(name)] = &map;
  for (auto& [name, map] : f.maps) m[morphism_symbol(name)] = &map;
  return [m](int id) -> const MultiMap* {
    auto it = m.find(id);
    return it == m.end() ? nullptr : it->second;
  };
}

Report check_structure(const WeakLie3Structure& s) {
  s.validate();
  Report rep;
  Assignment a = structure_assignment(s);
  for (auto& eq : structure_equations()) {
    MultiMap r = residual(eq, a, s.complex, s.complex);
    rep.push_back({eq.label, "", r.is_zero(), r.first_nonzero()});
  }
  return rep;
}

Report check_morphism(const WeakMorphism& f) {
  f.validate();
  Report rep;
  Assignment a = morphism_assignment(f);
  for (auto& eq : morphism_equations()) {
    MultiMap r = residual(eq, a, f.source.complex, f.target.complex);
    rep.push_back({eq.label, "", r.is_zero(), r.first_nonzero()});
  }
  return rep;
}

WeakMorphism compose_morphisms(const WeakMorphism& fp, const WeakMorphism& f) {
  if (!same(f.target.complex, fp.source.complex) || f.target.maps != fp.source.maps)
    throw std::invalid_argument("compose_morphisms: target of f is not the source of f'");
  const MultiMap &f1 = f["f1"], &f2 = f["f2"], &f21 = f["f21"], &f3 = f["f3"];
  const MultiMap &g1 = fp["f1"], &g2 = fp["f2"], &g21 = fp["f21"], &g3 = fp["f3"];
  WeakMorphism r;
  r.source = f.source;
  r.target = fp.target;
  r.maps.emplace("f1", full_compose(g1, {f1}));
  r.maps.emplace("f2", full_compose(g2, {f1, f1}) + full_compose(g1, {f2}));
  MultiMap g2_12 = full_compose(g2, {f1, f2});
  r.maps.emplace("f3", full_compose(g3, {f1, f1, f1}) - full_compose(g2, {f2, f1}) + g2_12 -
                           act(g2_12, Perm::parse("(12)", 3)) + full_compose(g1, {f3}));
  r.maps.emplace("f21", full_compose(g21, {f1, f1}) + full_compose(g1, {f21}));
  return r;
}

std::vector<SynthesizedEquation> synthesize_structure_equations() {
  register_symbols();
  Cooperad c = build_lied3();
  Cobar cb = build_cobar(c);
  std::map<int, QExpr> rename;
  for (auto& [g, sg] : cb.desusp) rename[sg] = QExpr::gen(structure_symbol("l" + gen(g).name.substr(2)));
  auto to_l = [&](int id) -> const QExpr* {
    auto it = rename.find(id);
    return it == rename.end() ? nullptr : &it->second;
  };
  std::vector<SynthesizedEquation> out;
  for (int g : c.generators) {
    const std::string& name = gen(g).name;
    int sym = structure_symbol("l" + name.substr(2));
    QExpr e = map_generators<Rat>(cb.d(QExpr::gen(cb.desusp.at(g))), to_l);
    out.push_back({name, gen(sym).degree <= 2, sym, e});
  }
  return out;
}

std::vector<SynthesizedEquation> synthesize_morphism_equations() {
  register_symbols();
  Cooperad c = build_lied3();
  const int unit = unit_generator();
  auto fsym = [&](int v) { return v == unit ? morphism_symbol("f1") : morphism_symbol("f" + gen(v).name.substr(2)); };
  auto lsym = [&](int v) { return structure_symbol("l" + gen(v).name.substr(2)); };
  auto tsym = [&](int v) { return target_symbol("l" + gen(v).name.substr(2)); };
  std::vector<SynthesizedEquation> out;
  out.push_back({"1", true, morphism_symbol("f1"), QExpr()});
  for (int g : c.generators) {
    if (gen(g).degree > 3) continue;
    // d(f_x) = f(dx) + (f * lambda)(x) - (lambda' (*) f)(x)
    std::map<int, QExpr> fimg;
    QExpr dx = to_rational(c.d(IExpr::gen(g)));
    for (auto& [code, k] : dx.terms()) fimg.emplace(code[0], QExpr::gen(fsym(code[0])));
    QExpr e = map_generators<Rat>(dx, [&](int id) -> const QExpr* { return &fimg.at(id); });
    e.add(partial(QExpr::gen(morphism_symbol("f1")), 1, QExpr::gen(lsym(g))));
    IExpr pd = c.partial_decomp(IExpr::gen(g));
    for (auto& [code, k] : pd.terms()) {
      std::vector<int> vs;
      for (int x : code)
        if (x >= 0) vs.push_back(x);
      QExpr a = QExpr::gen(fsym(vs[0])), b = QExpr::gen(lsym(vs[1]));
      e.add(replace_vertices<Rat>(code, Rat(k), {&a, &b}, {0, -1}));
    }
    for (auto& [code, k] : c.full_image(g).terms()) {
      if (code[0] == unit) continue;
      std::vector<QExpr> store;
      std::vector<int> degs;
      for (int x : code)
        if (x >= 0) {
          store.push_back(QExpr::gen(store.empty() ? tsym(x) : fsym(x)));
          degs.push_back(degs.empty() ? -1 : 0);
        }
      std::vector<const QExpr*> imgs;
      for (auto& s : store) imgs.push_back(&s);
      e.add(replace_vertices<Rat>(code, Rat(-k), imgs, degs));
    }
    int sym = morphism_symbol("f" + gen(g).name.substr(2));
    out.push_back({gen(g).name, gen(sym).degree <= 2, sym, e});
  }
  return out;
}

namespace {

void compare_tables(const std::vector<Equation>& table, const std::vector<SynthesizedEquation>& syn, Report& rep) {
  std::map<std::string, const SynthesizedEquation*> by_gen;
  for (auto& s : syn) by_gen[s.generator] = &s;
  for (auto& eq : table) {
    auto it = by_gen.find(eq.generator);
    if (it == by_gen.end()) {
      rep.push_back({eq.label, eq.generator, false, "no generator " + eq.generator});
      continue;
    }
    const SynthesizedEquation& s = *it->second;
    by_gen.erase(it);
    if (s.has_d) {
      bool ok = eq.d_of && *eq.d_of == s.d_symbol && eq.expr == s.expr;
      std::string detail;
      if (!eq.d_of || *eq.d_of != s.d_symbol)
        detail = "expected d(" + gen(s.d_symbol).display + ") on the left";
      else if (!ok)
        detail = "first differing term " + first_term(eq.expr - s.expr);
      rep.push_back({eq.label, eq.generator, ok, detail});
    } else {
      bool ok = !eq.d_of && (eq.expr == s.expr || eq.expr == -s.expr);
      rep.push_back({eq.label, eq.generator, ok, ok ? "" : "first differing term " + first_term(eq.expr - s.expr)});
    }
  }
  for (auto& [g, s] : by_gen) rep.push_back({"missing equation", g, false, "no table row for " + g});
}

}  // namespace

Report check_equation_tables() {
  Report rep;
  compare_tables(structure_equations(), synthesize_structure_equations(), rep);
  compare_tables(morphism_equations(), synthesize_morphism_equations(), rep);
  return rep;
}

}  // namespace lied
