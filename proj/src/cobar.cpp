#include "lied/cobar.hpp"

#include <stdexcept>

namespace lied {

namespace {

const QExpr kQZero;

std::vector<int> vertices(const Code& c) {
  std::vector<int> v;
  for (int t : c)
    if (t >= 0) v.push_back(t);
  return v;
}

std::string first_term(const QExpr& e) {
  if (e.is_zero()) return "";
  auto& [c, k] = *e.terms().begin();
  return to_string(k) + " " + code_str(c);
}

}  // namespace

int desuspend(int g) {
  const Generator& x = gen(g);
  return define_generator("s_" + x.name, x.arity, x.degree - 1, x.sym, "s^-1 " + x.display);
}

QExpr Cobar::s_inv(const IExpr& x) const {
  QExpr out;
  for (auto& [c, k] : x.terms()) {
    if (c.empty() || c[0] < 0 || vertex_count(c) != 1)
      throw std::invalid_argument("s_inv: expected single-vertex trees");
    auto it = desusp.find(c[0]);
    if (it == desusp.end()) throw std::invalid_argument("s_inv: " + gen(c[0]).display + " is not a generator");
    Code s = c;
    s[0] = it->second;
    out.add(s, Rat(k));
  }
  return out;
}

QExpr Cobar::d(const QExpr& t) const {
  return apply_derivation<Rat>(
      t,
      [&](int id) -> const QExpr* {
        auto it = d_images.find(id);
        return it == d_images.end() ? nullptr : &it->second;
      },
      -1);
}

Cobar build_cobar(const Cooperad& c, int d1_sign) {
  Cobar cb;
  cb.name = "Omega " + c.name;
  for (int g : c.generators) cb.desusp[g] = desuspend(g);
  for (int g : c.generators) {
    QExpr img;
    auto dit = c.differential.find(g);
    if (dit != c.differential.end()) img.add(cb.s_inv(dit->second), Rat(d1_sign));
    IExpr p = c.partial_decomp(IExpr::gen(g));
    for (auto& [code, k] : p.terms()) {
      auto vs = vertices(code);
      std::vector<QExpr> store;
      for (int v : vs) store.push_back(QExpr::gen(cb.desusp.at(v)));
      std::vector<const QExpr*> imgs;
      for (auto& s : store) imgs.push_back(&s);
      std::vector<int> degs(vs.size(), -1);
      img.add(replace_vertices<Rat>(code, Rat(k), imgs, degs), Rat(-1));
    }
    if (!img.is_zero()) cb.d_images[cb.desusp[g]] = img;
  }
  return cb;
}

QExpr OperadMap::apply(const QExpr& t) const {
  return map_generators<Rat>(t, [&](int id) -> const QExpr* {
    auto it = images.find(id);
    return it == images.end() ? &kQZero : &it->second;
  });
}

OperadMap cobar_map(const Cobar& source, const Cobar& target, const CooperadMorphism& f) {
  OperadMap m;
  m.name = "Omega " + f.name;
  for (auto& [g, sg] : source.desusp) {
    auto it = f.images.find(g);
    if (it == f.images.end()) continue;
    QExpr img = target.s_inv(it->second);
    if (!img.is_zero()) m.images[sg] = img;
  }
  return m;
}

OperadMap build_phi(const Cobar& lied3, const Cobar& liek, const PhiCoefficients& k) {
  (void)lied3;
  OperadMap phi;
  phi.name = "Phi";
  auto s = [&](const std::string& name) { return gen_id("s_" + name); };
  auto term = [](const std::string& text, const Rat& c) { return parse_expr(text).scaled(c); };
  phi.images[s("ell2")] = term("alt(s_mu2)", k.c2);
  phi.images[s("ell3")] =
      term("alt(s_mu3)", k.c3) + term("alt(s_mu21 o1 s_mu2 + s_mu21 o2 s_mu2)", k.c3_quadratic);
  phi.images[s("ell4")] =
      term("alt(s_mu4)", k.c4) +
      term("alt(s_mu21 o1 s_mu3 - s_mu31 o1 s_mu2 + s_mu32 o2 s_mu2"
           " - s_mu21 o2 s_mu3 - s_mu31 o2 s_mu2 + s_mu32 o3 s_mu2)",
           k.c4_quadratic);
  for (auto& [g, img] : phi.images) {
    bool known = false;
    for (auto& [c, sg] : liek.desusp) known = known || sg == g;
    if (!known) throw std::invalid_argument("Phi: target cobar lacks " + gen(g).display);
  }
  return phi;
}

Report check_phi(const OperadMap& phi, const Cobar& lied3, const Cobar& liek, const OperadMap& omega_psi) {
  Report rep;
  for (auto& [g, img] : phi.images) {
    const std::string who = gen(g).display;
    QExpr x = QExpr::gen(g);
    QExpr chain = lied3.d(img) - phi.apply(liek.d(x));
    rep.push_back({"Phi:d", who, chain.is_zero(), first_term(chain)});
    QExpr back = omega_psi.apply(img) - x;
    rep.push_back({"OmegaPsi.Phi=id", who, back.is_zero(), first_term(back)});
  }
  return rep;
}

Report check_phi(const PhiCoefficients& k) {
  Cooperad lied3 = build_lied3();
  Cooperad liek = build_liek(5);
  Cobar a = build_cobar(lied3), b = build_cobar(liek);
  OperadMap op = cobar_map(a, b, build_psi(lied3, liek));
  return check_phi(build_phi(a, b, k), a, b, op);
}

QExpr naive_phi_defect(const Cooperad& lied3, const Cooperad& liek) {
  std::map<int, QExpr> phi;
  for (int n = 2; n <= 3; ++n)
    phi[gen_id("ell" + std::to_string(n))] =
        to_rational(alternate(IExpr::gen(gen_id(mu_name(n))))).scaled(Rat(1) / Rat(factorial(n)));
  const int ell3 = gen_id("ell3"), mu3 = gen_id("mu3");
  QExpr a = to_rational(lied3.rdecomp(alternate(IExpr::gen(mu3)))).scaled(Rat(1, 6));
  QExpr b = map_generators<Rat>(to_rational(liek.rdecomp(IExpr::gen(ell3))), [&](int id) -> const QExpr* {
    auto it = phi.find(id);
    return it == phi.end() ? nullptr : &it->second;
  });
  return a - b;
}

}  // namespace lied
