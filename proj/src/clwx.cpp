#include "lied/clwx.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace lied {

namespace {

bool same(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

void expect(const MultiMap& m, const ComplexPtr& c, int arity, int degree, const char* what) {
  if (m.arity() != arity || m.degree() != degree || !same(m.src(), c) || !same(m.tgt(), c))
    throw std::invalid_argument(std::string("clwx: map ") + what + " has the wrong shape");
}

// Ungraded view of L: global index -> (degree, index), vectors of length e0 + e1 + f.
struct View {
  const Complex3& L;
  int off[4];

  explicit View(const Complex3& c) : L(c) {
    off[0] = 0;
    for (int p = 0; p < 3; ++p) off[p + 1] = off[p] + c.dims[p];
  }
  int total() const { return off[3]; }
  int nE() const { return off[2]; }
  std::pair<int, int> split(int g) const {
    int p = g < off[1] ? 0 : g < off[2] ? 1 : 2;
    return {p, g - off[p]};
  }
  QMatrix zero() const { return QMatrix(total(), 1); }
  QMatrix basis(int g) const {
    QMatrix v = zero();
    v(g, 0) = 1;
    return v;
  }

  // m on basis vectors, embedded; zero outside the window
  QMatrix val(const MultiMap& m, const std::vector<int>& args) const {
    std::vector<std::pair<int, int>> b;
    int s = m.degree();
    for (int g : args) {
      b.push_back(split(g));
      s += b.back().first;
    }
    QMatrix v = zero();
    if (s < 0 || s > 2) return v;
    QMatrix c = m.apply(b);
    for (int r = 0; r < c.rows(); ++r) v(off[s] + r, 0) = c(r, 0);
    return v;
  }

  // ungraded differential: E1 -> E0 by partial, F -> E1 by D
  QMatrix d(const QMatrix& v) const {
    QMatrix out = zero();
    for (int p = 1; p <= 2; ++p) {
      const QMatrix& m = L.d(p);
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(off[p - 1] + r, 0) += m(r, c) * v(off[p] + c, 0);
    }
    return out;
  }
};

QMatrix add(QMatrix a, const QMatrix& b, const Rat& k = Rat(1)) {
  for (int r = 0; r < a.rows(); ++r) a(r, 0) += k * b(r, 0);
  return a;
}

// The axioms quantify over E; F-valued pairing extended bilinearly.
struct Ops {
  const CLWXData& x;
  View v;

  explicit Ops(const CLWXData& data) : x(data), v(*data.complex) {}

  QMatrix circ(const QMatrix& a, const QMatrix& b) const {
    QMatrix out = v.zero();
    for (int i = 0; i < v.nE(); ++i)
      for (int j = 0; j < v.nE(); ++j)
        if (a(i, 0) != 0 && b(j, 0) != 0) out = add(out, v.val(x.circ, {i, j}), a(i, 0) * b(j, 0));
    return out;
  }
  QMatrix omega(const QMatrix& a, const QMatrix& b, const QMatrix& c) const {
    QMatrix out = v.zero();
    for (int i = 0; i < v.nE(); ++i)
      for (int j = 0; j < v.nE(); ++j)
        for (int k = 0; k < v.nE(); ++k)
          if (a(i, 0) != 0 && b(j, 0) != 0 && c(k, 0) != 0)
            out = add(out, v.val(x.omega, {i, j, k}), a(i, 0) * b(j, 0) * c(k, 0));
    return out;
  }
  // S(E0, E0) would land in E1 and S(E1, E1) has no room: both are zero by isotropy
  QMatrix pair(int i, int j) const {
    if (v.split(i).first + v.split(j).first != 1) return v.zero();
    return v.val(x.S, {i, j});
  }
  QMatrix S(const QMatrix& a, const QMatrix& b) const {
    QMatrix out = v.zero();
    for (int i = 0; i < v.nE(); ++i)
      for (int j = 0; j < v.nE(); ++j)
        if (a(i, 0) != 0 && b(j, 0) != 0) out = add(out, pair(i, j), a(i, 0) * b(j, 0));
    return out;
  }
  QMatrix rho(const QMatrix& a, const QMatrix& fn) const {
    QMatrix out = v.zero();
    for (int i = 0; i < v.nE(); ++i)
      for (int k = v.off[2]; k < v.total(); ++k)
        if (a(i, 0) != 0 && fn(k, 0) != 0) out = add(out, v.val(x.rho, {i, k}), a(i, 0) * fn(k, 0));
    return out;
  }
  QMatrix E(int i) const { return v.basis(i); }
  QMatrix dE(const QMatrix& a) const {  // partial on E, zero on F
    QMatrix b = a;
    for (int k = v.off[2]; k < v.total(); ++k) b(k, 0) = 0;
    return v.d(b);
  }
};

std::string where(std::initializer_list<int> idx, const QMatrix& diff) {
  std::string s = "at basis (";
  bool first = true;
  for (int i : idx) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + "), " + first_nonzero(diff);
}

// Blocks of m outside the allowed tuples.
std::string stray_block(const MultiMap& m, const std::vector<MultiMap::Degrees>& allowed) {
  for (auto& [p, b] : m.blocks()) {
    bool ok = false;
    for (auto& q : allowed) ok = ok || p == q;
    if (!ok) {
      std::string s = "block (";
      for (size_t j = 0; j < p.size(); ++j) s += (j ? "," : "") + std::to_string(p[j]);
      return s + ") nonzero";
    }
  }
  return "";
}

MultiMap restrict(const MultiMap& m, const ComplexPtr& to) {
  MultiMap out(to, to, m.arity(), m.degree());
  for (auto& [p, b] : m.blocks())
    if (out.in_window(p) && out.rows(p) == b.rows()) out.set_block(p, b);
  return out;
}

MultiMap D_map(const ComplexPtr& L) {
  return MultiMap::linear(L, L, -1, {QMatrix(0, L->dims[0]), QMatrix(L->dims[0], L->dims[1]), L->d2});
}

}  // namespace

CLWXData CLWXData::zero(ComplexPtr c) {
  return {c, MultiMap(c, c, 2, 0), MultiMap(c, c, 3, 1), MultiMap(c, c, 2, 1), MultiMap(c, c, 2, 0)};
}

void CLWXData::validate() const {
  if (!complex || !complex->is_complex()) throw std::invalid_argument("clwx: not a 3-term complex");
  expect(circ, complex, 2, 0, "circ");
  expect(omega, complex, 3, 1, "Omega");
  expect(S, complex, 2, 1, "S");
  expect(rho, complex, 2, 0, "rho");
}

Report check_clwx(const CLWXData& x) {
  x.validate();
  Report rep;
  Ops o(x);
  const View& v = o.v;
  const int n = v.nE(), e0 = x.e0();

  auto shape = [&](const char* subject, const MultiMap& m, std::vector<MultiMap::Degrees> allowed) {
    std::string bad = stray_block(m, allowed);
    rep.push_back({"graded data", subject, bad.empty(), bad});
  };
  shape("circ", x.circ, {{0, 0}, {0, 1}, {1, 0}});
  shape("Omega", x.omega, {{0, 0, 0}});
  shape("S", x.S, {{0, 1}, {1, 0}, {0, 0}});
  shape("rho", x.rho, {{0, 2}});

  // a failing row records the first witness only
  auto row = [&](const std::string& label, const std::string& subject, auto&& body) {
    std::string bad;
    body(bad);
    rep.push_back({label, subject, bad.empty(), bad});
  };

  row("(i) isotropy", "S(E0,E0)", [&](std::string& bad) {
    if (!x.S.block({0, 0}).is_zero()) bad = "block (0,0) nonzero";
  });
  row("(i) symmetry", "S", [&](std::string& bad) {
    for (int i = 0; i < n && bad.empty(); ++i)
      for (int j = 0; j < n && bad.empty(); ++j) {
        QMatrix diff = o.pair(i, j) - o.pair(j, i);
        if (!diff.is_zero()) bad = where({i, j}, diff);
      }
  });
  row("(i) nondegeneracy", "S", [&](std::string& bad) {
    // E0 -> Hom(E1, F) and E1 -> Hom(E0, F) injective
    for (int side = 0; side < 2 && bad.empty(); ++side) {
      int lo = side == 0 ? 0 : e0, hi = side == 0 ? e0 : n;
      int olo = side == 0 ? e0 : 0, ohi = side == 0 ? n : e0;
      QMatrix m((ohi - olo) * x.f(), hi - lo);
      for (int i = lo; i < hi; ++i)
        for (int j = olo; j < ohi; ++j) {
          QMatrix s = o.pair(i, j);
          for (int k = 0; k < x.f(); ++k) m((j - olo) * x.f() + k, i - lo) = s(v.off[2] + k, 0);
        }
      if (rank(m) != hi - lo) bad = side == 0 ? "E0 -> Hom(E1,F) not injective" : "E1 -> Hom(E0,F) not injective";
    }
  });
  row("skew-symmetry", "circ on E0", [&](std::string& bad) {
    for (int i = 0; i < e0 && bad.empty(); ++i)
      for (int j = 0; j < e0 && bad.empty(); ++j) {
        QMatrix sum = v.val(x.circ, {i, j}) + v.val(x.circ, {j, i});
        if (!sum.is_zero()) bad = where({i, j}, sum);
      }
  });
  row("skew-symmetry", "Omega", [&](std::string& bad) {
    for (auto& s : all_perms(3))
      if (act(x.omega, s) != x.omega.scaled(Rat(s.sign()))) {
        bad = "fails for " + s.cycles();
        break;
      }
  });
  row("S(e,Df) = rho(e)(f)", "D", [&](std::string& bad) {
    for (int i = 0; i < n && bad.empty(); ++i)
      for (int k = v.off[2]; k < v.total() && bad.empty(); ++k) {
        QMatrix diff = o.S(o.E(i), v.d(v.basis(k))) - o.rho(o.E(i), v.basis(k));
        if (!diff.is_zero()) bad = where({i, k}, diff);
      }
  });

  // (ii) on the 2-term truncation
  {
    auto E = share(Complex3::make({x.e0(), x.e1(), 0}, x.complex->d1));
    MultiMap l2 = restrict(x.circ, E), l3 = restrict(x.omega, E), l4(E, E, 4, 2);
    std::map<int, const MultiMap*> tab{
        {structure_symbol("l2"), &l2}, {structure_symbol("l3"), &l3}, {structure_symbol("l4"), &l4}};
    Assignment a = [tab](int id) -> const MultiMap* {
      auto it = tab.find(id);
      return it == tab.end() ? nullptr : it->second;
    };
    for (auto& eq : leibniz_equations()) {
      MultiMap r = residual(eq, a, E, E);
      rep.push_back({"(ii) " + eq.label, "Leibniz 2-algebra", r.is_zero(), r.first_nonzero()});
    }
  }

  row("(iii)", "e o e = 1/2 D S(e,e)", [&](std::string& bad) {
    // polarized: x o y + y o x = D S(x,y)
    for (int i = 0; i < n && bad.empty(); ++i)
      for (int j = i; j < n && bad.empty(); ++j) {
        QMatrix diff = o.circ(o.E(i), o.E(j)) + o.circ(o.E(j), o.E(i)) - v.d(o.S(o.E(i), o.E(j)));
        if (!diff.is_zero()) bad = where({i, j}, diff);
      }
  });
  row("(iv)", "S(de1,e2) = S(e1,de2)", [&](std::string& bad) {
    for (int i = 0; i < n && bad.empty(); ++i)
      for (int j = 0; j < n && bad.empty(); ++j) {
        QMatrix diff = o.S(o.dE(o.E(i)), o.E(j)) - o.S(o.E(i), o.dE(o.E(j)));
        if (!diff.is_zero()) bad = where({i, j}, diff);
      }
  });
  row("(v)", "rho(e1)S(e2,e3) = S(e1 o e2,e3) + S(e2,e1 o e3)", [&](std::string& bad) {
    for (int i = 0; i < n && bad.empty(); ++i)
      for (int j = 0; j < n && bad.empty(); ++j)
        for (int k = 0; k < n && bad.empty(); ++k) {
          QMatrix a = o.E(i), b = o.E(j), c = o.E(k);
          QMatrix diff = o.rho(a, o.S(b, c)) - o.S(o.circ(a, b), c) - o.S(b, o.circ(a, c));
          if (!diff.is_zero()) bad = where({i, j, k}, diff);
        }
  });
  row("(vi)", "S(Omega(e1,e2,e3),e4) = -S(e3,Omega(e1,e2,e4))", [&](std::string& bad) {
    for (int i = 0; i < n && bad.empty(); ++i)
      for (int j = 0; j < n && bad.empty(); ++j)
        for (int k = 0; k < n && bad.empty(); ++k)
          for (int l = 0; l < n && bad.empty(); ++l) {
            QMatrix a = o.E(i), b = o.E(j), c = o.E(k), e = o.E(l);
            QMatrix diff = o.S(o.omega(a, b, c), e) + o.S(c, o.omega(a, b, e));
            if (!diff.is_zero()) bad = where({i, j, k, l}, diff);
          }
  });
  return rep;
}

WeakLie3Structure clwx_to_wlie3(const CLWXData& x) {
  for (auto& c : check_clwx(x))
    if (!c.ok) throw std::invalid_argument("clwx: axiom " + c.label + " [" + c.subject + "] fails: " + c.detail);
  const ComplexPtr& L = x.complex;
  WeakLie3Structure s = WeakLie3Structure::zero(L);
  s["l2"] = x.circ + partial_compose(x.S, 2, D_map(L));
  s["l21"] = x.S;
  s["l3"] = x.omega;
  return s;
}

Lie3Structure corollary_closed_form(const CLWXData& x) {
  x.validate();
  const ComplexPtr& L = x.complex;
  MultiMap D = D_map(L);
  Lie3Structure t = Lie3Structure::zero(L);
  t.l2 = (x.circ - act(x.circ, Perm::parse("(12)", 2)) - partial_compose(x.S, 1, D) + partial_compose(x.S, 2, D))
             .scaled(Rat(1, 2));
  t.l3 = x.omega - alternate(partial_compose(x.S, 1, x.circ)).scaled(Rat(1, 12));
  t.l4 = partial_compose(x.S, 1, x.omega);
  return t;
}

Report check_corollary(const CLWXData& x) {
  Lie3Structure a = skew_structure(clwx_to_wlie3(x));
  Lie3Structure b = corollary_closed_form(x);
  Report rep;
  for (auto [name, p, q] : {std::tuple<const char*, const MultiMap*, const MultiMap*>{"l2", &a.l2, &b.l2},
                            {"l3", &a.l3, &b.l3},
                            {"l4", &a.l4, &b.l4}}) {
    MultiMap diff = *p - *q;
    rep.push_back({"closed form", name, diff.is_zero(), diff.first_nonzero()});
  }
  return rep;
}

std::string CLWXFamily::describe() const {
  static const char* names[] = {"abelian", "sl2", "Heisenberg", "affine plane"};
  std::string g = lie == 0 ? "abelian dim " + std::to_string(dim) : names[lie];
  return g + " (+) dual, t=" + std::to_string(t) + " a=" + std::to_string(a) + " w=" + std::to_string(w);
}

CLWXData clwx_family(const CLWXFamily& p) {
  int m = p.lie == 0 ? p.dim : p.lie == 3 ? 2 : 3;
  if (m < 1 || m > 4 || p.lie < 0 || p.lie > 3) throw std::invalid_argument("clwx_family: bad Lie algebra");
  // c[i][j][k]: [x_i, x_j] = sum_k c x_k; K: E1 -> E0
  std::vector<std::vector<std::vector<Rat>>> c(m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m)));
  auto set = [&](int i, int j, int k, int v) {
    c[i][j][k] += v;
    c[j][i][k] -= v;
  };
  QMatrix K(m, m);
  switch (p.lie) {
    case 0: K = QMatrix::identity(m); break;
    case 1:  // e, f, h; inverse Killing form up to scale
      set(2, 0, 0, 2);
      set(2, 1, 1, -2);
      set(0, 1, 2, 1);
      K(1, 0) = 2;
      K(0, 1) = 2;
      K(2, 2) = 1;
      break;
    case 2:  // [x, y] = z
      set(0, 1, 2, 1);
      K(2, 2) = 1;
      break;
    case 3:  // [x0, x1] = x1
      set(0, 1, 1, 1);
      K(1, 1) = 1;
      break;
  }
  std::vector<Rat> alpha(m);
  alpha[0] = p.a;
  QMatrix partial = K.scaled(Rat(p.t)), D(m, 1);
  for (int j = 0; j < m; ++j) D(j, 0) = alpha[j];
  if (!(partial * D).is_zero()) throw std::invalid_argument("clwx_family: partial D != 0");
  auto L = share(Complex3::make({m, m, 1}, partial, D));
  CLWXData x = CLWXData::zero(L);

  QMatrix b00(m, m * m), b01(m, m * m), b10(m, m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        b00(k, i * m + j) = c[i][j][k];
        // (ad^*_{x_i} b_j)(x_k) = -b_j([x_i, x_k])
        b01(k, i * m + j) = -c[i][k][j];
      }
      b01(j, i * m + j) += alpha[i];
    }
  // b_j o x_i = b_j(x_i) alpha - x_i o b_j
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) b10(k, j * m + i) = (i == j ? alpha[k] : Rat(0)) - b01(k, i * m + j);
  x.circ.set_block({0, 0}, b00);
  x.circ.set_block({0, 1}, b01);
  x.circ.set_block({1, 0}, b10);

  QMatrix s01(1, m * m), s10(1, m * m), r(1, m);
  for (int i = 0; i < m; ++i) {
    s01(0, i * m + i) = 1;
    s10(0, i * m + i) = 1;
    r(0, i) = alpha[i];
  }
  x.S.set_block({0, 1}, s01);
  x.S.set_block({1, 0}, s10);
  x.rho.set_block({0, 2}, r);

  if (p.w != 0) {
    if (m != 4) throw std::invalid_argument("clwx_family: Omega needs dimension 4");
    QMatrix om(m, m * m * m);
    for (auto& s : all_perms(4)) {
      const auto& im = s.images();
      om(im[3] - 1, ((im[0] - 1) * m + im[1] - 1) * m + im[2] - 1) = p.w * s.sign();
    }
    x.omega.set_block({0, 0, 0}, om);
  }
  return x;
}

std::vector<CLWXInstance> clwx_search() {
  std::vector<CLWXFamily> cands;
  for (int lie = 0; lie < 4; ++lie)
    for (int dim = 1; dim <= (lie == 0 ? 4 : 1); ++dim)
      for (int t = -1; t <= 1; ++t)
        for (int a = -1; a <= 1; ++a)
          for (int w = -1; w <= 1; ++w) {
            if (w != 0 && !(lie == 0 && dim == 4)) continue;
            cands.push_back({lie, lie == 0 ? dim : 0, t, a, w});
          }
  std::vector<CLWXInstance> out;
  for (auto& p : cands) {
    CLWXData x;
    try {
      x = clwx_family(p);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (all_ok(check_clwx(x))) out.push_back({p, x});
  }
  return out;
}

}  // namespace lied
