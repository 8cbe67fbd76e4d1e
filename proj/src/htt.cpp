#include "lied/htt.hpp"

#include <stdexcept>

namespace lied {

namespace {

int h_symbol() {
  static const int id = define_generator("h", 1, 1, Symmetry::Free, "h");
  return id;
}

bool same(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

void expect_map(const MultiMap& m, const ComplexPtr& src, const ComplexPtr& tgt, int degree, const char* name) {
  if (m.arity() != 1 || m.degree() != degree || !same(m.src(), src) || !same(m.tgt(), tgt))
    throw std::invalid_argument(std::string("retract: map ") + name + " has the wrong shape");
}

QMatrix columns(const QMatrix& m, const std::vector<int>& idx) {
  QMatrix out(m.rows(), static_cast<int>(idx.size()));
  for (int r = 0; r < m.rows(); ++r)
    for (size_t j = 0; j < idx.size(); ++j) out(r, static_cast<int>(j)) = m(r, idx[j]);
  return out;
}

QMatrix rows_of(const QMatrix& m, const std::vector<int>& idx) { return columns(m.transpose(), idx).transpose(); }

QMatrix hcat(const std::vector<QMatrix>& parts, int rows) {
  int c = 0;
  for (auto& p : parts) c += p.cols();
  QMatrix out(rows, c);
  int at = 0;
  for (auto& p : parts) {
    for (int r = 0; r < rows; ++r)
      for (int j = 0; j < p.cols(); ++j) out(r, at + j) = p(r, j);
    at += p.cols();
  }
  return out;
}

// Columns of `extra` that extend the span of `base`, greedily.
QMatrix extend(const QMatrix& base, const QMatrix& extra) {
  QMatrix cur = base;
  std::vector<int> picked;
  for (int j = 0; j < extra.cols(); ++j) {
    QMatrix trial = hcat({cur, columns(extra, {j})}, extra.rows());
    if (rank(trial) > rank(cur)) {
      cur = trial;
      picked.push_back(j);
    }
  }
  return columns(extra, picked);
}

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int k = from; k < to; ++k) v.push_back(k);
  return v;
}

MultiMap evaluate_text(const std::string& text, const WeakLie3Structure& s, const MultiMap& h, int arity,
                       int degree) {
  Assignment base = structure_assignment(s);
  int hs = h_symbol();
  Assignment a = [&](int id) -> const MultiMap* { return id == hs ? &h : base(id); };
  return evaluate(parse_expr(text), a, s.complex, s.complex, arity, degree);
}

}  // namespace

void DeformationRetract::validate() const {
  if (!big || !small || !big->is_complex() || !small->is_complex())
    throw std::invalid_argument("retract: complexes are missing or not complexes");
  expect_map(p, big, small, 0, "p");
  expect_map(i, small, big, 0, "i");
  expect_map(h, big, big, 1, "h");
}

Report DeformationRetract::check() const {
  validate();
  Report rep;
  auto row = [&](const char* label, const MultiMap& m) { rep.push_back({label, "retract", m.is_zero(), m.first_nonzero()}); };
  row("p is a chain map", hom_differential(p));
  row("i is a chain map", hom_differential(i));
  row("id - i p = dh + hd", MultiMap::identity(big) - full_compose(i, {p}) - hom_differential(h));
  row("p i = id", full_compose(p, {i}) - MultiMap::identity(small));
  return rep;
}

bool DeformationRetract::side_conditions() const {
  validate();
  return full_compose(h, {h}).is_zero() && full_compose(h, {i}).is_zero() && full_compose(p, {h}).is_zero();
}

DeformationRetract DeformationRetract::trivial(const ComplexPtr& c) {
  return {c, c, MultiMap::identity(c), MultiMap::identity(c), MultiMap(c, c, 1, 1)};
}

DeformationRetract standard_retract(const ComplexPtr& big, std::array<int, 2> keep) {
  const Complex3& L = *big;
  // C[k]: complement of the cycles in degree k (k = 1, 2); B[k] = d(C[k+1]); H[k]: homology.
  std::array<QMatrix, 3> C, B, H, M, Minv;
  for (int k = 0; k < 3; ++k) C[k] = QMatrix(L.dim(k), 0);
  for (int k = 1; k < 3; ++k) {
    QMatrix d = L.d(k);
    std::vector<int> piv = rref(d);
    C[k] = columns(QMatrix::identity(L.dim(k)), piv);
  }
  for (int k = 0; k < 3; ++k) {
    B[k] = k < 2 ? L.d(k + 1) * C[k + 1] : QMatrix(L.dim(2), 0);
    QMatrix Z = k == 0 ? QMatrix::identity(L.dim(0)) : nullspace(L.d(k));
    H[k] = extend(B[k], Z);
  }
  for (int k = 0; k < 2; ++k)
    if (keep[k] < 0 || keep[k] > B[k].cols()) throw std::invalid_argument("standard_retract: too many kept pairs");
  std::array<std::vector<int>, 3> small_idx, dropB;
  std::array<int, 3> small_dims{};
  for (int k = 0; k < 3; ++k) {
    M[k] = hcat({H[k], B[k], C[k]}, L.dim(k));
    Minv[k] = *inverse(M[k]);
    int nh = H[k].cols(), nb = B[k].cols();
    int kb = k < 2 ? keep[k] : 0, kc = k > 0 ? keep[k - 1] : 0;
    small_idx[k] = range(0, nh + kb);
    for (int j = 0; j < kc; ++j) small_idx[k].push_back(nh + nb + j);
    dropB[k] = range(nh + kb, nh + nb);
    small_dims[k] = static_cast<int>(small_idx[k].size());
  }
  std::array<QMatrix, 3> ip, pp, hp;
  for (int k = 0; k < 3; ++k) {
    ip[k] = columns(M[k], small_idx[k]);
    pp[k] = rows_of(Minv[k], small_idx[k]);
  }
  for (int k = 0; k < 3; ++k) {
    if (k == 2) {
      hp[k] = QMatrix(0, L.dim(2));
      continue;
    }
    // b_j = d c_j  |->  c_j for the dropped pairs
    int nh = H[k + 1].cols(), nb = B[k + 1].cols();
    std::vector<int> cols_c;
    for (int j : dropB[k]) cols_c.push_back(nh + nb + (j - H[k].cols()));
    hp[k] = columns(M[k + 1], cols_c) * rows_of(Minv[k], dropB[k]);
  }
  QMatrix sd1 = pp[0] * L.d1 * ip[1], sd2 = pp[1] * L.d2 * ip[2];
  auto S = share(Complex3::make(small_dims, sd1, sd2));
  DeformationRetract r{big, S, MultiMap::linear(big, S, 0, pp), MultiMap::linear(S, big, 0, ip),
                       MultiMap::linear(big, big, 1, hp)};
  return r;
}

DeformationRetract perturb_homotopy(const DeformationRetract& r, const MultiMap& s) {
  if (s.arity() != 1 || s.degree() != 2 || !same(s.src(), r.big) || !same(s.tgt(), r.big))
    throw std::invalid_argument("perturb_homotopy: s must be a degree-2 endomorphism of the big complex");
  DeformationRetract out = r;
  out.h = r.h + hom_differential(s);
  return out;
}

const std::vector<TransferFormula>& transfer_formulas() {
  static const std::vector<TransferFormula> v = {
      {"l2", "htt:l2", "l2"},
      {"l3", "htt:l3", "l3 + l2 o1 (h o1 l2) - (l2 o2 (h o1 l2))^{1-(12)}"},
      {"l4", "htt:l4",
       "l4 - l2 o1 (h o1 l3) - (l2 o2 (h o1 l3))^{1-(12)+(123)} - l3 o1 (h o1 l2)"
       " + (l3 o2 (h o1 l2))^{1-(12)} - (l3 o3 (h o1 l2))^{1-(23)+(132)}"
       " - l2 o1 (h o1 l2) o1 (h o1 l2) + (l2 o1 (h o1 l2) o2 (h o1 l2))^{1-(12)}"
       " - (l2 o (h o1 l2, h o1 l2))^{1-(23)+(132)} - (l2 o2 (h o1 l2) o2 (h o1 l2))^{1-(12)+(123)}"
       " + (l2 o2 (h o1 l2) o3 (h o1 l2))^{1-(12)+(123)-(23)+(132)-(13)}"},
      {"l21", "htt:l21", "l21"},
      {"l211", "htt:l211", "l211"},
      {"l31", "htt:l31", "l31 - l2 o1 (h o1 l21)"},
      {"l32", "htt:l32", "l32 + l21 o1 (h o1 l2) + l2 o2 (h o1 l21) + (l21 o2 (h o1 l2))^(12)"},
  };
  return v;
}

const std::vector<TransferFormula>& inclusion_formulas() {
  static const std::vector<TransferFormula> v = {
      {"f2", "htt:i2", "-(h o1 l2)"},
      {"f3", "htt:i3", "-(h o1 l3) - h o1 (l2 o1 (h o1 l2)) + (h o1 (l2 o2 (h o1 l2)))^{1-(12)}"},
      {"f21", "htt:i21", "-(h o1 l21)"},
  };
  return v;
}

WeakLie3Structure transfer_structure(const WeakLie3Structure& s, const DeformationRetract& r) {
  return transfer_structure(s, r, transfer_formulas());
}

WeakMorphism build_inclusion(const WeakLie3Structure& s, const DeformationRetract& r) {
  return build_inclusion(s, r, transfer_formulas(), inclusion_formulas());
}

WeakLie3Structure transfer_structure(const WeakLie3Structure& s, const DeformationRetract& r,
                                     const std::vector<TransferFormula>& formulas) {
  s.validate();
  r.validate();
  if (!same(s.complex, r.big)) throw std::invalid_argument("transfer_structure: structure does not live on the big complex");
  WeakLie3Structure t;
  t.complex = r.small;
  for (auto& f : formulas) {
    const MultiMap& m = s[f.name];
    MultiMap inner = evaluate_text(f.text, s, r.h, m.arity(), m.degree());
    t.maps.emplace(f.name, full_compose(full_compose(r.p, {inner}), std::vector<MultiMap>(m.arity(), r.i)));
  }
  return t;
}

WeakMorphism build_inclusion(const WeakLie3Structure& s, const DeformationRetract& r,
                             const std::vector<TransferFormula>& structure_formulas,
                             const std::vector<TransferFormula>& components) {
  WeakMorphism f;
  f.source = transfer_structure(s, r, structure_formulas);
  f.target = s;
  f.maps.emplace("f1", r.i);
  for (auto& c : components) {
    int arity = c.name == "f3" ? 3 : 2, degree = c.name == "f2" ? 1 : 2;
    MultiMap inner = evaluate_text(c.text, s, r.h, arity, degree);
    f.maps.emplace(c.name, full_compose(inner, std::vector<MultiMap>(arity, r.i)));
  }
  return f;
}

}  // namespace lied
