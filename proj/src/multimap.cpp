#include "lied/multimap.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace lied {

namespace {

bool same(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

int dims_product(const Complex3& c, const std::vector<int>& p) {
  int n = 1;
  for (int x : p) n *= c.dim(x);
  return n;
}

// Digits of a row-major tensor index.
std::vector<int> decode(int idx, const Complex3& c, const std::vector<int>& p) {
  std::vector<int> a(p.size());
  for (size_t j = p.size(); j-- > 0;) {
    int d = c.dim(p[j]);
    a[j] = idx % d;
    idx /= d;
  }
  return a;
}

int encode(const std::vector<int>& a, const Complex3& c, const std::vector<int>& p) {
  int idx = 0;
  for (size_t j = 0; j < p.size(); ++j) idx = idx * c.dim(p[j]) + a[j];
  return idx;
}

int parity_sign(long x) { return (x & 1) ? -1 : 1; }

std::string tuple_str(const std::vector<int>& p) {
  std::string s = "(";
  for (size_t j = 0; j < p.size(); ++j) s += (j ? "," : "") + std::to_string(p[j]);
  return s + ")";
}

}  // namespace

Complex3 Complex3::make(std::array<int, 3> dims, QMatrix d1, QMatrix d2) {
  Complex3 c;
  c.dims = dims;
  c.d1 = d1.rows() == 0 && d1.cols() == 0 ? QMatrix(dims[0], dims[1]) : std::move(d1);
  c.d2 = d2.rows() == 0 && d2.cols() == 0 ? QMatrix(dims[1], dims[2]) : std::move(d2);
  if (!c.is_complex()) throw std::invalid_argument("Complex3: bad shapes or d^2 != 0");
  return c;
}

const QMatrix& Complex3::d(int p) const {
  if (p == 1) return d1;
  if (p == 2) return d2;
  throw std::out_of_range("Complex3::d: degree must be 1 or 2");
}

bool Complex3::is_complex() const {
  for (int x : dims)
    if (x < 0) return false;
  if (d1.rows() != dims[0] || d1.cols() != dims[1]) return false;
  if (d2.rows() != dims[1] || d2.cols() != dims[2]) return false;
  return (d1 * d2).is_zero();
}

ComplexPtr share(Complex3 c) { return std::make_shared<const Complex3>(std::move(c)); }

MultiMap::MultiMap(ComplexPtr src, ComplexPtr tgt, int arity, int degree)
    : src_(std::move(src)), tgt_(std::move(tgt)), arity_(arity), degree_(degree) {
  if (!src_ || !tgt_) throw std::invalid_argument("MultiMap: missing complex");
  if (arity < 1) throw std::invalid_argument("MultiMap: arity must be positive");
}

MultiMap MultiMap::identity(ComplexPtr c) {
  MultiMap m(c, c, 1, 0);
  for (int p = 0; p < 3; ++p) m.set_block({p}, QMatrix::identity(c->dim(p)));
  return m;
}

MultiMap MultiMap::linear(ComplexPtr src, ComplexPtr tgt, int degree, const std::array<QMatrix, 3>& parts) {
  MultiMap m(std::move(src), std::move(tgt), 1, degree);
  for (int p = 0; p < 3; ++p)
    if (m.in_window({p})) m.set_block({p}, parts[p]);
  return m;
}

bool MultiMap::in_window(const Degrees& p) const {
  if (static_cast<int>(p.size()) != arity_) return false;
  int s = degree_;
  for (int x : p) {
    if (x < 0 || x > 2) return false;
    s += x;
  }
  return s >= 0 && s <= 2;
}

std::vector<MultiMap::Degrees> MultiMap::tuples() const {
  std::vector<Degrees> out;
  Degrees p(arity_, 0);
  while (true) {
    if (in_window(p)) out.push_back(p);
    int j = arity_ - 1;
    while (j >= 0 && p[j] == 2) p[j--] = 0;
    if (j < 0) break;
    ++p[j];
  }
  return out;
}

int MultiMap::rows(const Degrees& p) const {
  return tgt_->dim(std::accumulate(p.begin(), p.end(), degree_));
}

int MultiMap::cols(const Degrees& p) const { return dims_product(*src_, p); }

QMatrix MultiMap::block(const Degrees& p) const {
  auto it = blocks_.find(p);
  if (it != blocks_.end()) return it->second;
  if (!in_window(p)) throw std::out_of_range("MultiMap: tuple " + tuple_str(p) + " outside the degree window");
  return QMatrix(rows(p), cols(p));
}

void MultiMap::set_block(const Degrees& p, QMatrix m) {
  if (!in_window(p)) throw std::out_of_range("MultiMap: tuple " + tuple_str(p) + " outside the degree window");
  if (m.rows() != rows(p) || m.cols() != cols(p))
    throw std::invalid_argument("MultiMap: block " + tuple_str(p) + " has the wrong shape");
  if (m.is_zero())
    blocks_.erase(p);
  else
    blocks_[p] = std::move(m);
}

void MultiMap::add_block(const Degrees& p, const QMatrix& m, const Rat& c) {
  if (c == 0 || m.is_zero()) return;
  auto it = blocks_.find(p);
  set_block(p, it == blocks_.end() ? m.scaled(c) : it->second + m.scaled(c));
}

QMatrix MultiMap::apply(const std::vector<std::pair<int, int>>& basis) const {
  Degrees p;
  std::vector<int> a;
  for (auto [deg, idx] : basis) {
    p.push_back(deg);
    a.push_back(idx);
  }
  if (!in_window(p)) {
    int s = std::accumulate(p.begin(), p.end(), degree_);
    return QMatrix(tgt_->dim(s), 1);
  }
  QMatrix b = block(p);
  int c = encode(a, *src_, p);
  QMatrix v(b.rows(), 1);
  for (int r = 0; r < b.rows(); ++r) v(r, 0) = b(r, c);
  return v;
}

void MultiMap::check_shape(const MultiMap& o, const char* what) const {
  if (arity_ != o.arity_ || degree_ != o.degree_ || !same(src_, o.src_) || !same(tgt_, o.tgt_))
    throw std::invalid_argument(std::string("MultiMap ") + what + ": shape mismatch");
}

void MultiMap::add(const MultiMap& o, const Rat& c) {
  check_shape(o, "add");
  for (auto& [p, m] : o.blocks_) add_block(p, m, c);
}

MultiMap MultiMap::operator+(const MultiMap& o) const {
  MultiMap r = *this;
  r.add(o);
  return r;
}

MultiMap MultiMap::operator-(const MultiMap& o) const {
  MultiMap r = *this;
  r.add(o, Rat(-1));
  return r;
}

MultiMap MultiMap::scaled(const Rat& k) const {
  MultiMap r(src_, tgt_, arity_, degree_);
  if (k == 0) return r;
  for (auto& [p, m] : blocks_) r.blocks_[p] = m.scaled(k);
  return r;
}

bool MultiMap::operator==(const MultiMap& o) const {
  return arity_ == o.arity_ && degree_ == o.degree_ && same(src_, o.src_) && same(tgt_, o.tgt_) &&
         blocks_ == o.blocks_;
}

std::string MultiMap::first_nonzero() const {
  for (auto& [p, m] : blocks_)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0)
          return "block " + tuple_str(p) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") = " + to_string(m(i, j));
  return "";
}

MultiMap act(const MultiMap& mu, const Perm& s) {
  int n = mu.arity();
  if (s.arity() != n) throw std::invalid_argument("act: arity mismatch");
  Perm inv = s.inverse();
  MultiMap r(mu.src(), mu.tgt(), n, mu.degree());
  const Complex3& L = *mu.src();
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = inv(j + 1) - 1;
  for (auto& p : r.tuples()) {
    MultiMap::Degrees q(n);
    for (int j = 0; j < n; ++j) q[j] = p[order[j]];
    auto it = mu.blocks().find(q);
    if (it == mu.blocks().end()) continue;
    const QMatrix& src = it->second;
    int sign = koszul_sign(p, order);
    QMatrix out(src.rows(), src.cols());
    std::vector<int> b(n);
    for (int c = 0; c < out.cols(); ++c) {
      auto a = decode(c, L, p);
      for (int j = 0; j < n; ++j) b[j] = a[order[j]];
      int c2 = encode(b, L, q);
      for (int row = 0; row < out.rows(); ++row) out(row, c) = sign > 0 ? src(row, c2) : Rat(-src(row, c2));
    }
    r.set_block(p, std::move(out));
  }
  return r;
}

MultiMap act(const MultiMap& mu, const GroupAlgebraElement& a) {
  if (a.arity() != mu.arity()) throw std::invalid_argument("act: arity mismatch");
  MultiMap r(mu.src(), mu.tgt(), mu.arity(), mu.degree());
  for (auto& [p, c] : a.terms()) r.add(act(mu, p), Rat(c));
  return r;
}

MultiMap alternate(const MultiMap& mu) {
  MultiMap r(mu.src(), mu.tgt(), mu.arity(), mu.degree());
  for (auto& s : all_perms(mu.arity())) r.add(act(mu, s), Rat(s.sign()));
  return r;
}

MultiMap hom_differential(const MultiMap& mu) {
  int n = mu.arity(), g = mu.degree();
  const Complex3 &L = *mu.src(), &T = *mu.tgt();
  MultiMap r(mu.src(), mu.tgt(), n, g - 1);
  for (auto& p : r.tuples()) {
    int out = std::accumulate(p.begin(), p.end(), g);  // degree of mu's output before d
    if (out >= 1 && out <= 2 && mu.in_window(p)) {
      auto it = mu.blocks().find(p);
      if (it != mu.blocks().end()) r.add_block(p, T.d(out) * it->second);
    }
    // - (-1)^g mu o d^{(x)n}
    int before = 0;
    for (int i = 0; i < n; ++i) {
      if (p[i] >= 1) {
        MultiMap::Degrees q = p;
        --q[i];
        auto it = mu.blocks().find(q);
        if (it != mu.blocks().end()) {
          const QMatrix& D = L.d(p[i]);
          const QMatrix& M = it->second;
          QMatrix term(M.rows(), r.cols(p));
          for (int c = 0; c < term.cols(); ++c) {
            auto a = decode(c, L, p);
            int ai = a[i];
            for (int b = 0; b < D.rows(); ++b) {
              if (D(b, ai) == 0) continue;
              a[i] = b;
              int c2 = encode(a, L, q);
              for (int row = 0; row < M.rows(); ++row) term(row, c) += D(b, ai) * M(row, c2);
            }
          }
          r.add_block(p, term, Rat(-parity_sign(g) * parity_sign(before)));
        }
      }
      before += p[i];
    }
  }
  return r;
}

MultiMap full_compose(const MultiMap& mu, const std::vector<MultiMap>& nus) {
  if (static_cast<int>(nus.size()) != mu.arity()) throw std::invalid_argument("full_compose: wrong number of inputs");
  if (nus.empty()) return mu;
  const ComplexPtr& bottom = nus[0].src();
  int n = 0, g = mu.degree();
  for (auto& nu : nus) {
    if (!same(nu.src(), bottom)) throw std::invalid_argument("full_compose: inputs with different sources");
    if (!same(nu.tgt(), mu.src())) throw std::invalid_argument("full_compose: input target is not the source");
    n += nu.arity();
    g += nu.degree();
  }
  const Complex3 &L = *bottom, &M = *mu.src();
  MultiMap r(bottom, mu.tgt(), n, g);
  size_t k = nus.size();
  for (auto& p : r.tuples()) {
    std::vector<MultiMap::Degrees> parts(k);
    MultiMap::Degrees q(k);
    int sign_parity = 0, seen = 0;
    bool zero = false;
    size_t off = 0;
    std::vector<const QMatrix*> nb(k);
    for (size_t j = 0; j < k && !zero; ++j) {
      parts[j].assign(p.begin() + off, p.begin() + off + nus[j].arity());
      off += nus[j].arity();
      int sj = std::accumulate(parts[j].begin(), parts[j].end(), 0);
      q[j] = sj + nus[j].degree();
      sign_parity ^= (nus[j].degree() * seen) & 1;
      seen += sj;
      if (!nus[j].in_window(parts[j])) {
        zero = true;
        break;
      }
      auto it = nus[j].blocks().find(parts[j]);
      if (it == nus[j].blocks().end()) zero = true;
      else nb[j] = &it->second;
    }
    if (zero || !mu.in_window(q)) continue;
    auto mit = mu.blocks().find(q);
    if (mit == mu.blocks().end()) continue;
    const QMatrix& mb = mit->second;
    QMatrix out(mb.rows(), r.cols(p));
    std::vector<int> inner(k);
    for (int c = 0; c < out.cols(); ++c) {
      auto a = decode(c, L, p);
      // sparse columns of each nu_j
      std::vector<std::vector<std::pair<int, Rat>>> vecs(k);
      bool vanish = false;
      size_t at = 0;
      for (size_t j = 0; j < k; ++j) {
        std::vector<int> aj(a.begin() + at, a.begin() + at + parts[j].size());
        at += parts[j].size();
        int cj = encode(aj, L, parts[j]);
        for (int row = 0; row < nb[j]->rows(); ++row)
          if ((*nb[j])(row, cj) != 0) vecs[j].emplace_back(row, (*nb[j])(row, cj));
        if (vecs[j].empty()) vanish = true;
      }
      if (vanish) continue;
      std::vector<size_t> pos(k, 0);
      while (true) {
        Rat coef = 1;
        for (size_t j = 0; j < k; ++j) {
          inner[j] = vecs[j][pos[j]].first;
          coef *= vecs[j][pos[j]].second;
        }
        int c2 = encode(inner, M, q);
        for (int row = 0; row < mb.rows(); ++row)
          if (mb(row, c2) != 0) out(row, c) += coef * mb(row, c2);
        size_t j = k;
        while (j-- > 0) {
          if (++pos[j] < vecs[j].size()) break;
          pos[j] = 0;
        }
        if (j == static_cast<size_t>(-1)) break;
      }
    }
    r.add_block(p, out, Rat(sign_parity ? -1 : 1));
  }
  return r;
}

MultiMap partial_compose(const MultiMap& mu, int i, const MultiMap& nu) {
  if (i < 1 || i > mu.arity()) throw std::out_of_range("partial_compose: slot out of range");
  if (!same(nu.src(), mu.src())) throw std::invalid_argument("partial_compose: sources differ");
  std::vector<MultiMap> nus(mu.arity(), MultiMap::identity(mu.src()));
  nus[i - 1] = nu;
  return full_compose(mu, nus);
}

namespace {

struct TreeEval {
  const Code& c;
  const Assignment& a;
  const ComplexPtr& bottom;
  size_t pos = 0;

  // nullopt when some vertex is assigned zero
  std::optional<MultiMap> vertex() {
    int x = c[pos++];
    if (x < 0) return MultiMap::identity(bottom);
    const MultiMap* m = a(x);
    int ar = gen(x).arity;
    std::vector<MultiMap> kids;
    bool zero = m == nullptr;
    for (int j = 0; j < ar; ++j) {
      auto k = vertex();
      if (!k) zero = true;
      else if (!zero) kids.push_back(std::move(*k));
    }
    if (zero) return std::nullopt;
    if (m->arity() != ar) throw std::invalid_argument("evaluate: arity mismatch at " + gen(x).display);
    return full_compose(*m, kids);
  }
};

}  // namespace

MultiMap evaluate(const QExpr& e, const Assignment& a, const ComplexPtr& bottom, const ComplexPtr& top, int arity,
                  int degree) {
  MultiMap r(bottom, top, arity, degree);
  for (auto& [code, k] : e.terms()) {
    if (code_arity(code) != arity) throw std::invalid_argument("evaluate: arity mismatch");
    TreeEval te{code, a, bottom};
    auto v = te.vertex();
    if (!v) continue;
    auto labels = leaf_labels(code);
    MultiMap w = act(*v, Perm(labels).inverse());
    if (w.degree() != degree) throw std::invalid_argument("evaluate: degree mismatch");
    r.add(w, k);
  }
  return r;
}

}  // namespace lied
