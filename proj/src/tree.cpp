#include "lied/tree.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lied {

namespace {

constexpr size_t kMaxGenerators = 8192;

struct Registry {
  Registry() { table.reserve(kMaxGenerators); }
  std::mutex mu;
  std::vector<Generator> table;  // never reallocates
  std::atomic<size_t> count{0};
  std::unordered_map<std::string, int> by_name;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

int define_generator(const std::string& name, int arity, int degree, Symmetry sym,
                     const std::string& display) {
  if (arity < 1) throw std::invalid_argument("generator arity must be positive: " + name);
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.by_name.find(name); it != r.by_name.end()) {
    const auto& g = r.table[it->second];
    if (g.arity != arity || g.degree != degree || g.sym != sym)
      throw std::invalid_argument("conflicting redefinition of generator " + name);
    return it->second;
  }
  if (r.table.size() >= kMaxGenerators) throw std::length_error("generator table full");
  r.table.push_back({name, display.empty() ? name : display, arity, degree, sym});
  int id = static_cast<int>(r.table.size() - 1);
  r.by_name.emplace(name, id);
  r.count.store(r.table.size(), std::memory_order_release);
  return id;
}

std::optional<int> find_generator(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.by_name.find(name);
  if (it == r.by_name.end()) return std::nullopt;
  return it->second;
}

int gen_id(const std::string& name) {
  auto id = find_generator(name);
  if (!id) throw std::invalid_argument("unknown generator: " + name);
  return *id;
}

const Generator& gen(int id) {
  auto& r = registry();
  if (id < 0 || static_cast<size_t>(id) >= r.count.load(std::memory_order_acquire))
    throw std::out_of_range("bad generator id");
  return r.table[id];
}

int unit_generator() {
  static const int id = define_generator("1", 1, 0, Symmetry::Free, "1");
  return id;
}

size_t subtree_end(const Code& c, size_t pos) {
  size_t need = 1;
  while (need > 0) {
    if (pos >= c.size()) throw std::invalid_argument("truncated tree code");
    int x = c[pos++];
    --need;
    if (x >= 0) need += gen(x).arity;
  }
  return pos;
}

int code_arity(const Code& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](int x) { return x < 0; }));
}

int code_degree(const Code& c) {
  int d = 0;
  for (int x : c)
    if (x >= 0) d += gen(x).degree;
  return d;
}

int vertex_count(const Code& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](int x) { return x >= 0; }));
}

std::vector<int> leaf_labels(const Code& c) {
  std::vector<int> out;
  for (int x : c)
    if (x < 0) out.push_back(-x);
  return out;
}

namespace {

void write_code(const Code& c, size_t& pos, std::string& out) {
  int x = c[pos++];
  if (x < 0) {
    out += std::to_string(-x);
    return;
  }
  const auto& g = gen(x);
  out += g.display;
  out += '(';
  for (int j = 0; j < g.arity; ++j) {
    if (j) out += ',';
    write_code(c, pos, out);
  }
  out += ')';
}

struct CanonResult {
  Code code;
  int min_label;
  int degree;
};

CanonResult canon_rec(const Code& c, size_t& pos, int& sign) {
  int x = c[pos++];
  if (x < 0) return {{x}, -x, 0};
  const auto& g = gen(x);
  std::vector<CanonResult> kids;
  kids.reserve(g.arity);
  for (int j = 0; j < g.arity; ++j) kids.push_back(canon_rec(c, pos, sign));
  CanonResult res{{x}, 0, g.degree};
  if (g.sym != Symmetry::Free) {
    std::vector<int> order(kids.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return kids[a].min_label < kids[b].min_label; });
    std::vector<int> degs;
    for (auto& k : kids) degs.push_back(k.degree);
    sign *= koszul_sign(degs, order);
    if (g.sym == Symmetry::Sign) {
      std::vector<int> img;
      for (int o : order) img.push_back(o + 1);
      sign *= Perm(img).sign();
    }
    std::vector<CanonResult> sorted;
    for (int o : order) sorted.push_back(std::move(kids[o]));
    kids = std::move(sorted);
  }
  res.min_label = kids.empty() ? 0 : kids[0].min_label;
  for (auto& k : kids) {
    res.code.insert(res.code.end(), k.code.begin(), k.code.end());
    res.min_label = std::min(res.min_label, k.min_label);
    res.degree += k.degree;
  }
  return res;
}

}  // namespace

std::string code_str(const Code& c) {
  std::string out;
  size_t pos = 0;
  while (pos < c.size()) {
    if (pos) out += ' ';
    write_code(c, pos, out);
  }
  return out;
}

std::string composite_str(const Code& c) {
  if (c.empty() || c[0] < 0) return code_str(c);
  const auto& g = gen(c[0]);
  std::string out = g.display;
  size_t pos = 1;
  std::string inner;
  for (int j = 0; j < g.arity; ++j) {
    if (j) inner += ',';
    int x = c[pos];
    if (x < 0) {
      inner += "1";
      ++pos;
      continue;
    }
    size_t end = subtree_end(c, pos);
    bool flat = true;
    for (size_t t = pos + 1; t < end; ++t)
      if (c[t] >= 0) flat = false;
    if (!flat) return code_str(c);
    inner += gen(x).display;
    pos = end;
  }
  if (std::any_of(c.begin() + 1, c.end(), [](int x) { return x >= 0; })) out += "∘(" + inner + ")";
  std::vector<int> labels = leaf_labels(c);
  Perm s = Perm(labels).inverse();
  if (!s.is_identity()) out += "^" + s.cycles();
  return out;
}

int canonicalize(Code& c) {
  bool any = false;
  for (int x : c)
    if (x >= 0 && gen(x).sym != Symmetry::Free) any = true;
  if (!any) return 1;
  int sign = 1;
  size_t pos = 0;
  auto r = canon_rec(c, pos, sign);
  c = std::move(r.code);
  return sign;
}

// ---- Expr ----

template <class K>
Expr<K> Expr<K>::gen(int id, K c) {
  Code code{id};
  int n = lied::gen(id).arity;
  for (int j = 1; j <= n; ++j) code.push_back(-j);
  Expr e;
  e.add_canonical(code, c);
  return e;
}

template <class K>
Expr<K> Expr<K>::gen(const std::string& name, K c) {
  return gen(gen_id(name), std::move(c));
}

template <class K>
Expr<K> Expr<K>::leaf(K c) {
  Expr e;
  e.add_canonical(Code{-1}, c);
  return e;
}

template <class K>
Expr<K> Expr<K>::mono(Code code, K c) {
  Expr e;
  e.add(code, c);
  return e;
}

template <class K>
int Expr<K>::arity() const {
  return terms_.empty() ? -1 : code_arity(terms_.begin()->first);
}

template <class K>
int Expr<K>::degree() const {
  if (terms_.empty()) return -1000;
  int d = code_degree(terms_.begin()->first);
  for (auto& [c, k] : terms_)
    if (code_degree(c) != d) return -1000;
  return d;
}

template <class K>
void Expr<K>::add_canonical(const Code& c, const K& k) {
  if (k == 0) return;
  auto [it, fresh] = terms_.try_emplace(c, k);
  if (!fresh) {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

template <class K>
void Expr<K>::add(const Code& c, const K& k) {
  if (k == 0) return;
  Code cc = c;
  int s = canonicalize(cc);
  if (s == 0) return;
  add_canonical(cc, s > 0 ? k : K(-k));
}

template <class K>
void Expr<K>::add(const Expr& e, const K& k) {
  if (k == 0) return;
  for (auto& [c, v] : e.terms_) add_canonical(c, K(v * k));
}

template <class K>
Expr<K> Expr<K>::operator+(const Expr& o) const {
  Expr r = *this;
  r.add(o);
  return r;
}

template <class K>
Expr<K> Expr<K>::operator-(const Expr& o) const {
  Expr r = *this;
  r.add(o, K(-1));
  return r;
}

template <class K>
Expr<K> Expr<K>::operator-() const {
  Expr r;
  r.add(*this, K(-1));
  return r;
}

template <class K>
Expr<K> Expr<K>::scaled(const K& k) const {
  Expr r;
  r.add(*this, k);
  return r;
}

template <class K>
std::string Expr<K>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [c, k] : terms_) {
    bool neg = k < 0;
    K a = neg ? K(-k) : k;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1) out += to_string(a) + " ";
    out += composite_str(c);
    first = false;
  }
  return out;
}

QExpr to_rational(const IExpr& e) {
  QExpr r;
  for (auto& [c, k] : e.terms()) r.add_canonical(c, Rat(k));
  return r;
}

IExpr to_integral(const QExpr& e) {
  IExpr r;
  for (auto& [c, k] : e.terms()) {
    if (k.get_den() != 1) throw std::domain_error("non-integral coefficient " + to_string(k));
    r.add_canonical(c, k.get_num());
  }
  return r;
}

// ---- operations ----

template <class K>
Expr<K> act(const Expr<K>& e, const Perm& p) {
  Perm inv = p.inverse();
  Expr<K> r;
  for (auto& [c, k] : e.terms()) {
    if (p.arity() != code_arity(c)) throw std::invalid_argument("action arity mismatch");
    Code cc = c;
    for (int& x : cc)
      if (x < 0) x = -inv(-x);
    r.add(cc, k);
  }
  return r;
}

template <class K>
Expr<K> act(const Expr<K>& e, const GroupAlgebraElement& a) {
  Expr<K> r;
  for (auto& [p, c] : a.terms()) r.add(act(e, p), K(c));
  return r;
}

template <class K>
Expr<K> alternate(const Expr<K>& e) {
  Expr<K> r;
  if (e.is_zero()) return r;
  for (const auto& p : all_perms(e.arity())) r.add(act(e, p), K(p.sign()));
  return r;
}

template <class K>
Expr<K> partial(const Expr<K>& a, int i, const Expr<K>& b) {
  Expr<K> r;
  for (auto& [ca, ka] : a.terms()) {
    int n = code_arity(ca);
    if (i < 1 || i > n) throw std::invalid_argument("partial composition index out of range");
    size_t q = std::find(ca.begin(), ca.end(), -i) - ca.begin();
    int after = 0;
    for (size_t t = q + 1; t < ca.size(); ++t)
      if (ca[t] >= 0) after += gen(ca[t]).degree;
    for (auto& [cb, kb] : b.terms()) {
      int k = code_arity(cb);
      int sign = ((code_degree(cb) * after) & 1) ? -1 : 1;
      Code out;
      out.reserve(ca.size() + cb.size());
      for (size_t t = 0; t < ca.size(); ++t) {
        int x = ca[t];
        if (t == q) {
          for (int y : cb) out.push_back(y < 0 ? y - (i - 1) : y);
        } else if (x < 0 && -x > i) {
          out.push_back(x - (k - 1));
        } else {
          out.push_back(x);
        }
      }
      K coef = ka * kb;
      r.add(out, sign > 0 ? coef : K(-coef));
    }
  }
  return r;
}

template <class K>
Expr<K> full(const Expr<K>& a, const std::vector<Expr<K>>& bs) {
  Expr<K> r = a;
  int pos = 1;
  for (const auto& b : bs) {
    if (b.is_zero()) return {};
    r = partial(r, pos, b);
    pos += b.arity();
  }
  return r;
}

namespace {

// Substitutes the vertex at code position pos by the expression img.
template <class K>
void substitute_at(const Code& c, const K& coef, size_t pos, const Expr<K>& img,
                   std::vector<std::pair<Code, K>>& out) {
  const auto& g = gen(c[pos]);
  std::vector<std::pair<size_t, size_t>> kids;
  std::vector<int> kid_deg;
  size_t p = pos + 1;
  for (int j = 0; j < g.arity; ++j) {
    size_t e = subtree_end(c, p);
    kids.emplace_back(p, e);
    int d = 0;
    for (size_t t = p; t < e; ++t)
      if (c[t] >= 0) d += gen(c[t]).degree;
    kid_deg.push_back(d);
    p = e;
  }
  size_t end = p;
  for (auto& [rc, rk] : img.terms()) {
    if (code_arity(rc) != g.arity) throw std::invalid_argument("substitution arity mismatch");
    Code nc(c.begin(), c.begin() + pos);
    int parity = 0;
    int seen = 0;  // sum of block degrees of leaves seen so far
    std::vector<int> seen_leaves;
    for (int x : rc) {
      if (x >= 0) {
        parity ^= (gen(x).degree * seen) & 1;
        nc.push_back(x);
      } else {
        int j = -x - 1;
        for (int s : seen_leaves)
          if (s > j) parity ^= (kid_deg[s] * kid_deg[j]) & 1;
        seen_leaves.push_back(j);
        seen += kid_deg[j];
        nc.insert(nc.end(), c.begin() + kids[j].first, c.begin() + kids[j].second);
      }
    }
    nc.insert(nc.end(), c.begin() + end, c.end());
    K k = coef * rk;
    out.emplace_back(std::move(nc), parity ? K(-k) : k);
  }
}

}  // namespace

template <class K>
Expr<K> replace_vertices(const Code& c, const K& coef, const std::vector<const Expr<K>*>& images,
                         const std::vector<int>& map_degrees) {
  std::vector<size_t> vpos;
  std::vector<int> vdeg;
  for (size_t t = 0; t < c.size(); ++t)
    if (c[t] >= 0) {
      vpos.push_back(t);
      vdeg.push_back(gen(c[t]).degree);
    }
  if (images.size() != vpos.size() || map_degrees.size() != vpos.size())
    throw std::invalid_argument("replace_vertices: one image per vertex required");
  int parity = 0;
  int before = 0;
  for (size_t v = 0; v < vpos.size(); ++v) {
    if (images[v]) parity ^= (map_degrees[v] * before) & 1;
    before += vdeg[v];
  }
  std::vector<std::pair<Code, K>> cur{{c, parity ? K(-coef) : coef}};
  for (size_t v = vpos.size(); v-- > 0;) {
    if (!images[v]) continue;
    std::vector<std::pair<Code, K>> next;
    for (auto& [cc, kk] : cur) substitute_at(cc, kk, vpos[v], *images[v], next);
    cur = std::move(next);
    if (cur.empty()) break;
  }
  Expr<K> r;
  for (auto& [cc, kk] : cur) r.add(cc, kk);
  return r;
}

template <class K>
Expr<K> map_generators(const Expr<K>& e, const std::function<const Expr<K>*(int)>& f) {
  Expr<K> r;
  for (auto& [c, k] : e.terms()) {
    std::vector<const Expr<K>*> imgs;
    for (int x : c)
      if (x >= 0) imgs.push_back(f(x));
    std::vector<int> degs(imgs.size(), 0);
    r.add(replace_vertices(c, k, imgs, degs));
  }
  return r;
}

template <class K>
Expr<K> apply_derivation(const Expr<K>& e, const std::function<const Expr<K>*(int)>& f, int degree) {
  Expr<K> r;
  for (auto& [c, k] : e.terms()) {
    std::vector<int> ids;
    for (int x : c)
      if (x >= 0) ids.push_back(x);
    std::vector<int> degs(ids.size(), degree);
    for (size_t v = 0; v < ids.size(); ++v) {
      const Expr<K>* img = f(ids[v]);
      if (!img || img->is_zero()) continue;
      std::vector<const Expr<K>*> imgs(ids.size(), nullptr);
      imgs[v] = img;
      r.add(replace_vertices(c, k, imgs, degs));
    }
  }
  return r;
}

#define LIED_INSTANTIATE(K)                                                                        \
  template class Expr<K>;                                                                          \
  template Expr<K> act(const Expr<K>&, const Perm&);                                               \
  template Expr<K> act(const Expr<K>&, const GroupAlgebraElement&);                                \
  template Expr<K> alternate(const Expr<K>&);                                                      \
  template Expr<K> partial(const Expr<K>&, int, const Expr<K>&);                                   \
  template Expr<K> full(const Expr<K>&, const std::vector<Expr<K>>&);                              \
  template Expr<K> replace_vertices(const Code&, const K&, const std::vector<const Expr<K>*>&,     \
                                    const std::vector<int>&);                                      \
  template Expr<K> map_generators(const Expr<K>&, const std::function<const Expr<K>*(int)>&);      \
  template Expr<K> apply_derivation(const Expr<K>&, const std::function<const Expr<K>*(int)>&, int);

LIED_INSTANTIATE(Int)
LIED_INSTANTIATE(Rat)

#undef LIED_INSTANTIATE

}  // namespace lied
