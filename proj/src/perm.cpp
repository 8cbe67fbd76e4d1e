#include "lied/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace lied {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > arity() || seen[v]) throw std::invalid_argument("not a permutation: " + one_line());
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::parse(const std::string& s, int n) {
  std::string t;
  for (char c : s)
    if (c != ' ' || !t.empty()) t.push_back(c);
  while (!t.empty() && t.back() == ' ') t.pop_back();
  if (t.empty() || t == "id" || t == "1" || t == "()") return identity(n);
  Perm result = identity(n);
  // cycles are composed right to left, like the product of group elements
  std::vector<std::vector<int>> cycles;
  size_t k = 0;
  while (k < t.size()) {
    if (t[k] == ' ') {
      ++k;
      continue;
    }
    if (t[k] != '(') throw std::invalid_argument("bad cycle notation: " + s);
    auto close = t.find(')', k);
    if (close == std::string::npos) throw std::invalid_argument("unclosed cycle: " + s);
    std::string body = t.substr(k + 1, close - k - 1);
    std::vector<int> cyc;
    bool separated = body.find_first_of(" ,") != std::string::npos;
    if (separated) {
      size_t j = 0;
      while (j < body.size()) {
        while (j < body.size() && (body[j] == ' ' || body[j] == ',')) ++j;
        size_t e = j;
        while (e < body.size() && std::isdigit(static_cast<unsigned char>(body[e]))) ++e;
        if (e == j) {
          if (j < body.size()) throw std::invalid_argument("bad cycle entry: " + s);
          break;
        }
        cyc.push_back(std::stoi(body.substr(j, e - j)));
        j = e;
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad cycle entry: " + s);
        cyc.push_back(c - '0');
      }
    }
    for (int v : cyc)
      if (v < 1 || v > n) throw std::invalid_argument("cycle point out of range: " + s);
    cycles.push_back(cyc);
    k = close + 1;
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    const auto& c = *it;
    for (size_t j = 0; j < c.size(); ++j) img[c[j] - 1] = c[(j + 1) % c.size()];
    result = Perm(img) * result;
  }
  return result;
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < arity(); ++i) v[img_[i] - 1] = i + 1;
  Perm p;
  p.img_ = std::move(v);
  return p;
}

int Perm::sign() const {
  int s = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < arity(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j] - 1) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Perm::is_identity() const {
  for (int i = 0; i < arity(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  bool wide = arity() > 9;
  for (int i = 0; i < arity(); ++i) {
    if (seen[i] || img_[i] == i + 1) continue;
    out += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j] - 1) {
      seen[j] = 1;
      if (wide && !first) out += " ";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

std::string Perm::one_line() const {
  std::string out = "[";
  for (int i = 0; i < arity(); ++i) {
    if (i) out += ",";
    out += std::to_string(img_[i]);
  }
  return out + "]";
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.arity() != q.arity()) throw std::invalid_argument("arity mismatch in composition");
  std::vector<int> v(q.arity());
  for (int i = 0; i < q.arity(); ++i) v[i] = p.img_[q.img_[i] - 1];
  Perm r;
  r.img_ = std::move(v);
  return r;
}

Perm compose(const Perm& p, const Perm& q) { return p * q; }

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

static std::vector<int> block_ends(const std::vector<int>& blocks) {
  std::vector<int> ends;
  int s = 0;
  for (int b : blocks) {
    if (b < 0) throw std::invalid_argument("negative block size");
    s += b;
    ends.push_back(s);
  }
  return ends;
}

bool is_shuffle(const Perm& p, const std::vector<int>& blocks) {
  auto ends = block_ends(blocks);
  if (ends.empty() || ends.back() != p.arity()) return false;
  for (int i = 1; i < p.arity(); ++i) {
    if (std::find(ends.begin(), ends.end(), i) != ends.end()) continue;
    if (p(i) > p(i + 1)) return false;
  }
  return true;
}

bool is_reduced_shuffle(const Perm& p, const std::vector<int>& blocks) {
  if (!is_shuffle(p, blocks)) return false;
  auto ends = block_ends(blocks);
  for (size_t j = 0; j + 1 < ends.size(); ++j) {
    if (blocks[j] == 0 || blocks[j + 1] == 0) continue;
    if (p(ends[j]) > p(ends[j + 1])) return false;
  }
  return true;
}

// Shuffles are enumerated directly: choose which values go to each block, in order.
static void shuffle_rec(const std::vector<int>& blocks, size_t b, std::vector<int>& avail, std::vector<int>& img,
                        std::vector<Perm>& out) {
  if (b == blocks.size()) {
    out.emplace_back(img);
    return;
  }
  int k = blocks[b];
  int m = static_cast<int>(avail.size());
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  // iterate subsets of size k in lexicographic order of their indicator
  std::vector<std::vector<int>> subsets;
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> chosen, rest;
    for (int i = 0; i < m; ++i) (pick[i] ? chosen : rest).push_back(avail[i]);
    subsets.push_back(chosen);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(subsets.begin(), subsets.end());
  for (const auto& chosen : subsets) {
    std::vector<int> rest;
    for (int v : avail)
      if (!std::binary_search(chosen.begin(), chosen.end(), v)) rest.push_back(v);
    size_t old = img.size();
    img.insert(img.end(), chosen.begin(), chosen.end());
    shuffle_rec(blocks, b + 1, rest, img, out);
    img.resize(old);
  }
}

std::vector<Perm> shuffles(const std::vector<int>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("shuffles: empty block list");
  int n = 0;
  for (int b : blocks) n += b;
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> img;
  std::vector<Perm> out;
  shuffle_rec(blocks, 0, avail, img, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> reduced_shuffles(const std::vector<int>& blocks) {
  std::vector<Perm> out;
  for (auto& p : shuffles(blocks))
    if (is_reduced_shuffle(p, blocks)) out.push_back(p);
  return out;
}

std::vector<Perm> unshuffles(const std::vector<int>& blocks) {
  std::vector<Perm> out;
  for (auto& p : shuffles(blocks)) out.push_back(p.inverse());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> reduced_unshuffles(const std::vector<int>& blocks) {
  std::vector<Perm> out;
  for (auto& p : reduced_shuffles(blocks)) out.push_back(p.inverse());
  std::sort(out.begin(), out.end());
  return out;
}

int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& order) {
  // count inversions between odd elements
  int s = 0;
  for (size_t a = 0; a < order.size(); ++a) {
    if ((degrees[order[a]] & 1) == 0) continue;
    for (size_t b = a + 1; b < order.size(); ++b)
      if ((degrees[order[b]] & 1) && order[b] < order[a]) s ^= 1;
  }
  return s ? -1 : 1;
}

GroupAlgebraElement GroupAlgebraElement::from_perm(const Perm& p, Int c) {
  GroupAlgebraElement e(p.arity());
  e.add(p, c);
  return e;
}

void GroupAlgebraElement::add(const Perm& p, const Int& c) {
  if (p.arity() != n_) throw std::invalid_argument("group algebra arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupAlgebraElement GroupAlgebraElement::parse(const std::string& s, int n) {
  GroupAlgebraElement e(n);
  size_t k = 0;
  auto skip = [&] {
    while (k < s.size() && s[k] == ' ') ++k;
  };
  skip();
  if (k == s.size()) throw std::invalid_argument("empty group algebra element");
  while (k < s.size()) {
    int sg = 1;
    skip();
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
      if (s[k] == '-') sg = -1;
      ++k;
      skip();
    }
    Int coef = 1;
    size_t st = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    bool had_digits = k > st;
    if (had_digits) coef = Int(s.substr(st, k - st));
    skip();
    if (k < s.size() && s[k] == '*') {
      ++k;
      skip();
    }
    Perm p = Perm::identity(n);
    if (k < s.size() && s[k] == '(') {
      size_t e2 = k;
      while (e2 < s.size() && s[e2] == '(') {
        auto c = s.find(')', e2);
        if (c == std::string::npos) throw std::invalid_argument("unclosed cycle in " + s);
        e2 = c + 1;
      }
      p = Perm::parse(s.substr(k, e2 - k), n);
      k = e2;
    } else if (s.compare(k, 2, "id") == 0) {
      k += 2;
    } else if (!had_digits) {
      throw std::invalid_argument("bad group algebra term in " + s);
    }
    e.add(p, coef * sg);
    skip();
  }
  return e;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  for (auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const { return *this + (-o); }

GroupAlgebraElement GroupAlgebraElement::operator-() const { return scaled(-1); }

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r(n_);
  for (auto& [p, c] : terms_)
    for (auto& [q, d] : o.terms_) r.add(p * q, c * d);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Int& c) const {
  GroupAlgebraElement r(n_);
  for (auto& [p, d] : terms_) r.add(p, c * d);
  return r;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [p, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Int a = abs(c);
    if (a != 1) out += a.get_str();
    out += p.cycles();
  }
  return out;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int multinomial(const std::vector<int>& blocks) {
  int n = 0;
  Int d = 1;
  for (int b : blocks) {
    n += b;
    d *= factorial(b);
  }
  return factorial(n) / d;
}

}  // namespace lied
