#include "lied/lie.hpp"

#include "lied/tree.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace lied {

AssWord AssWord::letter(int i) { return word({i}); }

AssWord AssWord::word(const Word& w, Int c) {
  AssWord a;
  a.add(w, c);
  return a;
}

int AssWord::arity() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }

void AssWord::add(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AssWord::add(const AssWord& o, const Int& c) {
  for (auto& [w, k] : o.terms_) add(w, k * c);
}

AssWord AssWord::operator+(const AssWord& o) const {
  AssWord r = *this;
  r.add(o);
  return r;
}

AssWord AssWord::operator-(const AssWord& o) const {
  AssWord r = *this;
  r.add(o, -1);
  return r;
}

AssWord AssWord::operator-() const { return scaled(-1); }

AssWord AssWord::scaled(const Int& c) const {
  AssWord r;
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [w, k] : r.terms_) k *= c;
  return r;
}

AssWord AssWord::operator*(const AssWord& o) const {
  AssWord r;
  for (auto& [u, a] : terms_)
    for (auto& [v, b] : o.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, a * b);
    }
  return r;
}

std::string AssWord::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, k] : terms_) {
    if (k < 0)
      s += first ? "-" : " - ";
    else if (!first)
      s += " + ";
    Int a = abs(k);
    if (a != 1) s += a.get_str();
    for (int l : w) s += "x" + std::to_string(l);
    first = false;
  }
  return s;
}

AssWord bracket(const AssWord& a, const AssWord& b) { return a * b - b * a; }

namespace {

struct BracketParser {
  const std::string& s;
  size_t p = 0;
  std::vector<int> seen;

  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  AssWord parse() {
    ws();
    if (p >= s.size()) throw std::invalid_argument("bracket: unexpected end");
    if (s[p] == '[') {
      ++p;
      AssWord a = parse();
      ws();
      if (p >= s.size() || s[p] != ',') throw std::invalid_argument("bracket: expected ','");
      ++p;
      AssWord b = parse();
      ws();
      if (p >= s.size() || s[p] != ']') throw std::invalid_argument("bracket: expected ']'");
      ++p;
      return bracket(a, b);
    }
    if (s[p] == 'x') ++p;
    size_t q = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (q == p) throw std::invalid_argument("bracket: expected a letter at " + std::to_string(q));
    int l = std::stoi(s.substr(q, p - q));
    if (l < 1 || std::find(seen.begin(), seen.end(), l) != seen.end())
      throw std::invalid_argument("bracket: letters must be distinct and positive");
    seen.push_back(l);
    return AssWord::letter(l);
  }
};

}  // namespace

AssWord expand_bracket(const std::string& tree) {
  BracketParser bp{tree};
  AssWord a = bp.parse();
  bp.ws();
  if (bp.p != tree.size()) throw std::invalid_argument("bracket: trailing input");
  return a;
}

AssWord act(const AssWord& w, const Perm& p) {
  Perm inv = p.inverse();
  AssWord r;
  for (auto& [u, k] : w.terms()) {
    Word v(u.size());
    for (size_t j = 0; j < u.size(); ++j) v[j] = inv(u[j]);
    r.add(v, k);
  }
  return r;
}

AssWord left_comb(const Word& w) {
  if (w.empty()) throw std::invalid_argument("left_comb: empty word");
  AssWord a = AssWord::letter(w[0]);
  for (size_t j = 1; j < w.size(); ++j) a = bracket(a, AssWord::letter(w[j]));
  return a;
}

std::vector<Word> lie_basis_words(int n) {
  if (n < 1) throw std::invalid_argument("lie_basis: arity must be positive");
  std::vector<Word> out;
  Word tail(n - 1);
  std::iota(tail.begin(), tail.end(), 2);
  do {
    Word w{1};
    w.insert(w.end(), tail.begin(), tail.end());
    out.push_back(w);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

std::vector<AssWord> lie_basis(int n) {
  static std::mutex m;
  static std::map<int, std::vector<AssWord>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<AssWord> out;
  for (const auto& w : lie_basis_words(n)) out.push_back(left_comb(w));
  cache.emplace(n, out);
  return out;
}

// The word x_m w with m the least letter occurs in a left-normed bracket [x_m, ...]
// only as its own leading word, so the coordinates are the coefficients of the
// words that start with m.
std::optional<std::map<Word, Int>> lie_coordinates(const AssWord& w) {
  std::map<Word, Int> coords;
  if (w.is_zero()) return coords;
  int m = *std::min_element(w.terms().begin()->first.begin(), w.terms().begin()->first.end());
  for (auto& [u, k] : w.terms())
    if (!u.empty() && u[0] == m) coords.emplace(u, k);
  AssWord back;
  for (auto& [u, k] : coords) back.add(left_comb(u), k);
  if (back != w) return std::nullopt;
  return coords;
}

bool is_lie(const AssWord& w) { return lie_coordinates(w).has_value(); }

AssWord lie_compose(const AssWord& a, int i, const AssWord& b) {
  int m = a.arity(), k = b.arity();
  if (a.is_zero() || b.is_zero()) return {};
  if (i < 1 || i > m) throw std::out_of_range("lie_compose: slot out of range");
  AssWord r;
  for (auto& [u, x] : a.terms())
    for (auto& [v, y] : b.terms()) {
      Word w;
      w.reserve(m + k - 1);
      for (int l : u) {
        if (l == i) {
          for (int t : v) w.push_back(t + i - 1);
        } else {
          w.push_back(l > i ? l + k - 1 : l);
        }
      }
      r.add(w, x * y);
    }
  return r;
}

AssWord kappa_psi(int generator, const Perm& p) {
  auto mu2 = find_generator("mu2");
  if (!mu2 || generator != *mu2) return {};
  return act(expand_bracket("[1,2]"), p);
}

}  // namespace lied
