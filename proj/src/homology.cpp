#include "lied/homology.hpp"

#include "lied/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace lied {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rs, int cols) {
  int c = cols >= 0 ? cols : (rs.empty() ? 0 : static_cast<int>(rs[0].size()));
  IntMatrix m(static_cast<int>(rs.size()), c);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rs[i].size()) != c) throw std::invalid_argument("IntMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rs[i][j];
  }
  return m;
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}

// row_i -= q row_j
void row_axpy(IntMatrix& m, int i, int j, const Int& q, int from) {
  for (int c = from; c < m.cols; ++c)
    if (m(j, c) != 0) m(i, c) -= q * m(j, c);
}

void col_axpy(IntMatrix& m, int i, int j, const Int& q, int from) {
  for (int r = from; r < m.rows; ++r)
    if (m(r, j) != 0) m(r, i) -= q * m(r, j);
}

}  // namespace

namespace {

// q = nearest integer to a / b, so that |a - q b| <= |b| / 2.
Int round_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) q += 1;  // r has the sign of b
  return q;
}

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix m) {
  std::vector<Int> out;
  const int R = m.rows, C = m.cols;
  for (int t = 0; t < std::min(R, C); ++t) {
    bool empty = false;
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      int pi = -1, pj = -1;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j)
          if (m(i, j) != 0 && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj)))) pi = i, pj = j;
      if (pi < 0) {
        empty = true;
        break;
      }
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);
      bool rest = false;
      for (int i = t + 1; i < R; ++i)
        if (m(i, t) != 0) {
          row_axpy(m, i, t, round_quotient(m(i, t), m(t, t)), t);
          rest = rest || m(i, t) != 0;
        }
      for (int j = t + 1; j < C; ++j)
        if (m(t, j) != 0) {
          col_axpy(m, j, t, round_quotient(m(t, j), m(t, t)), t);
          rest = rest || m(t, j) != 0;
        }
      if (rest) continue;
      int bad = -1;
      for (int i = t + 1; i < R && bad < 0; ++i)
        for (int j = t + 1; j < C; ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(m, t, bad, Int(-1), t);
    }
    if (empty) break;
    out.push_back(abs(m(t, t)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SparseMatrix::add(int r, int c, const Int& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("SparseMatrix: index");
  if (v == 0) return;
  auto [it, fresh] = col[c].emplace(r, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) col[c].erase(it);
  }
}

size_t SparseMatrix::nonzeros() const {
  size_t n = 0;
  for (auto& c : col) n += c.size();
  return n;
}

IntMatrix SparseMatrix::dense() const {
  IntMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (auto& [i, v] : col[j]) m(i, j) = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) s.add(i, j, m(i, j));
  return s;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("SparseMatrix: shape mismatch in product");
  SparseMatrix r(rows, o.cols);
  for (int j = 0; j < o.cols; ++j)
    for (auto& [k, v] : o.col[j])
      for (auto& [i, w] : col[k]) r.add(i, j, w * v);
  return r;
}

bool SparseMatrix::is_zero() const {
  for (auto& c : col)
    if (!c.empty()) return false;
  return true;
}

namespace {

struct Overflow {};

inline int64_t mul_checked(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline int64_t sub_checked(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Int mul_checked(const Int& a, const Int& b) { return a * b; }
inline Int sub_checked(const Int& a, const Int& b) { return a - b; }
inline bool is_unit(int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Int& v) { return v == 1 || v == -1; }
inline Int to_int(int64_t v) { return Int(static_cast<long>(v)); }
inline Int to_int(const Int& v) { return v; }

template <class T>
T from_int(const Int& v);
template <>
int64_t from_int<int64_t>(const Int& v) {
  if (!v.fits_slong_p()) throw Overflow{};
  return v.get_si();
}
template <>
Int from_int<Int>(const Int& v) {
  return v;
}

// Unit-pivot elimination; returns the number of unit pivots and leaves the
// residual block in `rest`.
template <class T>
int eliminate_units(const SparseMatrix& m, IntMatrix& rest) {
  using Row = std::vector<std::pair<int, T>>;
  std::vector<Row> rows(m.rows);
  std::vector<std::vector<int>> colrows(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (auto& [i, v] : m.col[j]) {
      rows[i].emplace_back(j, from_int<T>(v));
      colrows[j].push_back(i);
    }
  std::vector<char> alive(m.rows, 1), done(m.cols, 0);
  std::vector<int> stamp(m.rows, -1);
  auto entry = [&](int r, int c) -> const T* {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int k) { return e.first < k; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };
  std::vector<int> order(m.cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.col[a].size() < m.col[b].size(); });
  int pivots = 0, step = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c : order) {
      if (done[c]) continue;
      ++step;
      // live rows of column c, deduplicated
      std::vector<int> live;
      for (int r : colrows[c])
        if (alive[r] && stamp[r] != step && entry(r, c)) {
          stamp[r] = step;
          live.push_back(r);
        }
      colrows[c] = live;
      if (live.empty()) {
        done[c] = 1;
        continue;
      }
      int p = -1;
      for (int r : live)
        if (is_unit(*entry(r, c)) && (p < 0 || rows[r].size() < rows[p].size())) p = r;
      if (p < 0) continue;
      T pv = *entry(p, c);
      const Row& prow = rows[p];
      for (int r : live) {
        if (r == p) continue;
        T f = mul_checked(*entry(r, c), pv);  // pv = pv^{-1}
        Row merged;
        merged.reserve(rows[r].size() + prow.size());
        auto a = rows[r].begin(), ae = rows[r].end();
        auto b = prow.begin(), be = prow.end();
        while (a != ae || b != be) {
          if (b == be || (a != ae && a->first < b->first)) {
            merged.push_back(*a++);
          } else if (a == ae || b->first < a->first) {
            T v = sub_checked(T(0), mul_checked(f, b->second));
            merged.emplace_back(b->first, v);
            colrows[b->first].push_back(r);
            ++b;
          } else {
            T v = sub_checked(a->second, mul_checked(f, b->second));
            if (v != 0) merged.emplace_back(a->first, v);
            ++a, ++b;
          }
        }
        rows[r].swap(merged);
      }
      alive[p] = 0;
      done[c] = 1;
      ++pivots;
      progress = true;
    }
  }
  std::vector<int> rr, cc;
  std::vector<int> cpos(m.cols, -1);
  for (int r = 0; r < m.rows; ++r)
    if (alive[r] && !rows[r].empty()) rr.push_back(r);
  for (int r : rr)
    for (auto& [c, v] : rows[r])
      if (cpos[c] < 0) {
        cpos[c] = static_cast<int>(cc.size());
        cc.push_back(c);
      }
  rest = IntMatrix(static_cast<int>(rr.size()), static_cast<int>(cc.size()));
  for (size_t i = 0; i < rr.size(); ++i)
    for (auto& [c, v] : rows[rr[i]]) rest(static_cast<int>(i), cpos[c]) = to_int(v);
  return pivots;
}

}  // namespace

std::vector<Int> invariant_factors(const SparseMatrix& m) {
  IntMatrix rest;
  int units;
  try {
    units = eliminate_units<int64_t>(m, rest);
  } catch (const Overflow&) {
    units = eliminate_units<Int>(m, rest);
  }
  std::vector<Int> out(units, Int(1));
  auto tail = smith_normal_form(rest);
  out.insert(out.end(), tail.begin(), tail.end());
  std::sort(out.begin(), out.end());
  return out;
}

int rational_rank(const SparseMatrix& m) {
  QMatrix q(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (auto& [i, v] : m.col[j]) q(i, j) = Rat(v);
  return rank(q);
}

int IntegerComplex::dim(int r) const {
  auto it = dims.find(r);
  return it == dims.end() ? 0 : it->second;
}

bool IntegerComplex::is_complex(std::string* where) const {
  for (auto& [r, d] : boundary) {
    if (d.cols != dim(r) || d.rows != dim(r - 1))
      throw std::invalid_argument("boundary d_" + std::to_string(r) + " has the wrong shape");
    auto it = boundary.find(r - 1);
    if (it == boundary.end()) continue;
    if (!(it->second * d).is_zero()) {
      if (where) *where = "d_" + std::to_string(r - 1) + " d_" + std::to_string(r);
      return false;
    }
  }
  return true;
}

std::string HomologyGroup::str() const {
  std::string s;
  if (free_rank > 0) s = "Z" + (free_rank > 1 ? "^" + std::to_string(free_rank) : std::string());
  for (auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return s.empty() ? "0" : s;
}

namespace {

const SparseMatrix* boundary_of(const IntegerComplex& c, int r) {
  auto it = c.boundary.find(r);
  if (it == c.boundary.end()) return nullptr;
  if (it->second.cols != c.dim(r) || it->second.rows != c.dim(r - 1))
    throw std::invalid_argument("boundary d_" + std::to_string(r) + " has the wrong shape");
  return &it->second;
}

}  // namespace

std::map<int, HomologyGroup> homology_range(const IntegerComplex& c, int lo, int hi) {
  std::map<int, std::vector<Int>> factors;
  for (int r = lo; r <= hi + 1; ++r) {
    const SparseMatrix* d = boundary_of(c, r);
    factors[r] = d ? invariant_factors(*d) : std::vector<Int>{};
  }
  std::map<int, HomologyGroup> out;
  for (int r = lo; r <= hi; ++r) {
    HomologyGroup h;
    h.free_rank = c.dim(r) - static_cast<int>(factors[r].size()) - static_cast<int>(factors[r + 1].size());
    for (auto& f : factors[r + 1])
      if (f != 1) h.torsion.push_back(f);
    out[r] = h;
  }
  return out;
}

HomologyGroup homology(const IntegerComplex& c, int r) { return homology_range(c, r, r).at(r); }

int rational_betti(const IntegerComplex& c, int r) {
  const SparseMatrix* d = boundary_of(c, r);
  const SparseMatrix* e = boundary_of(c, r + 1);
  return c.dim(r) - (d ? rational_rank(*d) : 0) - (e ? rational_rank(*e) : 0);
}

}  // namespace lied
