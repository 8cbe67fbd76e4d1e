#include "lied/matrix.hpp"

#include <stdexcept>

namespace lied {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  QMatrix m(static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) m(i, j) += x * o(k, j);
    }
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix m = *this;
  for (size_t t = 0; t < a_.size(); ++t) m.a_[t] += o.a_[t];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + o.scaled(-1); }

QMatrix QMatrix::scaled(const Rat& k) const {
  QMatrix m = *this;
  for (auto& x : m.a_) x *= k;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool QMatrix::is_zero() const {
  for (auto& x : a_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::kron(const QMatrix& o) const {
  QMatrix m(r_ * o.r_, c_ * o.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Rat& x = (*this)(i, j);
      if (x == 0) continue;
      for (int k = 0; k < o.r_; ++k)
        for (int l = 0; l < o.c_; ++l)
          if (o(k, l) != 0) m(i * o.r_ + k, j * o.c_ + l) = x * o(k, l);
    }
  return m;
}

std::vector<std::vector<Rat>> QMatrix::to_rows() const {
  std::vector<std::vector<Rat>> out(r_, std::vector<Rat>(c_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rat inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

QMatrix nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  QMatrix n(m.cols(), static_cast<int>(free.size()));
  for (size_t k = 0; k < free.size(); ++k) {
    n(free[k], static_cast<int>(k)) = 1;
    for (size_t i = 0; i < piv.size(); ++i) n(piv[i], static_cast<int>(k)) = -r(static_cast<int>(i), free[k]);
  }
  return n;
}

std::optional<QMatrix> solve(const QMatrix& m, const QMatrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve shape mismatch");
  QMatrix aug(m.rows(), m.cols() + b.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, m.cols() + j) = b(i, j);
  }
  auto piv = rref(aug);
  QMatrix x(m.cols(), b.cols());
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= m.cols()) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(static_cast<int>(i), m.cols() + j);
  }
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, QMatrix::identity(m.rows()));
}

std::string first_nonzero(const QMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + to_string(m(i, j));
  return "";
}

}  // namespace lied
