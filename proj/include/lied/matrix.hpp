#pragma once

#include "lied/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lied {

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows, int cols = -1);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rat& k) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const QMatrix& o) const = default;

  // Kronecker product, row-major tensor index.
  QMatrix kron(const QMatrix& o) const;

  std::vector<std::vector<Rat>> to_rows() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

int rank(QMatrix m);
// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m);
// Basis of the right null space, as columns of the result.
QMatrix nullspace(const QMatrix& m);
// Some x with m x = b, if one exists.
std::optional<QMatrix> solve(const QMatrix& m, const QMatrix& b);
std::optional<QMatrix> inverse(const QMatrix& m);

// Position and value of the first nonzero entry, for residual reports.
std::string first_nonzero(const QMatrix& m);

}  // namespace lied
