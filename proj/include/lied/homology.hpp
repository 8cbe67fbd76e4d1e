#pragma once

// Integer linear algebra for chain complexes of free abelian groups.

#include "lied/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace lied {

// Dense integer matrix (row-major).
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rs, int cols = -1);
  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Nonzero invariant factors d_1 | d_2 | ... (positive).
std::vector<Int> smith_normal_form(IntMatrix m);

// Sparse integer matrix stored by columns; entries (row, value).
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<std::map<int, Int>> col;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
  void add(int r, int c, const Int& v);
  size_t nonzeros() const;
  IntMatrix dense() const;
  static SparseMatrix from_dense(const IntMatrix& m);
  SparseMatrix operator*(const SparseMatrix& o) const;
  bool is_zero() const;
};

// Invariant factors of a sparse matrix: unit pivots are eliminated sparsely, the
// remaining block goes through the dense algorithm.
std::vector<Int> invariant_factors(const SparseMatrix& m);
int rational_rank(const SparseMatrix& m);  // independent dense computation over Q

struct IntegerComplex {
  std::map<int, int> dims;                 // degree -> rank of C_r
  std::map<int, SparseMatrix> boundary;    // r -> d_r : C_r -> C_{r-1}
  int dim(int r) const;
  // d_{r-1} d_r = 0 for every stored pair; throws on shape mismatch.
  bool is_complex(std::string* where = nullptr) const;
};

struct HomologyGroup {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
};

// Throws std::invalid_argument when the boundary matrices around r do not compose.
HomologyGroup homology(const IntegerComplex& c, int r);
// H_r for r in [lo, hi], factoring each boundary matrix once.
std::map<int, HomologyGroup> homology_range(const IntegerComplex& c, int lo, int hi);
// Betti number from rational ranks only.
int rational_betti(const IntegerComplex& c, int r);

}  // namespace lied
