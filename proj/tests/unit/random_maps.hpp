#pragma once

#include "lied/multimap.hpp"

#include <random>

namespace testutil {

using namespace lied;

inline Rat small_rat(std::mt19937& rng, int range = 2) {
  int v = static_cast<int>(rng() % (2 * range + 1)) - range;
  return Rat(v);
}

inline QMatrix random_matrix(std::mt19937& rng, int r, int c, int range = 2) {
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = small_rat(rng, range);
  return m;
}

// Random 3-term complex with the given dimensions and d1 d2 = 0.
inline ComplexPtr random_complex(std::mt19937& rng, std::array<int, 3> dims) {
  QMatrix d2 = random_matrix(rng, dims[1], dims[2]);
  if (rng() % 3 == 0) d2 = QMatrix(dims[1], dims[2]);
  QMatrix n = nullspace(d2.transpose());  // columns annihilate d2 from the left
  QMatrix d1 = random_matrix(rng, dims[0], n.cols()) * n.transpose();
  return share(Complex3::make(dims, d1, d2));
}

inline ComplexPtr random_complex(std::mt19937& rng, int max_dim = 2) {
  std::array<int, 3> dims;
  for (auto& d : dims) d = 1 + static_cast<int>(rng() % max_dim);
  return random_complex(rng, dims);
}

inline MultiMap random_map(std::mt19937& rng, const ComplexPtr& src, const ComplexPtr& tgt, int arity, int degree) {
  MultiMap m(src, tgt, arity, degree);
  for (auto& p : m.tuples()) m.set_block(p, random_matrix(rng, m.rows(p), m.cols(p)));
  return m;
}

}  // namespace testutil
