#pragma once

// Simplicial boundary matrices and reduced rational Betti numbers.
// Only the top Betti number feeds rigidity logic (the a-d-cyclic test);
// lower entries are reported over Q, where integral torsion is invisible.

#include <stdexcept>
#include <vector>

#include "volrig/complex.hpp"
#include "volrig/linalg.hpp"
#include "volrig/matrix.hpp"

namespace volrig {

struct BettiVector {
  std::vector<long long> entries;  // indexed 0..d, reduced convention

  long long at(int k) const {
    if (k < 0 || k >= static_cast<int>(entries.size())) throw std::out_of_range("BettiVector: index");
    return entries[k];
  }
  bool operator==(const BettiVector&) const = default;
};

/// Rows are the (k-1)-faces, columns the k-faces, both in lex order; the
/// column of a k-face carries (-1)^j at the face with its j-th vertex deleted.
inline Mat<Rational> boundary_matrix(const SimplicialComplex& c, int k) {
  if (k < 1 || k > c.dim()) throw std::invalid_argument("boundary_matrix: k out of range");
  const auto& rows = c.faces(k - 1);
  const auto& cols = c.faces(k);
  Mat<Rational> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    const Simplex& s = cols[j];
    for (int v = 0; v < s.size(); ++v) {
      const Simplex t = s.without_index(v);
      const auto it = std::lower_bound(rows.begin(), rows.end(), t);
      m(static_cast<int>(it - rows.begin()), j) = (v % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

/// Reduced Betti numbers over Q: beta_k = dim ker d_k - rank d_{k+1}, with the
/// augmentation map at k = 0 and d_{d+1} = 0.
inline BettiVector betti(const SimplicialComplex& c) {
  const int d = c.dim();
  std::vector<int> ranks(d + 2, 0);         // ranks[k] = rank of boundary_k
  ranks[0] = c.faces(0).empty() ? 0 : 1;    // augmentation
  for (int k = 1; k <= d; ++k) ranks[k] = rank(boundary_matrix(c, k));
  BettiVector b;
  b.entries.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    const long long fk = static_cast<long long>(c.faces(k).size());
    b.entries[k] = fk - ranks[k] - ranks[k + 1];
  }
  return b;
}

}  // namespace volrig
