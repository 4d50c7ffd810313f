#pragma once

// Exact rank / kernel / greedy-basis computations. Prime-field matrices use
// plain Gaussian elimination; rational matrices go through fraction-free
// (Bareiss) elimination on a row-scaled integer matrix so intermediate
// entries stay minor-sized.

#include <utility>
#include <vector>

#include "volrig/field.hpp"
#include "volrig/matrix.hpp"

namespace volrig {

/// Rank over an exact field by in-place elimination (the matrix is copied).
template <class Field>
int rank(const Field& F, Mat<typename Field::Elem> m) {
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!F.is_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const auto inv = F.inv(m(r, c));
    for (int i = r + 1; i < rows; ++i) {
      if (F.is_zero(m(i, c))) continue;
      const auto f = F.mul(m(i, c), inv);
      for (int j = c; j < cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    ++r;
  }
  return r;
}

/// Bareiss elimination on an integer matrix; destroys its argument.
inline int bareiss_rank(Mat<Integer>& m) {
  const int rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(m(i, c)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) mpz_swap(m(piv, j).get_mpz_t(), m(r, j).get_mpz_t());
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Integer t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Rational rank: clear denominators per row, then run Bareiss.
inline int rank(const Mat<Rational>& m) {
  Mat<Integer> z(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      Rational s = m(i, j) * Rational(l);
      s.canonicalize();
      z(i, j) = s.get_num();
    }
  }
  return bareiss_rank(z);
}

template <class Field>
int kernel_dim(const Field& F, const Mat<typename Field::Elem>& m) {
  return m.cols() - rank(F, m);
}

inline int kernel_dim(const Mat<Rational>& m) { return m.cols() - rank(m); }

/// Scans columns in the given order and keeps each column that strictly
/// enlarges the span of the kept set. Returns kept positions of `order`,
/// i.e. a subsequence of `order` of length rank(m).
///
/// Columns may be produced lazily via `column(idx) -> vector<Elem>`.
template <class Field, class ColumnFn>
std::vector<int> greedy_column_basis_lazy(const Field& F, int nrows, const std::vector<int>& order,
                                          ColumnFn&& column, int rank_cap = -1) {
  using Elem = typename Field::Elem;
  std::vector<int> kept;
  std::vector<std::pair<int, std::vector<Elem>>> echelon;  // (pivot row, reduced column)
  for (int idx : order) {
    if (rank_cap >= 0 && static_cast<int>(kept.size()) == rank_cap) break;
    std::vector<Elem> v = column(idx);
    for (const auto& [pi, pv] : echelon) {
      if (F.is_zero(v[pi])) continue;
      const Elem f = F.div(v[pi], pv[pi]);
      for (int i = 0; i < nrows; ++i) v[i] = F.sub(v[i], F.mul(f, pv[i]));
    }
    int nz = -1;
    for (int i = 0; i < nrows; ++i) {
      if (!F.is_zero(v[i])) {
        nz = i;
        break;
      }
    }
    if (nz < 0) continue;
    echelon.emplace_back(nz, std::move(v));
    kept.push_back(idx);
  }
  return kept;
}

template <class Field>
std::vector<int> greedy_column_basis(const Field& F, const Mat<typename Field::Elem>& m,
                                     const std::vector<int>& order) {
  return greedy_column_basis_lazy(F, m.rows(), order,
                                  [&](int c) {
                                    std::vector<typename Field::Elem> v(m.rows());
                                    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, c);
                                    return v;
                                  });
}

/// Determinant over an exact field by elimination.
template <class Field>
typename Field::Elem det(const Field& F, Mat<typename Field::Elem> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  typename Field::Elem result = F.one();
  bool negate = false;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (!F.is_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return F.zero();
    if (piv != c) {
      negate = !negate;
      for (int j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
    }
    result = F.mul(result, m(c, c));
    const auto inv = F.inv(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (F.is_zero(m(i, c))) continue;
      const auto f = F.mul(m(i, c), inv);
      for (int j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
    }
  }
  return negate ? F.neg(result) : result;
}

/// Draws a matrix with uniform prime-field entries.
inline Mat<std::uint64_t> random_matrix(const PrimeField& F, int rows, int cols, std::mt19937_64& rng) {
  Mat<std::uint64_t> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = F.uniform(rng);
  return m;
}

}  // namespace volrig
