#pragma once

// Minimal dense row-major matrix. All rigidity-scale matrices are small, so
// there is no sparse path.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace volrig {

template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, const T& init = T())
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, init) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
  }

  static Mat identity(int n, const T& one, const T& zero = T()) {
    Mat m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat select_rows(const std::vector<int>& idx) const {
    Mat m(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
  }

  Mat select_cols(const std::vector<int>& idx) const {
    Mat m(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

}  // namespace volrig
