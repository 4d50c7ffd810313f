#pragma once

// Simplices are strictly increasing tuples of positive vertex labels.
// The componentwise (Gale/dominance) order on equal-size tuples drives
// shiftedness and the greedy rigid complex.

#include <algorithm>
#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace volrig {

class Simplex {
 public:
  Simplex() = default;

  /// Sorts and validates: labels >= 1, pairwise distinct.
  explicit Simplex(std::vector<int> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw std::invalid_argument("Simplex: empty vertex tuple");
    std::sort(v_.begin(), v_.end());
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (v_[i] < 1) throw std::invalid_argument("Simplex: vertex labels must be positive");
      if (i > 0 && v_[i] == v_[i - 1])
        throw std::invalid_argument("Simplex: duplicate vertex label " + std::to_string(v_[i]));
    }
  }

  Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

  int size() const { return static_cast<int>(v_.size()); }
  int dim() const { return size() - 1; }
  int operator[](int i) const { return v_[i]; }
  const std::vector<int>& vertices() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  int max_label() const { return v_.back(); }

  bool contains(int vertex) const { return std::binary_search(v_.begin(), v_.end(), vertex); }
  bool contains(const Simplex& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
  }

  /// The facet opposite the idx-th vertex (0-based).
  Simplex without_index(int idx) const {
    std::vector<int> w = v_;
    w.erase(w.begin() + idx);
    Simplex s;
    s.v_ = std::move(w);
    return s;
  }

  Simplex with_vertex(int vertex) const {
    std::vector<int> w = v_;
    w.push_back(vertex);
    return Simplex(std::move(w));
  }

  /// Concatenation followed by re-sorting; vertex sets must be disjoint.
  Simplex joined(const Simplex& other) const {
    std::vector<int> w = v_;
    w.insert(w.end(), other.v_.begin(), other.v_.end());
    return Simplex(std::move(w));
  }

  auto operator<=>(const Simplex&) const = default;

  std::string to_string() const {
    std::ostringstream os;
    const bool compact = v_.back() <= 9;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i && !compact) os << '.';
      os << v_[i];
    }
    return os.str();
  }

 private:
  std::vector<int> v_;
};

/// Componentwise order on equal-size sorted tuples.
inline bool dominance_leq(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance_leq: size mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// All (k+1)-subsets of [n] in lexicographic order.
inline std::vector<Simplex> all_simplices(int n, int k) {
  std::vector<Simplex> out;
  if (k < 0 || k + 1 > n) return out;
  std::vector<int> c(k + 1);
  for (int i = 0; i <= k; ++i) c[i] = i + 1;
  while (true) {
    out.push_back(Simplex(c));
    int i = k;
    while (i >= 0 && c[i] == n - (k - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j <= k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

/// All size-k subsets of the ground vector as plain label vectors, lex order;
/// k = 0 yields the single empty pick.
inline std::vector<std::vector<int>> vertex_subsets(const std::vector<int>& ground, int k) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(ground.size());
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = ground[idx[i]];
    out.push_back(std::move(pick));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (k - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// All (size)-subsets of the given sorted ground vector, lex order.
inline std::vector<Simplex> subsets_of(const std::vector<int>& ground, int size) {
  std::vector<Simplex> out;
  const int n = static_cast<int>(ground.size());
  if (size < 1 || size > n) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = ground[idx[i]];
    out.push_back(Simplex(std::move(pick)));
    int i = size - 1;
    while (i >= 0 && idx[i] == n - (size - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace volrig
