#pragma once

// Labeled simplicial complexes stored as per-dimension sorted face lists,
// plus the distinguished complexes: the complete complex K_n^d and the
// lexicographically greedy rigid complex.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "volrig/simplex.hpp"

namespace volrig {

/// Face counts indexed -1..d, with entry(-1) = 1 by convention.
struct FVector {
  std::vector<long long> counts;  // counts[k+1] = |Sigma_k|

  int top_dim() const { return static_cast<int>(counts.size()) - 2; }
  long long at(int k) const {
    if (k < -1 || k > top_dim()) throw std::out_of_range("FVector: index " + std::to_string(k));
    return counts[k + 1];
  }
  bool operator==(const FVector&) const = default;
};

class SimplicialComplex {
 public:
  /// Downward closure of the given facet list. Facet tuples are sorted on
  /// construction; labels must lie in [1, n].
  static SimplicialComplex from_facets(int n, const std::vector<Simplex>& facets) {
    if (n < 1) throw std::invalid_argument("from_facets: need n >= 1");
    if (facets.empty()) throw std::invalid_argument("from_facets: empty facet list");
    int d = 0;
    for (const Simplex& f : facets) {
      if (f.max_label() > n)
        throw std::invalid_argument("from_facets: label " + std::to_string(f.max_label()) +
                                    " out of range [1," + std::to_string(n) + "]");
      d = std::max(d, f.dim());
    }
    SimplicialComplex c;
    c.n_ = n;
    c.d_ = d;
    c.faces_.resize(d + 1);
    for (const Simplex& f : facets) c.insert_with_subsets(f);
    for (auto& fk : c.faces_) {
      std::sort(fk.begin(), fk.end());
      fk.erase(std::unique(fk.begin(), fk.end()), fk.end());
    }
    return c;
  }

  int vertex_count() const { return n_; }
  int dim() const { return d_; }

  const std::vector<Simplex>& faces(int k) const {
    if (k < 0 || k > d_) throw std::out_of_range("faces: dimension " + std::to_string(k));
    return faces_[k];
  }
  const std::vector<Simplex>& facets() const { return faces_[d_]; }

  bool contains(const Simplex& s) const {
    if (s.dim() > d_) return false;
    const auto& fk = faces_[s.dim()];
    return std::binary_search(fk.begin(), fk.end(), s);
  }

  /// Faces contained in no higher face.
  std::vector<Simplex> maximal_faces() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= d_; ++k) {
      for (const Simplex& s : faces_[k]) {
        bool covered = false;
        if (k < d_) {
          for (const Simplex& t : faces_[k + 1]) {
            if (t.contains(s)) {
              covered = true;
              break;
            }
          }
        }
        if (!covered) out.push_back(s);
      }
    }
    return out;
  }

  bool operator==(const SimplicialComplex& o) const { return n_ == o.n_ && d_ == o.d_ && faces_ == o.faces_; }

 private:
  void insert_with_subsets(const Simplex& f) {
    const int m = f.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      faces_[static_cast<int>(sub.size()) - 1].push_back(Simplex(std::move(sub)));
    }
  }

  int n_ = 0;
  int d_ = 0;
  std::vector<std::vector<Simplex>> faces_;
};

inline FVector f_vector(const SimplicialComplex& c) {
  FVector f;
  f.counts.resize(c.dim() + 2);
  f.counts[0] = 1;
  for (int k = 0; k <= c.dim(); ++k) f.counts[k + 1] = static_cast<long long>(c.faces(k).size());
  return f;
}

/// Subcomplex generated by the maximal faces containing s.
inline SimplicialComplex star(const SimplicialComplex& c, const Simplex& s) {
  if (!c.contains(s)) throw std::invalid_argument("star: " + s.to_string() + " is not a face");
  std::vector<Simplex> gens;
  for (const Simplex& m : c.maximal_faces())
    if (m.contains(s)) gens.push_back(m);
  return SimplicialComplex::from_facets(c.vertex_count(), gens);
}

/// The (d-k-1)-simplices whose join with s is a maximal face of star(s).
inline std::vector<Simplex> link(const SimplicialComplex& c, const Simplex& s) {
  if (!c.contains(s)) throw std::invalid_argument("link: " + s.to_string() + " is not a face");
  std::vector<Simplex> out;
  for (const Simplex& m : c.maximal_faces()) {
    if (!m.contains(s) || m.size() == s.size()) continue;
    std::vector<int> rest;
    for (int v : m)
      if (!s.contains(v)) rest.push_back(v);
    out.push_back(Simplex(std::move(rest)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_pure(const SimplicialComplex& c) {
  for (const Simplex& m : c.maximal_faces())
    if (m.dim() != c.dim()) return false;
  return true;
}

inline SimplicialComplex complete_complex(int n, int d) {
  if (n < d + 1 || d < 0) throw std::invalid_argument("complete_complex: need n >= d+1 >= 1");
  return SimplicialComplex::from_facets(n, all_simplices(n, d));
}

/// The top tuple 134...(d+1)n whose dominance down-set is the LGRC facet set;
/// degenerates to 12...(d+1) when n = d+1.
inline Simplex lgrc_top_tuple(int n, int d) {
  if (n < d + 1) throw std::invalid_argument("lgrc_top_tuple: need n >= d+1");
  std::vector<int> v;
  if (n == d + 1) {
    for (int i = 1; i <= d + 1; ++i) v.push_back(i);
  } else {
    v.push_back(1);
    for (int i = 3; i <= d + 1; ++i) v.push_back(i);
    v.push_back(n);
  }
  return Simplex(std::move(v));
}

/// Lexicographically greedy rigid complex: the dominance down-set of
/// lgrc_top_tuple(n, d), closed downward.
inline SimplicialComplex lgrc(int n, int d) {
  const Simplex top = lgrc_top_tuple(n, d);
  std::vector<Simplex> facets;
  for (const Simplex& s : all_simplices(n, d))
    if (dominance_leq(s, top)) facets.push_back(s);
  return SimplicialComplex::from_facets(n, facets);
}

/// Downward closed in the dominance order, dimension-wise. Checked through
/// the cover relation (unit decrements of single coordinates).
inline bool is_shifted(const SimplicialComplex& c) {
  for (int k = 0; k <= c.dim(); ++k) {
    for (const Simplex& s : c.faces(k)) {
      for (int i = 0; i < s.size(); ++i) {
        const int lowered = s[i] - 1;
        if (lowered < 1 || (i > 0 && lowered <= s[i - 1])) continue;
        std::vector<int> w = s.vertices();
        w[i] = lowered;
        if (!c.contains(Simplex(std::move(w)))) return false;
      }
    }
  }
  return true;
}

}  // namespace volrig
