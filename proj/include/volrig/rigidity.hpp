#pragma once

// The signed d-volume measurement map, its differential (the rigidity
// matrix), and the randomized generic-rank oracle behind independence,
// bases and local rigidity in the volume rigidity matroid.
//
// "Generic" is realized by uniform random prime-field configurations with
// Schwartz-Zippel accounting; every verdict carries its failure bound.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "volrig/complex.hpp"
#include "volrig/field.hpp"
#include "volrig/linalg.hpp"
#include "volrig/matrix.hpp"

namespace volrig {

/// A point for every vertex of [n]; points[i] belongs to vertex i+1.
template <typename Elem>
struct Config {
  int d = 0;
  std::vector<std::vector<Elem>> points;

  int n() const { return static_cast<int>(points.size()); }
};

using RationalConfiguration = Config<Rational>;

struct RandomizationOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  std::uint64_t prime = kDefaultPrime;
};

/// rank dn - (d^2+d-1) required of a rigid complex; d^2+d-1 is the dimension
/// of the trivial (volume-preserving affine) flex space.
inline long long required_rank(int n, int d) {
  return static_cast<long long>(d) * n - (static_cast<long long>(d) * d + d - 1);
}

inline long long trivial_flex_space_dim(int d) { return static_cast<long long>(d) * d + d - 1; }

/// Signed d-volume of one simplex: the (d+1)x(d+1) determinant with a top row
/// of ones and vertex columns in increasing label order (this fixes the sign).
template <class Field>
typename Field::Elem signed_volume(const Field& F, const Simplex& s, const Config<typename Field::Elem>& p) {
  const int d = p.d;
  if (s.size() != d + 1) throw std::invalid_argument("signed_volume: simplex dimension != d");
  Mat<typename Field::Elem> m(d + 1, d + 1, F.zero());
  for (int j = 0; j <= d; ++j) {
    m(0, j) = F.one();
    const auto& pt = p.points[s[j] - 1];
    for (int r = 0; r < d; ++r) m(r + 1, j) = pt[r];
  }
  return det(F, std::move(m));
}

template <class Field>
std::vector<typename Field::Elem> volume_measurement(const Field& F, const std::vector<Simplex>& dfaces,
                                                     const Config<typename Field::Elem>& p) {
  std::vector<typename Field::Elem> out;
  out.reserve(dfaces.size());
  for (const Simplex& s : dfaces) out.push_back(signed_volume(F, s, p));
  return out;
}

/// Differential of the measurement map evaluated at p. Rows follow `dfaces`;
/// columns are (vertex, coordinate) pairs, vertex-major, so column
/// (v-1)*d + c is coordinate c of vertex v. The block of vertex s[l] in row s
/// is the signed cofactor vector of column l of the volume determinant.
template <class Field>
Mat<typename Field::Elem> rigidity_matrix_eval(const Field& F, const std::vector<Simplex>& dfaces, int n,
                                               const Config<typename Field::Elem>& p) {
  const int d = p.d;
  if (p.n() < n) throw std::invalid_argument("rigidity_matrix_eval: configuration too short");
  Mat<typename Field::Elem> out(static_cast<int>(dfaces.size()), n * d, F.zero());
  Mat<typename Field::Elem> minor(d, d, F.zero());
  for (int row = 0; row < out.rows(); ++row) {
    const Simplex& s = dfaces[row];
    if (s.size() != d + 1) throw std::invalid_argument("rigidity_matrix_eval: facet dimension != d");
    if (s.max_label() > n) throw std::invalid_argument("rigidity_matrix_eval: label out of range");
    for (int l = 0; l <= d; ++l) {
      for (int c = 0; c < d; ++c) {
        // cofactor of entry (c+1, l) of the bordered volume matrix
        int mi = 0;
        for (int r = 0; r <= d; ++r) {
          if (r == c + 1) continue;
          int mj = 0;
          for (int j = 0; j <= d; ++j) {
            if (j == l) continue;
            minor(mi, mj) = (r == 0) ? F.one() : p.points[s[j] - 1][r - 1];
            ++mj;
          }
          ++mi;
        }
        auto cof = det(F, minor);
        if (((c + 1) + l) % 2 != 0) cof = F.neg(cof);
        out(row, (s[l] - 1) * d + c) = cof;
      }
    }
  }
  return out;
}

/// Rigidity matrix over Q with its row/column labels, as exposed by the CLI.
struct RigidityMatrix {
  Mat<Rational> m;
  std::vector<Simplex> row_labels;
  std::vector<std::pair<int, int>> col_labels;  // (vertex, coordinate 1..d)
};

inline RigidityMatrix rigidity_matrix(const SimplicialComplex& c, const RationalConfiguration& p) {
  if (p.n() != c.vertex_count() || p.d != c.dim())
    throw std::invalid_argument("rigidity_matrix: configuration/complex dimension mismatch");
  RigidityMatrix r;
  r.row_labels = c.facets();
  r.m = rigidity_matrix_eval(RationalField{}, r.row_labels, c.vertex_count(), p);
  for (int v = 1; v <= c.vertex_count(); ++v)
    for (int coord = 1; coord <= p.d; ++coord) r.col_labels.emplace_back(v, coord);
  return r;
}

struct GenericRankResult {
  int rank = 0;
  int trials = 0;
  Rational per_trial_bound;  // Schwartz-Zippel bound for a single evaluation
  Rational failure_bound;    // compounded over independent trials
};

inline Config<std::uint64_t> random_configuration(const PrimeField& F, int n, int d, std::mt19937_64& rng) {
  Config<std::uint64_t> p;
  p.d = d;
  p.points.resize(n);
  for (auto& pt : p.points) {
    pt.resize(d);
    for (auto& x : pt) x = F.uniform(rng);
  }
  return p;
}

/// Matroid rank of a d-simplex set: max over trials of rank R(p) restricted to
/// those rows, at uniform prime-field p. Wrong only if every trial hits the
/// vanishing locus of a maximal nonzero minor, whose degree is at most
/// rank_cap * (d-1); the compounded probability bound is reported.
inline GenericRankResult generic_rank(const std::vector<Simplex>& facets, int n, int d,
                                      const RandomizationOptions& opt = {}) {
  if (n < d + 1) throw std::invalid_argument("generic_rank: need n >= d+1");
  const PrimeField F(opt.prime);
  GenericRankResult res;
  res.trials = std::max(1, opt.trials);
  const long long rank_cap = std::min<long long>(static_cast<long long>(facets.size()), required_rank(n, d));
  const long long degree = std::max<long long>(0, rank_cap * (d - 1));
  res.per_trial_bound = Rational(static_cast<unsigned long>(degree), static_cast<unsigned long>(opt.prime));
  res.per_trial_bound.canonicalize();
  if (res.per_trial_bound > 1) res.per_trial_bound = 1;
  res.failure_bound = 1;
  for (int t = 0; t < res.trials; ++t) {
    res.failure_bound *= res.per_trial_bound;
    if (facets.empty()) continue;
    std::mt19937_64 rng(mix_seed(opt.seed, t));
    const auto p = random_configuration(F, n, d, rng);
    res.rank = std::max(res.rank, rank(F, rigidity_matrix_eval(F, facets, n, p)));
  }
  res.failure_bound.canonicalize();
  return res;
}

struct RigidityVerdict {
  int rank = 0;
  long long required = 0;
  bool rigid = false;
  int trials = 0;
  Rational failure_bound;
};

inline void require_pure_for_rigidity(const SimplicialComplex& c, bool ignore_impure, const char* op) {
  if (is_pure(c)) return;
  if (ignore_impure) return;  // callers may warn; sub-top facets are simply unmeasured
  throw std::invalid_argument(std::string(op) +
                              ": complex is not pure; maximal simplices of dimension < d will not be "
                              "measured (pass ignore_impure to proceed)");
}

inline RigidityVerdict is_locally_rigid(const SimplicialComplex& c, const RandomizationOptions& opt = {},
                                        bool ignore_impure = false) {
  if (c.vertex_count() < c.dim() + 1) throw std::invalid_argument("is_locally_rigid: need n >= d+1");
  require_pure_for_rigidity(c, ignore_impure, "is_locally_rigid");
  const auto gr = generic_rank(c.facets(), c.vertex_count(), c.dim(), opt);
  RigidityVerdict v;
  v.rank = gr.rank;
  v.required = required_rank(c.vertex_count(), c.dim());
  v.rigid = (v.rank == v.required);
  v.trials = gr.trials;
  v.failure_bound = gr.failure_bound;
  return v;
}

inline int matroid_rank(const std::vector<Simplex>& facets, int n, int d, const RandomizationOptions& opt = {}) {
  return generic_rank(facets, n, d, opt).rank;
}

inline bool matroid_is_independent(const std::vector<Simplex>& facets, int n, int d,
                                   const RandomizationOptions& opt = {}) {
  return matroid_rank(facets, n, d, opt) == static_cast<int>(facets.size());
}

inline bool is_basis(const std::vector<Simplex>& facets, int n, int d, const RandomizationOptions& opt = {}) {
  return static_cast<long long>(facets.size()) == required_rank(n, d) &&
         matroid_is_independent(facets, n, d, opt);
}

/// Kernel dimension of the complete rigidity matrix at a random configuration;
/// equals d^2+d-1 for n >= d+1 (min over trials, since rank can only drop).
inline long long trivial_flex_dim(int n, int d, const RandomizationOptions& opt = {}) {
  if (n < d + 1) throw std::invalid_argument("trivial_flex_dim: need n >= d+1");
  const auto gr = generic_rank(all_simplices(n, d), n, d, opt);
  return static_cast<long long>(n) * d - gr.rank;
}

inline void check_config_pair(int n, int d, const RationalConfiguration& p, const RationalConfiguration& q) {
  if (p.n() != n || q.n() != n || p.d != d || q.d != d)
    throw std::invalid_argument("configuration dimension mismatch");
  for (const auto& pt : p.points)
    if (static_cast<int>(pt.size()) != d) throw std::invalid_argument("configuration point of wrong length");
  for (const auto& pt : q.points)
    if (static_cast<int>(pt.size()) != d) throw std::invalid_argument("configuration point of wrong length");
}

/// Exact equality of measurements over the complex's d-faces.
inline bool are_equivalent(const SimplicialComplex& c, const RationalConfiguration& p,
                           const RationalConfiguration& q) {
  check_config_pair(c.vertex_count(), c.dim(), p, q);
  const RationalField F;
  return volume_measurement(F, c.facets(), p) == volume_measurement(F, c.facets(), q);
}

/// Exact equality of measurements over every (d+1)-subset of [n].
inline bool are_congruent(int n, int d, const RationalConfiguration& p, const RationalConfiguration& q) {
  check_config_pair(n, d, p, q);
  const RationalField F;
  const auto ground = all_simplices(n, d);
  return volume_measurement(F, ground, p) == volume_measurement(F, ground, q);
}

struct PinnedConfiguration {
  RationalConfiguration config;
  Rational scale;  // determinant of the applied linear part; volumes divide by it
};

/// Affine change of coordinates sending p(1) to the origin and p(2)..p(d+1)
/// to the standard basis. The map is volume-preserving only up to the
/// returned determinant factor, which callers may renormalize by.
inline PinnedConfiguration pin_configuration(const RationalConfiguration& p) {
  const int d = p.d;
  if (p.n() < d + 1) throw std::invalid_argument("pin_configuration: need at least d+1 points");
  const RationalField F;
  Mat<Rational> m(d, d);
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < d; ++r) m(r, j) = p.points[j + 1][r] - p.points[0][r];
  const Rational scale = det(F, m);
  if (sgn(scale) == 0)
    throw std::invalid_argument("pin_configuration: first d+1 points are affinely dependent");

  // Invert the frame matrix by elimination on [m | I].
  Mat<Rational> aug(d, 2 * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug(i, j) = m(i, j);
    aug(i, d + i) = 1;
  }
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int i = c; i < d; ++i)
      if (sgn(aug(i, c)) != 0) {
        piv = i;
        break;
      }
    for (int j = 0; j < 2 * d; ++j) std::swap(aug(piv, j), aug(c, j));
    const Rational inv = 1 / aug(c, c);
    for (int j = 0; j < 2 * d; ++j) aug(c, j) *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == c || sgn(aug(i, c)) == 0) continue;
      const Rational f = aug(i, c);
      for (int j = 0; j < 2 * d; ++j) aug(i, j) -= f * aug(c, j);
    }
  }

  PinnedConfiguration out;
  out.scale = scale;
  out.config.d = d;
  out.config.points.resize(p.n());
  for (int v = 0; v < p.n(); ++v) {
    out.config.points[v].resize(d);
    for (int r = 0; r < d; ++r) {
      Rational acc = 0;
      for (int jc = 0; jc < d; ++jc) acc += aug(r, d + jc) * (p.points[v][jc] - p.points[0][jc]);
      out.config.points[v][r] = acc;
    }
  }
  return out;
}

/// Deterministic rational sample configuration used by CLI defaults and tests.
inline RationalConfiguration sample_rational_configuration(int n, int d, std::uint64_t seed,
                                                           int magnitude = 1000) {
  std::mt19937_64 rng(mix_seed(seed, 0x7a77));
  RationalConfiguration p;
  p.d = d;
  p.points.resize(n);
  for (auto& pt : p.points) {
    pt.resize(d);
    for (auto& x : pt) {
      const long num = static_cast<long>(rng() % (2 * static_cast<std::uint64_t>(magnitude) + 1)) - magnitude;
      const long den = static_cast<long>(rng() % 9 + 1);
      x = Rational(num, den);
      x.canonicalize();
    }
  }
  return p;
}

}  // namespace volrig
