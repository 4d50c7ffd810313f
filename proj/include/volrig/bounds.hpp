#pragma once

// Sharp face-number lower bounds for bases of the volume rigidity matroid,
// and the f-vector audit against them. Meeting every bound is necessary but
// not sufficient for being a basis.

#include <stdexcept>
#include <string>
#include <vector>

#include "volrig/complex.hpp"
#include "volrig/rigidity.hpp"

namespace volrig {

/// Binomial with C(a, b) = 0 whenever b < 0 or b > a.
inline long long binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

/// C(d+1, k+1) + sum_{l=0}^{d-1} (n-d-1) * C(d-l, k-l).
inline long long face_lower_bound(int n, int d, int k) {
  if (n < d + 1 || k < 0 || k > d) throw std::invalid_argument("face_lower_bound: parameter range");
  long long total = binomial(d + 1, k + 1);
  for (int l = 0; l <= d - 1; ++l) total += static_cast<long long>(n - d - 1) * binomial(d - l, k - l);
  return total;
}

struct BoundEntry {
  int k = 0;
  long long bound = 0;
  long long actual = 0;
  bool meets = false;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  bool all_met = false;
  bool facet_count_matches_basis_size = false;
  bool could_be_basis = false;  // all bounds met and |Sigma_d| = dn-(d^2+d-1)
  static constexpr const char* kCaveat =
      "meeting every face-number bound is necessary for being a basis but not "
      "sufficient for volume rigidity";
};

inline BoundReport audit_f_vector(const SimplicialComplex& c) {
  if (!is_pure(c)) throw std::invalid_argument("audit_f_vector: complex is not pure");
  const int n = c.vertex_count();
  const int d = c.dim();
  const FVector f = f_vector(c);
  BoundReport r;
  r.all_met = true;
  for (int k = 0; k <= d; ++k) {
    BoundEntry e;
    e.k = k;
    e.bound = face_lower_bound(n, d, k);
    e.actual = f.at(k);
    e.meets = e.actual >= e.bound;
    r.all_met = r.all_met && e.meets;
    r.entries.push_back(e);
  }
  r.facet_count_matches_basis_size = (f.at(d) == required_rank(n, d));
  r.could_be_basis = r.all_met && r.facet_count_matches_basis_size;
  return r;
}

}  // namespace volrig
