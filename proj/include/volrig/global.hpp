#pragma once

// Sound-but-incomplete certification of generic global d-volume rigidity.
// A certificate is a replayable trace of simplex additions (volumes implied
// by a complete (d+2)-vertex sub-complex), vertex removals justified by a
// greedy-rigid-complex witness inside the removed vertex's link, and a final
// spanning greedy-rigid-complex base case. Global rigidity is not a generic
// property, so there is no refutation path: the negative outcome is Unknown.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "volrig/complex.hpp"
#include "volrig/linalg.hpp"
#include "volrig/rigidity.hpp"

namespace volrig {

/// A relabeled greedy rigid complex: base facet, apex inside it, and the
/// ground vertex set it spans. Facets are the base plus, for every ground
/// vertex outside the base, the d cones over apex + (d-1)-subsets of the
/// base opposite the apex.
struct LgrcWitness {
  std::vector<int> ground;  // sorted
  Simplex base;             // d+1 vertices inside ground
  int apex = 0;             // member of base
};

inline std::vector<Simplex> lgrc_witness_facets(const LgrcWitness& w) {
  const int d = w.base.dim();
  std::vector<int> rest;
  for (int v : w.base)
    if (v != w.apex) rest.push_back(v);
  std::vector<Simplex> out = {w.base};
  std::set<int> base_set(w.base.begin(), w.base.end());
  for (int j : w.ground) {
    if (base_set.count(j)) continue;
    for (std::vector<int> pick : vertex_subsets(rest, d - 1)) {
      pick.push_back(w.apex);
      pick.push_back(j);
      out.push_back(Simplex(std::move(pick)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct TraceStep {
  enum class Kind { kAddedSimplex, kRemovedVertex, kBaseCase };
  Kind kind = Kind::kBaseCase;
  Simplex added;        // kAddedSimplex
  int cone_vertex = 0;  // kAddedSimplex
  int removed = 0;      // kRemovedVertex
  LgrcWitness witness;  // kRemovedVertex (on the link) and kBaseCase (spanning)
};

struct GlobalCertificate {
  enum class Verdict { kCertified, kUnknown };
  Verdict verdict = Verdict::kUnknown;
  std::vector<TraceStep> trace;
};

namespace detail {

using FacetSet = std::vector<Simplex>;  // sorted, unique, all of size d+1

inline bool fs_contains(const FacetSet& fs, const Simplex& s) {
  return std::binary_search(fs.begin(), fs.end(), s);
}

inline void fs_insert(FacetSet& fs, const Simplex& s) {
  const auto it = std::lower_bound(fs.begin(), fs.end(), s);
  if (it == fs.end() || *it != s) fs.insert(it, s);
}

/// One volume of a complete complex on d+2 vertices is determined by the
/// others, so a missing d-simplex whose d+1 companions through some cone
/// vertex are all present can be added without changing global rigidity.
inline std::optional<std::pair<Simplex, int>> closure_step(const FacetSet& fs, int n, int d) {
  for (const Simplex& cand : all_simplices(n, d)) {
    if (fs_contains(fs, cand)) continue;
    for (int i = 1; i <= n; ++i) {
      if (cand.contains(i)) continue;
      bool all_present = true;
      for (int v = 0; v <= d && all_present; ++v)
        all_present = fs_contains(fs, cand.without_index(v).with_vertex(i));
      if (all_present) return std::make_pair(cand, i);
    }
  }
  return std::nullopt;
}

inline void run_closure(FacetSet& fs, int n, int d, std::vector<TraceStep>* trace) {
  while (auto step = closure_step(fs, n, d)) {
    fs_insert(fs, step->first);
    if (trace) {
      TraceStep t;
      t.kind = TraceStep::Kind::kAddedSimplex;
      t.added = step->first;
      t.cone_vertex = step->second;
      trace->push_back(t);
    }
  }
}

inline std::optional<LgrcWitness> detect_spanning(const FacetSet& fs, int n, int d) {
  std::vector<int> ground(n);
  for (int v = 1; v <= n; ++v) ground[v - 1] = v;
  for (const Simplex& f : fs) {
    for (int a : f) {
      LgrcWitness w{ground, f, a};
      bool ok = true;
      for (const Simplex& lam : lgrc_witness_facets(w)) {
        if (!fs_contains(fs, lam)) {
          ok = false;
          break;
        }
      }
      if (ok) return w;
    }
  }
  return std::nullopt;
}

inline std::vector<int> neighbors_of(const FacetSet& fs, int i) {
  std::set<int> nb;
  for (const Simplex& f : fs)
    if (f.contains(i))
      for (int v : f)
        if (v != i) nb.insert(v);
  return std::vector<int>(nb.begin(), nb.end());
}

/// (d-1)-faces of the closed witness complex.
inline std::vector<Simplex> witness_skeleton(const LgrcWitness& w, int d) {
  std::set<Simplex> skel;
  for (const Simplex& f : lgrc_witness_facets(w))
    for (int v = 0; v <= d; ++v) skel.insert(f.without_index(v));
  return std::vector<Simplex>(skel.begin(), skel.end());
}

inline bool witness_link_hypothesis(const FacetSet& fs, int i, const LgrcWitness& w, int d) {
  for (const Simplex& t : witness_skeleton(w, d))
    if (!fs_contains(fs, t.with_vertex(i))) return false;
  return true;
}

inline FacetSet remove_vertex_with_witness(const FacetSet& fs, int i, const LgrcWitness& w) {
  FacetSet out;
  for (const Simplex& f : fs)
    if (!f.contains(i)) out.push_back(f);
  for (const Simplex& f : lgrc_witness_facets(w)) fs_insert(out, f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // relabel j > i down by one
  FacetSet relabeled;
  for (const Simplex& f : out) {
    std::vector<int> v;
    for (int x : f) v.push_back(x > i ? x - 1 : x);
    relabeled.push_back(Simplex(std::move(v)));
  }
  std::sort(relabeled.begin(), relabeled.end());
  return relabeled;
}

inline std::optional<std::vector<TraceStep>> certify_rec(FacetSet fs, int n, int d, int depth) {
  std::vector<TraceStep> trace;
  run_closure(fs, n, d, &trace);
  if (auto w = detect_spanning(fs, n, d)) {
    TraceStep t;
    t.kind = TraceStep::Kind::kBaseCase;
    t.witness = std::move(*w);
    trace.push_back(t);
    return trace;
  }
  if (depth <= 0 || n <= d + 1) return std::nullopt;
  for (int i = 1; i <= n; ++i) {
    long long facets_through = 0;
    for (const Simplex& f : fs)
      if (f.contains(i)) ++facets_through;
    if (facets_through < d + 1) continue;
    const std::vector<int> nb = neighbors_of(fs, i);
    if (static_cast<int>(nb.size()) < d + 1) continue;
    for (const Simplex& base : subsets_of(nb, d + 1)) {
      for (int a : base) {
        LgrcWitness w{nb, base, a};
        if (!witness_link_hypothesis(fs, i, w, d)) continue;
        auto sub = certify_rec(remove_vertex_with_witness(fs, i, w), n - 1, d, depth - 1);
        if (sub) {
          TraceStep t;
          t.kind = TraceStep::Kind::kRemovedVertex;
          t.removed = i;
          t.witness = std::move(w);
          trace.push_back(t);
          trace.insert(trace.end(), sub->begin(), sub->end());
          return trace;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Fixpoint of the cone-determined simplex additions; preserves generic
/// global rigidity in both directions.
inline SimplicialComplex implied_simplex_closure(const SimplicialComplex& c) {
  if (!is_pure(c)) throw std::invalid_argument("implied_simplex_closure: complex is not pure");
  detail::FacetSet fs = c.facets();
  detail::run_closure(fs, c.vertex_count(), c.dim(), nullptr);
  return SimplicialComplex::from_facets(c.vertex_count(), fs);
}

/// A spanning relabeled greedy rigid complex inside the facet set, if any.
inline std::optional<LgrcWitness> detect_lgrc_spanning(const SimplicialComplex& c) {
  if (!is_pure(c)) throw std::invalid_argument("detect_lgrc_spanning: complex is not pure");
  return detail::detect_spanning(c.facets(), c.vertex_count(), c.dim());
}

/// depth_limit < 0 means one removal per vertex.
inline GlobalCertificate certify_globally_rigid(const SimplicialComplex& c, int depth_limit = -1) {
  if (c.vertex_count() < c.dim() + 1) throw std::invalid_argument("certify_globally_rigid: need n >= d+1");
  if (!is_pure(c)) throw std::invalid_argument("certify_globally_rigid: complex is not pure");
  if (depth_limit < 0) depth_limit = c.vertex_count();
  GlobalCertificate cert;
  auto trace = detail::certify_rec(c.facets(), c.vertex_count(), c.dim(), depth_limit);
  if (trace) {
    cert.verdict = GlobalCertificate::Verdict::kCertified;
    cert.trace = std::move(*trace);
  }
  return cert;
}

/// Independent verification that every step's precondition holds when the
/// trace is replayed from scratch.
inline bool replay_certificate(const SimplicialComplex& c, const GlobalCertificate& cert) {
  if (cert.verdict != GlobalCertificate::Verdict::kCertified) return false;
  if (cert.trace.empty()) return false;
  detail::FacetSet fs = c.facets();
  int n = c.vertex_count();
  const int d = c.dim();
  for (std::size_t step = 0; step < cert.trace.size(); ++step) {
    const TraceStep& t = cert.trace[step];
    const bool last = (step + 1 == cert.trace.size());
    switch (t.kind) {
      case TraceStep::Kind::kAddedSimplex: {
        if (last) return false;
        if (t.added.size() != d + 1 || t.added.max_label() > n) return false;
        if (t.added.contains(t.cone_vertex) || t.cone_vertex < 1 || t.cone_vertex > n) return false;
        for (int v = 0; v <= d; ++v)
          if (!detail::fs_contains(fs, t.added.without_index(v).with_vertex(t.cone_vertex))) return false;
        detail::fs_insert(fs, t.added);
        break;
      }
      case TraceStep::Kind::kRemovedVertex: {
        if (last) return false;
        const int i = t.removed;
        if (i < 1 || i > n) return false;
        long long through = 0;
        for (const Simplex& f : fs)
          if (f.contains(i)) ++through;
        if (through < d + 1) return false;
        if (t.witness.ground != detail::neighbors_of(fs, i)) return false;
        if (t.witness.base.size() != d + 1 || !t.witness.base.contains(t.witness.apex)) return false;
        for (int v : t.witness.base)
          if (!std::binary_search(t.witness.ground.begin(), t.witness.ground.end(), v)) return false;
        if (!detail::witness_link_hypothesis(fs, i, t.witness, d)) return false;
        fs = detail::remove_vertex_with_witness(fs, i, t.witness);
        --n;
        break;
      }
      case TraceStep::Kind::kBaseCase: {
        if (!last) return false;
        std::vector<int> all(n);
        for (int v = 1; v <= n; ++v) all[v - 1] = v;
        if (t.witness.ground != all) return false;
        if (t.witness.base.size() != d + 1 || !t.witness.base.contains(t.witness.apex)) return false;
        for (const Simplex& f : lgrc_witness_facets(t.witness))
          if (!detail::fs_contains(fs, f)) return false;
        break;
      }
    }
  }
  return true;
}

/// Reconstructs, for a rational configuration p of the greedy rigid complex,
/// every outer vertex from the d linear volume equations through the apex
/// facets; true when each system is uniquely solvable and returns p itself.
inline bool lgrc_equivalence_unique(int n, int d, const RationalConfiguration& p) {
  if (p.n() != n || p.d != d) throw std::invalid_argument("lgrc_equivalence_unique: dimension mismatch");
  const RationalField F;
  std::vector<int> core;
  for (int v = 2; v <= d + 1; ++v) core.push_back(v);
  for (int j = d + 2; j <= n; ++j) {
    Mat<Rational> lhs(d, d);
    std::vector<Rational> rhs(d);
    RationalConfiguration q = p;
    for (auto& x : q.points[j - 1]) x = 0;
    int row = 0;
    for (std::vector<int> pick : vertex_subsets(core, d - 1)) {
      pick.push_back(1);
      pick.push_back(j);
      const Simplex facet(std::move(pick));
      const auto grad_row = rigidity_matrix_eval(F, {facet}, n, q);
      for (int cc = 0; cc < d; ++cc) lhs(row, cc) = grad_row(0, (j - 1) * d + cc);
      rhs[row] = signed_volume(F, facet, p) - signed_volume(F, facet, q);
      ++row;
    }
    // solve lhs * y = rhs exactly
    Mat<Rational> aug(d, d + 1);
    for (int i = 0; i < d; ++i) {
      for (int jj = 0; jj < d; ++jj) aug(i, jj) = lhs(i, jj);
      aug(i, d) = rhs[i];
    }
    for (int cpiv = 0; cpiv < d; ++cpiv) {
      int piv = -1;
      for (int i = cpiv; i < d; ++i)
        if (sgn(aug(i, cpiv)) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return false;  // singular: not uniquely solvable
      for (int jj = 0; jj <= d; ++jj) std::swap(aug(piv, jj), aug(cpiv, jj));
      const Rational inv = 1 / aug(cpiv, cpiv);
      for (int jj = 0; jj <= d; ++jj) aug(cpiv, jj) *= inv;
      for (int i = 0; i < d; ++i) {
        if (i == cpiv || sgn(aug(i, cpiv)) == 0) continue;
        const Rational f = aug(i, cpiv);
        for (int jj = 0; jj <= d; ++jj) aug(i, jj) -= f * aug(cpiv, jj);
      }
    }
    for (int cc = 0; cc < d; ++cc)
      if (aug(cc, d) != p.points[j - 1][cc]) return false;
  }
  return true;
}

}  // namespace volrig
