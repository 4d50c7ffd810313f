#pragma once

// Acyclic orientations and alternating-closed-trail (ACT) detection: the
// combinatorial side of independence in the Grassmannian matroid for d = 2,
// plus the d = 1 connectivity characterization of volume rigidity.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "volrig/grassmann.hpp"
#include "volrig/simplex.hpp"

namespace volrig {

struct Orientation {
  std::vector<int> vertices;                 // sorted
  std::vector<std::pair<int, int>> edges;    // directed (tail, head)
};

inline Orientation make_orientation(std::vector<int> vertices, std::vector<std::pair<int, int>> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("orientation: loop edge");
    if (!std::binary_search(vertices.begin(), vertices.end(), a) ||
        !std::binary_search(vertices.begin(), vertices.end(), b))
      throw std::invalid_argument("orientation: edge endpoint outside vertex set");
    const auto und = std::minmax(a, b);
    if (!seen.insert({und.first, und.second}).second)
      throw std::invalid_argument("orientation: repeated underlying edge");
  }
  return Orientation{std::move(vertices), std::move(edges)};
}

inline bool is_acyclic(const Orientation& o) {
  std::map<int, std::vector<int>> out;
  std::map<int, int> indeg;
  for (int v : o.vertices) indeg[v] = 0;
  for (auto [a, b] : o.edges) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> queue;
  for (auto& [v, deg] : indeg)
    if (deg == 0) queue.push_back(v);
  std::size_t done = 0;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    ++done;
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return done == o.vertices.size();
}

/// Cyclic sequence i1..i2k (k >= 2) whose odd-position vertices are the tails
/// of both incident edges: (i1,i2), (i1,i2k), (i3,i2), (i3,i4), ... all present.
struct ACTWitness {
  std::vector<int> cycle;
};

enum class ActMode {
  kVertexDistinct,  // cycles: vertices pairwise distinct (default reading)
  kClosedTrail,     // trails: directed edges pairwise distinct, vertices may repeat
};

namespace detail {

inline std::vector<int> canonical_act(std::vector<int> c) {
  // The pattern is invariant under rotation by 2 and under reversal
  // (re-anchored so position 1 stays a tail); pick the lex-least form.
  const int len = static_cast<int>(c.size());
  std::vector<int> best = c;
  for (int rev = 0; rev < 2; ++rev) {
    for (int shift = 0; shift < len; shift += 2) {
      std::vector<int> cand(len);
      for (int i = 0; i < len; ++i) cand[i] = c[(shift + i) % len];
      best = std::min(best, cand);
    }
    // reversal: i1, i2k, i2k-1, ..., i2
    std::vector<int> r(len);
    r[0] = c[0];
    for (int i = 1; i < len; ++i) r[i] = c[len - i];
    c = r;
  }
  return best;
}

struct ActSearch {
  const std::set<std::pair<int, int>>& edges;
  ActMode mode;
  int max_len;
  std::vector<int> seq;
  std::set<int> used_vertices;
  std::set<std::pair<int, int>> used_edges;
  std::optional<ACTWitness> found;

  bool has(int a, int b) const { return edges.count({a, b}) > 0; }

  bool take_edge(int a, int b) {
    if (mode == ActMode::kClosedTrail) return used_edges.insert({a, b}).second;
    return true;
  }
  void drop_edge(int a, int b) {
    if (mode == ActMode::kClosedTrail) used_edges.erase({a, b});
  }

  bool vertex_ok(int v) const {
    if (mode == ActMode::kVertexDistinct) return used_vertices.count(v) == 0;
    return true;
  }

  // seq has even length; positions 0,2,4,.. are tails. Extend with tail t and
  // head h (edges t->seq.back() and t->h), or close using edge seq[0]->seq.back().
  void search() {
    if (found) return;
    const int len = static_cast<int>(seq.size());
    if (len >= 4 && len % 2 == 0 && has(seq[0], seq.back())) {
      if (mode != ActMode::kClosedTrail || used_edges.count({seq[0], seq.back()}) == 0) {
        found = ACTWitness{canonical_act(seq)};
        return;
      }
    }
    if (len + 2 > max_len) return;
    for (auto [t, mid] : edges) {
      if (mid != seq.back() || !vertex_ok(t)) continue;
      if (!take_edge(t, mid)) continue;
      for (auto [t2, h] : edges) {
        if (t2 != t || h == mid) continue;
        // h is the next sink; the wrap edge seq[0] -> h is tested after pushing
        if (!vertex_ok(h)) continue;
        if (!take_edge(t, h)) continue;
        seq.push_back(t);
        seq.push_back(h);
        if (mode == ActMode::kVertexDistinct) {
          used_vertices.insert(t);
          used_vertices.insert(h);
        }
        search();
        if (mode == ActMode::kVertexDistinct) {
          used_vertices.erase(t);
          used_vertices.erase(h);
        }
        seq.pop_back();
        seq.pop_back();
        drop_edge(t, h);
        if (found) return;
      }
      drop_edge(t, mid);
    }
  }
};

}  // namespace detail

/// Exhaustive backtracking search for an ACT; sound and complete on the small
/// vertex counts this library targets. Returns a canonicalized witness.
inline std::optional<ACTWitness> find_act(const Orientation& o, ActMode mode = ActMode::kVertexDistinct) {
  std::set<std::pair<int, int>> edges(o.edges.begin(), o.edges.end());
  const int max_len = (mode == ActMode::kVertexDistinct) ? static_cast<int>(o.vertices.size()) & ~1
                                                         : 2 * static_cast<int>(edges.size());
  // anchor: try each start pair (i1, i2) with i1 -> i2, ascending
  for (auto [a, b] : edges) {
    detail::ActSearch s{edges, mode, max_len, {}, {}, {}, std::nullopt};
    s.seq = {a, b};
    if (mode == ActMode::kVertexDistinct) s.used_vertices = {a, b};
    if (mode == ActMode::kClosedTrail) s.used_edges = {{a, b}};
    s.search();
    if (s.found) return s.found;
  }
  return std::nullopt;
}

/// Checks that a claimed witness actually realizes the ACT pattern.
inline bool act_witness_valid(const Orientation& o, const ACTWitness& w, ActMode mode = ActMode::kVertexDistinct) {
  const int len = static_cast<int>(w.cycle.size());
  if (len < 4 || len % 2 != 0) return false;
  std::set<std::pair<int, int>> edges(o.edges.begin(), o.edges.end());
  std::set<std::pair<int, int>> used;
  for (int i = 0; i < len; i += 2) {
    const int tail = w.cycle[i];
    const int prev = w.cycle[(i + len - 1) % len];
    const int next = w.cycle[(i + 1) % len];
    if (!edges.count({tail, prev}) || !edges.count({tail, next})) return false;
    used.insert({tail, prev});
    used.insert({tail, next});
  }
  if (mode == ActMode::kVertexDistinct) {
    std::set<int> distinct(w.cycle.begin(), w.cycle.end());
    if (static_cast<int>(distinct.size()) != len) return false;
  } else if (static_cast<int>(used.size()) != len) {
    return false;
  }
  return true;
}

/// Searches the orientations induced by vertex orderings (exactly the acyclic
/// ones) for an ACT-free orientation, pruning any ordering whose settled edge
/// set already contains an ACT.
inline std::optional<Orientation> exists_acyclic_act_free(const std::vector<int>& vertices,
                                                          const std::vector<std::pair<int, int>>& undirected_edges,
                                                          int vertex_limit = 10,
                                                          ActMode mode = ActMode::kVertexDistinct) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (static_cast<int>(verts.size()) > vertex_limit)
    throw std::invalid_argument("exists_acyclic_act_free: vertex limit exceeded (" +
                                std::to_string(verts.size()) + " > " + std::to_string(vertex_limit) + ")");
  std::set<std::pair<int, int>> und;
  for (auto [a, b] : undirected_edges) {
    if (a == b) throw std::invalid_argument("exists_acyclic_act_free: loop edge");
    und.insert({std::min(a, b), std::max(a, b)});
  }

  std::vector<int> order;
  std::vector<int> remaining = verts;
  std::vector<std::pair<int, int>> directed;

  std::optional<Orientation> result;
  auto rec = [&](auto&& self) -> void {
    if (result) return;
    if (remaining.empty()) {
      Orientation o = make_orientation(verts, directed);
      if (!find_act(o, mode)) result = std::move(o);
      return;
    }
    for (std::size_t i = 0; i < remaining.size() && !result; ++i) {
      const int v = remaining[i];
      remaining.erase(remaining.begin() + i);
      std::size_t added = 0;
      for (int u : order) {
        if (und.count({std::min(u, v), std::max(u, v)})) {
          directed.emplace_back(u, v);
          ++added;
        }
      }
      order.push_back(v);
      // edges among placed vertices are final, so a partial ACT is permanent
      bool prune = false;
      if (added > 0) {
        Orientation partial = make_orientation(order, directed);
        prune = find_act(partial, mode).has_value();
      }
      if (!prune) self(self);
      order.pop_back();
      directed.resize(directed.size() - added);
      remaining.insert(remaining.begin() + i, v);
    }
  };
  rec(rec);
  return result;
}

struct CombinatorialOptions {
  int vertex_limit = 10;          // orientation-ordering search limit
  long long subset_budget = 200000;  // d = 2 witness subsets examined before giving up
  ActMode act_mode = ActMode::kVertexDistinct;
};

namespace detail {

/// DFS over lex-ordered facet subsets whose Phi rows stay independent; tests
/// each full-size candidate for a Grassmannian-independent column basis.
/// The first leaf visited is the lex-greedy row basis of Phi, the natural
/// witness; later leaves realize the exhaustive fallback.
inline bool search_d2_witness(const LabeledMatrix& phi, long long target, const std::vector<int>& skel_vertices,
                              const CombinatorialOptions& opt) {
  const RationalField F;
  std::vector<std::pair<int, std::vector<Rational>>> echelon;
  std::vector<int> chosen;
  long long budget = opt.subset_budget;
  std::map<std::set<std::pair<int, int>>, bool> orientation_cache;

  auto column_basis_edges = [&](const std::vector<int>& rows) {
    Mat<Rational> sub = phi.m.select_rows(rows);
    std::vector<int> order(sub.cols());
    for (int j = 0; j < sub.cols(); ++j) order[j] = j;
    std::set<std::pair<int, int>> edges;
    for (int j : greedy_column_basis(F, sub, order)) {
      const Simplex& e = phi.col_labels[j];
      edges.insert({e[0], e[1]});
    }
    return edges;
  };

  auto rec = [&](auto&& self, int from) -> bool {
    if (static_cast<long long>(chosen.size()) == target) {
      if (--budget < 0) throw std::runtime_error("is_rigid_combinatorial: subset budget exceeded");
      auto edges = column_basis_edges(chosen);
      if (static_cast<long long>(edges.size()) != target) return false;
      auto [it, fresh] = orientation_cache.try_emplace(edges, false);
      if (fresh) {
        std::vector<std::pair<int, int>> evec(edges.begin(), edges.end());
        it->second =
            exists_acyclic_act_free(skel_vertices, evec, opt.vertex_limit, opt.act_mode).has_value();
      }
      return it->second;
    }
    for (int r = from; r < phi.m.rows(); ++r) {
      if (phi.m.rows() - r < static_cast<int>(target - chosen.size())) break;
      // incremental row-independence check against the kept echelon
      std::vector<Rational> v(phi.m.cols());
      for (int j = 0; j < phi.m.cols(); ++j) v[j] = phi.m(r, j);
      for (const auto& [pi, pv] : echelon) {
        if (sgn(v[pi]) == 0) continue;
        const Rational f = v[pi] / pv[pi];
        for (int j = 0; j < phi.m.cols(); ++j) v[j] -= f * pv[j];
      }
      int nz = -1;
      for (int j = 0; j < phi.m.cols(); ++j)
        if (sgn(v[j]) != 0) {
          nz = j;
          break;
        }
      if (nz < 0) continue;
      echelon.emplace_back(nz, std::move(v));
      chosen.push_back(r);
      const bool ok = self(self, r + 1);
      chosen.pop_back();
      echelon.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

/// Combinatorial rigidity characterization: connectivity for d = 1; for d = 2,
/// existence of a (2n-5)-facet subcomplex with Phi-independent rows whose
/// column basis admits an acyclic ACT-free orientation on [n] \ {1}.
inline bool is_rigid_combinatorial(const SimplicialComplex& c, const CombinatorialOptions& opt = {}) {
  const int n = c.vertex_count();
  const int d = c.dim();
  if (d != 1 && d != 2)
    throw std::invalid_argument("is_rigid_combinatorial: characterization known only for d in {1,2}");
  require_pure_for_rigidity(c, false, "is_rigid_combinatorial");

  if (d == 1) {
    // connectivity of ([n], Sigma_1); labels not touched by any edge disconnect
    std::vector<std::vector<int>> adj(n + 1);
    for (const Simplex& e : c.faces(1)) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack = {1};
    seen[1] = 1;
    int visited = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++visited;
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return visited == n;
  }

  const long long target = required_rank(n, 2);
  if (static_cast<long long>(c.facets().size()) < target) return false;
  const LabeledMatrix phi = phi_matrix_rows(c.facets(), n, 2);
  if (rank(phi.m) < target) return false;  // no subset can reach a full-size column basis
  std::vector<int> skel;
  for (int v = 2; v <= n; ++v) skel.push_back(v);
  return detail::search_d2_witness(phi, target, skel, opt);
}

}  // namespace volrig
