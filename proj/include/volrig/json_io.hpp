#pragma once

// JSON encodings of complexes, configurations and reports.
//
// Complex format: {"n": int, "d": int, "facets": [[int, ...], ...]}.
// Facets need not be sorted; the parser sorts them and closes downward.
// "d" is optional and validated against the facets when present.
//
// Configuration format: {"points": [[num or "a/b", ...], ...]}.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "volrig/bounds.hpp"
#include "volrig/complex.hpp"
#include "volrig/global.hpp"
#include "volrig/grassmann.hpp"
#include "volrig/homology.hpp"
#include "volrig/orientations.hpp"
#include "volrig/rigidity.hpp"
#include "volrig/shifting.hpp"

namespace volrig {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) {
  if (r.get_den() == 1) {
    const Integer& num = r.get_num();
    if (num.fits_slong_p()) {
      const long v = num.get_si();
      if (v >= -(1L << 53) && v <= (1L << 53)) return json(v);
    }
  }
  return json(rational_to_string(r));
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw std::invalid_argument("expected integer or \"a/b\" string, got: " + j.dump());
}

inline json simplex_to_json(const Simplex& s) { return json(s.vertices()); }

inline Simplex simplex_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("simplex must be a nonempty array of labels");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("simplex labels must be integers");
    v.push_back(x.get<int>());
  }
  return Simplex(std::move(v));
}

inline json complex_to_json(const SimplicialComplex& c) {
  json out;
  out["n"] = c.vertex_count();
  out["d"] = c.dim();
  json facets = json::array();
  // maximal faces, so non-pure complexes survive the round trip
  for (const Simplex& f : c.maximal_faces()) facets.push_back(simplex_to_json(f));
  out["facets"] = facets;
  return out;
}

inline SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("complex must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("complex: missing integer field \"n\"");
  if (!j.contains("facets") || !j["facets"].is_array())
    throw std::invalid_argument("complex: missing array field \"facets\"");
  const int n = j["n"].get<int>();
  std::vector<Simplex> facets;
  for (const auto& f : j["facets"]) facets.push_back(simplex_from_json(f));
  SimplicialComplex c = SimplicialComplex::from_facets(n, facets);
  if (j.contains("d")) {
    if (!j["d"].is_number_integer() || j["d"].get<int>() != c.dim())
      throw std::invalid_argument("complex: declared d = " + j["d"].dump() + " does not match facets (d = " +
                                  std::to_string(c.dim()) + ")");
  }
  return c;
}

inline json configuration_to_json(const RationalConfiguration& p) {
  json pts = json::array();
  for (const auto& pt : p.points) {
    json row = json::array();
    for (const auto& x : pt) row.push_back(rational_to_json(x));
    pts.push_back(row);
  }
  return json{{"points", pts}};
}

inline RationalConfiguration configuration_from_json(const json& j, int expect_n, int expect_d) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("configuration: expected object with \"points\" array");
  RationalConfiguration p;
  p.d = expect_d;
  for (const auto& row : j["points"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != expect_d)
      throw std::invalid_argument("configuration: each point needs exactly d = " + std::to_string(expect_d) +
                                  " coordinates");
    std::vector<Rational> pt;
    for (const auto& x : row) pt.push_back(rational_from_json(x));
    p.points.push_back(std::move(pt));
  }
  if (p.n() != expect_n)
    throw std::invalid_argument("configuration: expected " + std::to_string(expect_n) + " points, got " +
                                std::to_string(p.n()));
  return p;
}

inline json fvector_to_json(const FVector& f) {
  json out = json::array();
  for (long long x : f.counts) out.push_back(x);
  return out;
}

inline json betti_to_json(const BettiVector& b) {
  json out = json::array();
  for (long long x : b.entries) out.push_back(x);
  return out;
}

inline json verdict_to_json(const RigidityVerdict& v) {
  return json{{"rank", v.rank},
              {"required", v.required},
              {"rigid", v.rigid},
              {"trials", v.trials},
              {"failure_bound", rational_to_string(v.failure_bound)}};
}

inline json cross_check_to_json(const CrossCheckReport& r) {
  return json{{"rigidity_independent", r.rigidity_independent},
              {"phi_full_row_rank", r.phi_full_row_rank},
              {"agree", r.agree},
              {"phi_route_conclusive", r.phi_route_conclusive},
              {"phi_rank", r.phi_rank},
              {"generic_rank", r.generic_rank}};
}

inline json labeled_matrix_to_json(const LabeledMatrix& m) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& r : m.row_labels) rows.push_back(simplex_to_json(r));
  for (const auto& c : m.col_labels) cols.push_back(simplex_to_json(c));
  for (int i = 0; i < m.m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.m.cols(); ++j) row.push_back(rational_to_json(m.m(i, j)));
    entries.push_back(row);
  }
  return json{{"row_labels", rows}, {"col_labels", cols}, {"entries", entries}};
}

inline json orientation_to_json(const Orientation& o) {
  json edges = json::array();
  for (auto [a, b] : o.edges) edges.push_back(json::array({a, b}));
  return json{{"vertices", o.vertices}, {"edges", edges}};
}

inline std::pair<std::vector<int>, std::vector<std::pair<int, int>>> edges_from_json(const json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("expected object with \"edges\" array");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> vertices;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    vertices.push_back(edges.back().first);
    vertices.push_back(edges.back().second);
  }
  if (j.contains("vertices"))
    for (const auto& v : j["vertices"]) vertices.push_back(v.get<int>());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return {vertices, edges};
}

inline json shift_report_to_json(const ShiftPropertyReport& r) {
  return json{{"f_preserved", r.f_preserved},
              {"betti_preserved", r.betti_preserved},
              {"top_betti_counts_facets_missing_one", r.top_betti_counts_facets_missing_one},
              {"all", r.all()}};
}

inline json shifted_to_json(const ShiftedComplex& s) {
  return json{{"complex", complex_to_json(s.complex)},
              {"extension", s.extension},
              {"seed", s.seed},
              {"prime", s.prime}};
}

inline json bound_report_to_json(const BoundReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(json{{"k", e.k}, {"bound", e.bound}, {"actual", e.actual}, {"meets", e.meets}});
  return json{{"entries", entries},
              {"all_met", r.all_met},
              {"facet_count_matches_basis_size", r.facet_count_matches_basis_size},
              {"could_be_basis", r.could_be_basis},
              {"caveat", BoundReport::kCaveat}};
}

inline json witness_to_json(const LgrcWitness& w) {
  return json{{"ground", w.ground}, {"base", simplex_to_json(w.base)}, {"apex", w.apex}};
}

inline LgrcWitness witness_from_json(const json& j) {
  LgrcWitness w;
  for (const auto& v : j.at("ground")) w.ground.push_back(v.get<int>());
  w.base = simplex_from_json(j.at("base"));
  w.apex = j.at("apex").get<int>();
  return w;
}

inline json certificate_to_json(const GlobalCertificate& cert) {
  json steps = json::array();
  for (const TraceStep& t : cert.trace) {
    switch (t.kind) {
      case TraceStep::Kind::kAddedSimplex:
        steps.push_back(json{{"step", "added_simplex"},
                             {"simplex", simplex_to_json(t.added)},
                             {"cone_vertex", t.cone_vertex}});
        break;
      case TraceStep::Kind::kRemovedVertex:
        steps.push_back(
            json{{"step", "removed_vertex"}, {"vertex", t.removed}, {"witness", witness_to_json(t.witness)}});
        break;
      case TraceStep::Kind::kBaseCase:
        steps.push_back(json{{"step", "base_case"}, {"witness", witness_to_json(t.witness)}});
        break;
    }
  }
  return json{{"verdict", cert.verdict == GlobalCertificate::Verdict::kCertified ? "certified" : "unknown"},
              {"trace", steps}};
}

inline GlobalCertificate certificate_from_json(const json& j) {
  GlobalCertificate cert;
  const std::string v = j.at("verdict").get<std::string>();
  cert.verdict =
      (v == "certified") ? GlobalCertificate::Verdict::kCertified : GlobalCertificate::Verdict::kUnknown;
  for (const auto& s : j.at("trace")) {
    TraceStep t;
    const std::string kind = s.at("step").get<std::string>();
    if (kind == "added_simplex") {
      t.kind = TraceStep::Kind::kAddedSimplex;
      t.added = simplex_from_json(s.at("simplex"));
      t.cone_vertex = s.at("cone_vertex").get<int>();
    } else if (kind == "removed_vertex") {
      t.kind = TraceStep::Kind::kRemovedVertex;
      t.removed = s.at("vertex").get<int>();
      t.witness = witness_from_json(s.at("witness"));
    } else if (kind == "base_case") {
      t.kind = TraceStep::Kind::kBaseCase;
      t.witness = witness_from_json(s.at("witness"));
    } else {
      throw std::invalid_argument("unknown trace step kind: " + kind);
    }
    cert.trace.push_back(std::move(t));
  }
  return cert;
}

}  // namespace volrig
