#pragma once

// Command-line front end. Every subcommand reads JSON (file argument or
// stdin), writes a JSON report to stdout, and exits 0 on success, 2 on an
// input error, 3 when the analyze cross-oracle agreement matrix fails.
// Reports are byte-identical for identical (input, seed, prime, trials).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "volrig/json_io.hpp"

namespace volrig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDisagreement = 3;

struct Options {
  std::string seed_spec = std::to_string(kDefaultSeed);
  std::uint64_t prime = kDefaultPrime;
  int trials = kDefaultTrials;
  std::string format = "json";
  int limit_vertices = 10;
  int depth = -1;
  bool ignore_impure = false;
  long long budget = 200000;
  std::string order = "lex";
  bool act_trails = false;
  bool inject_fault = false;

  std::uint64_t resolve_seed() const {
    if (seed_spec == "random") return std::random_device{}();
    return std::stoull(seed_spec);
  }
  RandomizationOptions randomization(std::uint64_t seed) const { return {seed, trials, prime}; }
  ActMode act_mode() const { return act_trails ? ActMode::kClosedTrail : ActMode::kVertexDistinct; }
};

namespace detail {

inline json read_json_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return json::parse(in);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  return json::parse(f);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string digest(const json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(j.dump())));
  return buf;
}

inline void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value().front().is_object() || it.value().front().is_array()))) {
        out << pad << it.key() << ":\n";
        render_text(it.value(), out, indent + 2);
      } else {
        out << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& el : j) {
      if (el.is_object() || el.is_array()) {
        out << pad << "-\n";
        render_text(el, out, indent + 2);
      } else {
        out << pad << "- " << el.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

inline void emit(const json& j, const Options& opt, std::ostream& out) {
  if (opt.format == "text")
    render_text(j, out, 0);
  else
    out << j.dump(2) << "\n";
}

}  // namespace detail

/// The analyze agreement matrix: every entry must hold or the tool exits 3.
struct AgreementEntry {
  std::string name;
  bool ok = true;
  bool applicable = false;
};

inline json agreement_to_json(const std::vector<AgreementEntry>& entries, bool& all_ok) {
  all_ok = true;
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back(json{{"check", e.name}, {"applicable", e.applicable}, {"ok", e.ok}});
    if (e.applicable) all_ok = all_ok && e.ok;
  }
  return out;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string input_path, config_path, cert_path;
  int arg_n = 0, arg_d = 0;
  bool orient_check = false, orient_find = false;

  CLI::App app{"volrig: exact volume rigidity analysis of simplicial complexes"};
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed_spec, "RNG seed (integer, or 'random' for entropy)");
  app.add_option("--prime", opt.prime, "prime modulus for randomized evaluations");
  app.add_option("--trials", opt.trials, "independent randomized trials")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format: json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--limit-vertices", opt.limit_vertices, "orientation search vertex limit");
  app.add_option("--depth", opt.depth, "vertex-removal recursion depth (default: n)");
  app.add_flag("--ignore-impure", opt.ignore_impure, "downgrade the non-pure input error to a warning");
  app.add_option("--budget", opt.budget, "witness subsets examined by the d=2 combinatorial search");
  app.add_option("--order", opt.order, "linear extension for shifting")->check(CLI::IsMember({"lex"}));
  app.add_flag("--act-trails", opt.act_trails,
               "read alternating closed trails (repeated vertices allowed) instead of cycles");
  app.add_flag("--inject-fault", opt.inject_fault,
               "diagnostic: corrupt one oracle verdict to exercise the disagreement exit path");

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input_path, "complex JSON file ('-' = stdin)"); };

  auto* c_rigidity = app.add_subcommand("rigidity", "randomized local rigidity verdict");
  add_input(c_rigidity);
  auto* c_rank = app.add_subcommand("rank", "matroid rank of the facet set");
  add_input(c_rank);
  auto* c_indep = app.add_subcommand("independent", "matroid independence of the facet set");
  add_input(c_indep);
  auto* c_basis = app.add_subcommand("basis", "is the facet set a basis");
  add_input(c_basis);
  auto* c_flexdim = app.add_subcommand("flexdim", "kernel dimension of the complete rigidity matrix");
  c_flexdim->add_option("--n", arg_n, "vertex count")->required();
  c_flexdim->add_option("--d", arg_d, "dimension")->required();
  auto* c_measure = app.add_subcommand("measure", "signed volume measurement of the d-faces");
  add_input(c_measure);
  c_measure->add_option("--config", config_path, "rational configuration JSON file");
  auto* c_betti = app.add_subcommand("betti", "reduced rational Betti numbers");
  add_input(c_betti);
  auto* c_phi = app.add_subcommand("phi", "coboundary projection matrix, rank and column basis");
  add_input(c_phi);
  auto* c_orient = app.add_subcommand("orient", "acyclic / ACT-free orientation tools");
  add_input(c_orient);
  c_orient->add_flag("--check", orient_check, "check a directed edge set (acyclicity + ACT search)");
  c_orient->add_flag("--find", orient_find, "search for an acyclic ACT-free orientation of undirected edges");
  auto* c_comb = app.add_subcommand("rigid2-comb", "combinatorial rigidity verdict (d <= 2)");
  add_input(c_comb);
  auto* c_shift = app.add_subcommand("shift", "exterior algebraic shifting");
  add_input(c_shift);
  auto* c_bounds = app.add_subcommand("bounds", "f-vector audit against the basis face-number bounds");
  add_input(c_bounds);
  auto* c_lgrc = app.add_subcommand("lgrc", "lexicographically greedy rigid complex");
  c_lgrc->add_option("--n", arg_n, "vertex count")->required();
  c_lgrc->add_option("--d", arg_d, "dimension")->required();
  auto* c_complete = app.add_subcommand("complete", "complete d-dimensional complex");
  c_complete->add_option("--n", arg_n, "vertex count")->required();
  c_complete->add_option("--d", arg_d, "dimension")->required();
  auto* c_gcert = app.add_subcommand("global-certify", "certify generic global rigidity");
  add_input(c_gcert);
  auto* c_greplay = app.add_subcommand("global-replay", "replay and verify a global rigidity certificate");
  add_input(c_greplay);
  c_greplay->add_option("--certificate", cert_path, "certificate JSON file (else taken from input object)");
  auto* c_analyze = app.add_subcommand("analyze", "run every applicable analysis and cross-check oracles");
  add_input(c_analyze);

  // global flags may appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::ostringstream help;
      (void)app.exit(e, help, help);
      out << help.str();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const std::uint64_t seed = [&]() -> std::uint64_t {
    try {
      return opt.resolve_seed();
    } catch (const std::exception&) {
      return kDefaultSeed;
    }
  }();
  const RandomizationOptions rnd = opt.randomization(seed);

  try {
    json report;
    report["parameters"] = json{{"seed", seed}, {"prime", opt.prime}, {"trials", opt.trials}};

    auto load_complex = [&]() {
      const json j = detail::read_json_input(input_path, in);
      SimplicialComplex c = complex_from_json(j);
      report["input"] = complex_to_json(c);
      report["input_digest"] = detail::digest(complex_to_json(c));
      return c;
    };

    if (*c_rigidity) {
      const SimplicialComplex c = load_complex();
      if (!is_pure(c) && opt.ignore_impure) report["warnings"] = json::array({"complex is not pure"});
      report["rigidity"] = verdict_to_json(is_locally_rigid(c, rnd, opt.ignore_impure));
    } else if (*c_rank || *c_indep || *c_basis) {
      const SimplicialComplex c = load_complex();
      const auto gr = generic_rank(c.facets(), c.vertex_count(), c.dim(), rnd);
      report["rank"] = gr.rank;
      report["facet_count"] = c.facets().size();
      report["required_for_basis"] = required_rank(c.vertex_count(), c.dim());
      report["failure_bound"] = rational_to_string(gr.failure_bound);
      if (*c_indep) report["independent"] = (gr.rank == static_cast<int>(c.facets().size()));
      if (*c_basis)
        report["basis"] = (gr.rank == static_cast<int>(c.facets().size()) &&
                           static_cast<long long>(c.facets().size()) == required_rank(c.vertex_count(), c.dim()));
    } else if (*c_flexdim) {
      report["n"] = arg_n;
      report["d"] = arg_d;
      report["flex_dim"] = trivial_flex_dim(arg_n, arg_d, rnd);
      report["expected"] = trivial_flex_space_dim(arg_d);
    } else if (*c_measure) {
      const SimplicialComplex c = load_complex();
      if (!is_pure(c)) {
        report["warnings"] = json::array({"complex is not pure; maximal simplices below dimension d are unmeasured"});
        err << "warning: complex is not pure; sub-top maximal simplices will not be measured\n";
      }
      RationalConfiguration p;
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw std::invalid_argument("cannot open configuration file: " + config_path);
        p = configuration_from_json(json::parse(f), c.vertex_count(), c.dim());
      } else {
        p = sample_rational_configuration(c.vertex_count(), c.dim(), seed);
      }
      report["configuration"] = configuration_to_json(p);
      json values = json::object();
      const auto vols = volume_measurement(RationalField{}, c.facets(), p);
      for (std::size_t i = 0; i < vols.size(); ++i)
        values[c.facets()[i].to_string()] = rational_to_json(vols[i]);
      report["volumes"] = values;
    } else if (*c_betti) {
      const SimplicialComplex c = load_complex();
      report["betti"] = betti_to_json(betti(c));
      report["f_vector"] = fvector_to_json(f_vector(c));
    } else if (*c_phi) {
      const SimplicialComplex c = load_complex();
      const LabeledMatrix phi = phi_matrix_rows(c.facets(), c.vertex_count(), c.dim());
      report["phi"] = labeled_matrix_to_json(phi);
      report["rank"] = rank(phi.m);
      json basis = json::array();
      for (const Simplex& s : phi_column_basis(c.facets(), c.vertex_count(), c.dim()))
        basis.push_back(simplex_to_json(s));
      report["column_basis"] = basis;
    } else if (*c_orient) {
      if (orient_check == orient_find)
        throw std::invalid_argument("orient: pass exactly one of --check or --find");
      const json j = detail::read_json_input(input_path, in);
      auto [vertices, edges] = edges_from_json(j);
      if (orient_check) {
        const Orientation o = make_orientation(vertices, edges);
        report["acyclic"] = is_acyclic(o);
        const auto act = find_act(o, opt.act_mode());
        report["act"] = act ? json(act->cycle) : json(nullptr);
        report["act_free"] = !act.has_value();
      } else {
        const auto o = exists_acyclic_act_free(vertices, edges, opt.limit_vertices, opt.act_mode());
        report["found"] = o.has_value();
        report["orientation"] = o ? orientation_to_json(*o) : json(nullptr);
      }
    } else if (*c_comb) {
      const SimplicialComplex c = load_complex();
      CombinatorialOptions copt{opt.limit_vertices, opt.budget, opt.act_mode()};
      report["rigid"] = is_rigid_combinatorial(c, copt);
      report["method"] = c.dim() == 1 ? "connectivity" : "phi-column-basis+act-free-orientation";
    } else if (*c_shift) {
      const SimplicialComplex c = load_complex();
      if (!is_pure(c)) {
        report["warnings"] = json::array({"complex is not pure"});
        err << "warning: complex is not pure\n";
      }
      const ShiftedComplex s = exterior_shift(c, extension_by_name(opt.order), seed, opt.prime);
      report["shifted"] = shifted_to_json(s);
      report["properties"] = shift_report_to_json(verify_shift_properties(c, s));
      const Simplex top = lgrc_top_tuple(c.vertex_count(), c.dim());
      report["top_tuple"] = simplex_to_json(top);
      report["top_tuple_member"] = s.complex.contains(top);
      report["rigid"] = is_pure(c) ? json(s.complex.contains(top)) : json(nullptr);
    } else if (*c_bounds) {
      const SimplicialComplex c = load_complex();
      report["f_vector"] = fvector_to_json(f_vector(c));
      report["audit"] = bound_report_to_json(audit_f_vector(c));
    } else if (*c_lgrc) {
      report["complex"] = complex_to_json(lgrc(arg_n, arg_d));
    } else if (*c_complete) {
      report["complex"] = complex_to_json(complete_complex(arg_n, arg_d));
    } else if (*c_gcert) {
      const SimplicialComplex c = load_complex();
      const GlobalCertificate cert = certify_globally_rigid(c, opt.depth);
      report["certificate"] = certificate_to_json(cert);
      if (cert.verdict == GlobalCertificate::Verdict::kCertified)
        report["replay_valid"] = replay_certificate(c, cert);
    } else if (*c_greplay) {
      json j = detail::read_json_input(input_path, in);
      SimplicialComplex c = complex_from_json(j.contains("complex") ? j["complex"] : j);
      json cj;
      if (!cert_path.empty()) {
        std::ifstream f(cert_path);
        if (!f) throw std::invalid_argument("cannot open certificate file: " + cert_path);
        cj = json::parse(f);
      } else if (j.contains("certificate")) {
        cj = j["certificate"];
      } else {
        throw std::invalid_argument("global-replay: no certificate given");
      }
      report["input"] = complex_to_json(c);
      report["valid"] = replay_certificate(c, certificate_from_json(cj));
    } else if (*c_analyze) {
      const SimplicialComplex c = load_complex();
      const bool pure = is_pure(c);
      const bool run_rigidity = pure || opt.ignore_impure;
      report["f_vector"] = fvector_to_json(f_vector(c));
      report["betti"] = betti_to_json(betti(c));
      report["pure"] = pure;

      std::optional<RigidityVerdict> verdict;
      std::optional<bool> shift_rigid;
      std::optional<bool> comb_rigid;
      std::optional<CrossCheckReport> cross;
      std::optional<BoundReport> bound_report;
      std::optional<GlobalCertificate> cert;

      if (run_rigidity) {
        verdict = is_locally_rigid(c, rnd, true);
        report["rigidity"] = verdict_to_json(*verdict);
        cross = cross_check_independence(c.facets(), c.vertex_count(), c.dim(), rnd);
        report["phi_cross_check"] = cross_check_to_json(*cross);
      } else {
        report["rigidity"] = json{{"skipped", "complex is not pure"}};
        report["phi_cross_check"] = json{{"skipped", "complex is not pure"}};
      }

      ShiftedComplex shifted = exterior_shift(c, extension_by_name(opt.order), seed, opt.prime);
      report["shift"] = json{{"shifted", shifted_to_json(shifted)},
                             {"properties", shift_report_to_json(verify_shift_properties(c, shifted))}};
      if (run_rigidity) {
        shift_rigid = shifted.complex.contains(lgrc_top_tuple(c.vertex_count(), c.dim()));
        if (opt.inject_fault) shift_rigid = !*shift_rigid;
        report["shift"]["rigid"] = *shift_rigid;
      }

      if (run_rigidity && c.dim() <= 2) {
        try {
          CombinatorialOptions copt{opt.limit_vertices, opt.budget, opt.act_mode()};
          comb_rigid = is_rigid_combinatorial(c, copt);
          report["combinatorial"] = json{{"rigid", *comb_rigid}};
        } catch (const std::exception& e) {
          report["combinatorial"] = json{{"skipped", e.what()}};
        }
      } else {
        report["combinatorial"] =
            json{{"skipped", run_rigidity ? "characterization known only for d <= 2" : "complex is not pure"}};
      }

      if (pure) {
        bound_report = audit_f_vector(c);
        report["bounds"] = bound_report_to_json(*bound_report);
        cert = certify_globally_rigid(c, opt.depth);
        report["global"] = certificate_to_json(*cert);
      } else {
        report["bounds"] = json{{"skipped", "complex is not pure"}};
        report["global"] = json{{"skipped", "complex is not pure"}};
      }

      std::vector<AgreementEntry> agreement;
      agreement.push_back({"rank_vs_shift", verdict && shift_rigid ? verdict->rigid == *shift_rigid : true,
                           verdict.has_value() && shift_rigid.has_value()});
      agreement.push_back({"rank_vs_combinatorial",
                           verdict && comb_rigid ? verdict->rigid == *comb_rigid : true,
                           verdict.has_value() && comb_rigid.has_value()});
      agreement.push_back({"independence_vs_phi", cross ? cross->agree : true, cross.has_value()});
      const bool certified = cert && cert->verdict == GlobalCertificate::Verdict::kCertified;
      agreement.push_back(
          {"global_implies_local", verdict ? !(certified && !verdict->rigid) : true, verdict.has_value() && cert.has_value()});
      const bool claims_basis = verdict && verdict->rigid &&
                                static_cast<long long>(c.facets().size()) == verdict->required;
      agreement.push_back({"basis_vs_bounds", bound_report ? !(claims_basis && !bound_report->all_met) : true,
                           verdict.has_value() && bound_report.has_value()});

      bool all_ok = true;
      report["agreement"] = agreement_to_json(agreement, all_ok);
      report["agreement_all_ok"] = all_ok;
      detail::emit(report, opt, out);
      if (!all_ok) {
        err << "theory-violation: cross-oracle agreement failed\n";
        return kExitDisagreement;
      }
      return kExitOk;
    }

    detail::emit(report, opt, out);
    return kExitOk;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace volrig::cli
