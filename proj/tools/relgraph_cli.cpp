// Command-line front end over the relative-graph machinery: analysis,
// morphism checking, pushouts, ideal lattices, admissibility and the exact
// matrix cross-check. Exit codes: 0 success or affirmative verdict, 1
// negative verdict, 2 input error, 3 internal-consistency failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relgraph/fock.hpp"
#include "relgraph/io.hpp"
#include "relgraph/pullback.hpp"

namespace {

using nlohmann::ordered_json;
using namespace relgraph;

ordered_json json_set(const VertexSet& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : s) {
    arr.push_back(v);
  }
  return arr;
}

ordered_json json_code(const IdealCode& c) {
  return ordered_json{{"H", json_set(c.h)}, {"B", json_set(c.b)}};
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

RelativeGraph load_input(const std::string& path) {
  RelativeGraph rg = load_relative_graph(path);
  auto viol = validate_relative(rg);
  if (!viol.empty()) {
    throw ParseError(path + ": " + viol.front());
  }
  return rg;
}

VertexSet parse_name_list(const std::string& csv) {
  VertexSet out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.insert(item);
    }
  }
  return out;
}

int run_analyze(const std::string& file, bool as_json) {
  RelativeGraph rg = load_relative_graph(file);
  auto viol = validate_relative(rg);
  const Graph& g = rg.graph;
  std::size_t bundles = 0;
  for (const auto& d : g.edges) {
    bundles += d.is_bundle() ? 1 : 0;
  }
  if (as_json) {
    ordered_json j;
    j["valid"] = viol.empty();
    j["violations"] = viol;
    j["vertices"] = json_set(g.vertices);
    j["edges"] = g.edges.size();
    j["bundles"] = bundles;
    j["regular"] = json_set(regular_vertices(g));
    j["singular"] = json_set(singular_vertices(g));
    j["sources"] = json_set(sources(g));
    j["infinite_receivers"] = json_set(infinite_receivers(g));
    j["A"] = json_set(rg.ck_vertices);
    emit(j);
  } else {
    std::cout << "vertices: " << g.vertices.size() << " "
              << format_set(g.vertices) << "\n";
    std::cout << "edges: " << g.edges.size() << " (bundles: " << bundles
              << ")\n";
    std::cout << "regular: " << format_set(regular_vertices(g)) << "\n";
    std::cout << "singular: " << format_set(singular_vertices(g)) << "\n";
    std::cout << "sources: " << format_set(sources(g)) << "\n";
    std::cout << "infinite receivers: " << format_set(infinite_receivers(g))
              << "\n";
    std::cout << "A: " << format_set(rg.ck_vertices) << "\n";
    if (viol.empty()) {
      std::cout << "status: valid\n";
    } else {
      std::cout << "status: invalid\n";
      for (const auto& m : viol) {
        std::cout << "  " << m << "\n";
      }
    }
  }
  return viol.empty() ? 0 : 1;
}

int run_check_morphism(const std::string& sub_file, const std::string& amb_file,
                       bool as_json) {
  RelativeGraph sub = load_input(sub_file);
  RelativeGraph amb = load_input(amb_file);
  auto viol = check_morphism(sub, amb);
  if (as_json) {
    emit(ordered_json{{"ok", viol.empty()}, {"violations", viol}});
  } else if (viol.empty()) {
    std::cout << "morphism: ok\n";
  } else {
    std::cout << "morphism: invalid\n";
    for (const auto& m : viol) {
      std::cout << "  " << m << "\n";
    }
  }
  return viol.empty() ? 0 : 1;
}

int run_pushout(const std::string& apex, const std::string& left,
                const std::string& right, const std::string& out_file,
                bool as_json) {
  PushoutDiagram d{load_input(apex), load_input(left), load_input(right)};
  auto viol = validate_diagram(d);
  if (!viol.empty()) {
    if (as_json) {
      emit(ordered_json{{"ok", false}, {"violations", viol}});
    } else {
      std::cout << "pushout: invalid diagram\n";
      for (const auto& m : viol) {
        std::cout << "  " << m << "\n";
      }
    }
    return 1;
  }
  PushoutResult res = compute_pushout(d);
  if (!out_file.empty()) {
    write_file(out_file, to_json_text(res.colimit));
  }
  if (as_json) {
    ordered_json j;
    j["ok"] = true;
    j["vertices"] = json_set(res.colimit.graph.vertices);
    ordered_json edges = ordered_json::array();
    for (const auto& e : res.colimit.graph.edges) {
      edges.push_back(ordered_json{{"name", e.name},
                                   {"src", e.src},
                                   {"rng", e.rng},
                                   {"card", e.is_bundle() ? "inf" : "1"}});
    }
    j["edges"] = edges;
    j["A"] = json_set(res.colimit.ck_vertices);
    emit(j);
  } else {
    std::cout << "pushout: ok\n";
    std::cout << "vertices: " << format_set(res.colimit.graph.vertices)
              << "\n";
    std::cout << "edges:";
    for (const auto& e : res.colimit.graph.edges) {
      std::cout << " " << e.name << (e.is_bundle() ? "[inf]" : "");
    }
    std::cout << "\n";
    std::cout << "A: " << format_set(res.colimit.ck_vertices) << "\n";
    if (!out_file.empty()) {
      std::cout << "written: " << out_file << "\n";
    }
  }
  return 0;
}

int run_ideals(const std::string& file, const std::optional<std::string>& a_csv,
               const std::string& dot_file, bool as_json) {
  RelativeGraph ctx = load_relative_graph(file);
  if (a_csv) {
    ctx.ck_vertices = parse_name_list(*a_csv);
  }
  auto viol = validate_relative(ctx);
  if (!viol.empty()) {
    throw ParseError(file + ": " + viol.front());
  }
  IdealLattice lat = ideal_lattice(ctx);
  if (!dot_file.empty()) {
    write_file(dot_file, lattice_dot(lat));
  }
  if (as_json) {
    ordered_json j;
    j["A"] = json_set(ctx.ck_vertices);
    ordered_json codes = ordered_json::array();
    for (const auto& c : lat.codes) {
      codes.push_back(json_code(c));
    }
    j["codes"] = codes;
    ordered_json covers = ordered_json::array();
    for (const auto& [lo, hi] : lat.covers) {
      covers.push_back(ordered_json::array({lo, hi}));
    }
    j["covers"] = covers;
    j["bottom"] = lat.bottom;
    j["top"] = lat.top;
    emit(j);
  } else {
    std::cout << "A: " << format_set(ctx.ck_vertices) << "\n";
    std::cout << "codes: " << lat.codes.size() << "\n";
    for (std::size_t i = 0; i < lat.codes.size(); ++i) {
      std::cout << "  [" << i << "] " << format_code(lat.codes[i]) << "\n";
    }
    std::cout << "covers:\n";
    for (const auto& [lo, hi] : lat.covers) {
      std::cout << "  [" << lo << "] < [" << hi << "]\n";
    }
    std::cout << "bottom: [" << lat.bottom << "]\n";
    std::cout << "top: [" << lat.top << "]\n";
    if (!dot_file.empty()) {
      std::cout << "written: " << dot_file << "\n";
    }
  }
  return 0;
}

int run_admissible(const std::string& apex, const std::string& left,
                   const std::string& right, bool suggest, bool as_json) {
  PushoutDiagram d{load_input(apex), load_input(left), load_input(right)};
  auto viol = validate_diagram(d);
  if (!viol.empty()) {
    throw ParseError("invalid diagram: " + viol.front());
  }
  PushoutResult res = compute_pushout(d);
  AdmissibilityReport rep = check_admissibility(d, res);
  std::optional<VertexSet> suggested;
  if (suggest) {
    suggested = suggest_a0(d);
  }
  if (as_json) {
    ordered_json j;
    j["admissible"] = rep.admissible;
    j["apex_within_legs"] = rep.apex_within_legs;
    j["apex_matches_induced"] = rep.apex_matches_induced;
    j["singular_cover"] = rep.singular_cover;
    j["ideals_match"] = rep.ideals_match;
    if (rep.witness) {
      j["witness"] = *rep.witness;
    }
    if (suggested) {
      j["suggested_A0"] = json_set(*suggested);
    }
    emit(j);
  } else {
    std::cout << (rep.admissible ? "admissible\n" : "not admissible\n");
    if (rep.witness) {
      std::cout << "witness: " << *rep.witness << "\n";
    }
    if (suggested) {
      std::cout << "suggested A0: " << format_set(*suggested) << "\n";
    }
  }
  return rep.admissible ? 0 : 1;
}

int run_fock(const std::string& file, bool dump, bool as_json) {
  RelativeGraph ctx = load_input(file);
  MatrixRep rep = build_representation(ctx);
  auto blocks = block_dimensions(ctx);
  auto violations = verify_ck(rep, ctx);
  auto dump_matrix = [&](const IntMatrix& m) {
    ordered_json trips = ordered_json::array();
    std::ostringstream text;
    for (int k = 0; k < m.outerSize(); ++k) {
      for (IntMatrix::InnerIterator it(m, k); it; ++it) {
        if (it.value() != 0) {
          trips.push_back(
              ordered_json::array({it.row(), it.col(), it.value()}));
          text << it.row() << " " << it.col() << " " << it.value() << "\n";
        }
      }
    }
    return std::make_pair(trips, text.str());
  };
  if (as_json) {
    ordered_json j;
    ordered_json b = ordered_json::object();
    for (const auto& [v, n] : blocks) {
      b[v] = n;
    }
    j["blocks"] = b;
    j["dimension"] = algebra_dimension(ctx);
    j["relations_ok"] = violations.empty();
    j["violations"] = violations;
    if (dump) {
      ordered_json mats = ordered_json::object();
      for (const auto& [v, m] : rep.vertex_projections) {
        mats["P_" + v] = dump_matrix(m).first;
      }
      for (const auto& [e, m] : rep.edge_isometries) {
        mats["S_" + e] = dump_matrix(m).first;
      }
      j["matrices"] = mats;
    }
    emit(j);
  } else {
    std::cout << "basis: " << rep.basis.paths.size() << " paths\n";
    std::cout << "blocks:\n";
    for (const auto& [v, n] : blocks) {
      std::cout << "  " << v << ": " << n << "\n";
    }
    std::cout << "dimension: " << algebra_dimension(ctx) << "\n";
    if (violations.empty()) {
      std::cout << "relations: ok\n";
    } else {
      std::cout << "relations: violated\n";
      for (const auto& m : violations) {
        std::cout << "  " << m << "\n";
      }
    }
    if (dump) {
      for (const auto& [v, m] : rep.vertex_projections) {
        std::cout << "matrix P_" << v << ":\n" << dump_matrix(m).second;
      }
      for (const auto& [e, m] : rep.edge_isometries) {
        std::cout << "matrix S_" << e << ":\n" << dump_matrix(m).second;
      }
    }
  }
  return violations.empty() ? 0 : 1;
}

int run_verify_pullback(const std::string& apex, const std::string& left,
                        const std::string& right, bool as_json) {
  PushoutDiagram d{load_input(apex), load_input(left), load_input(right)};
  auto viol = validate_diagram(d);
  if (!viol.empty()) {
    throw ParseError("invalid diagram: " + viol.front());
  }
  PushoutResult res = compute_pushout(d);
  PullbackReport rep = verify_pullback(d, res);
  AdmissibilityReport adm = check_admissibility(d, res);
  internal_check(rep.pullback == adm.admissible,
                 "verify-pullback: matrix verdict disagrees with "
                 "admissibility");
  if (as_json) {
    ordered_json j;
    j["pullback"] = rep.pullback;
    j["admissible"] = adm.admissible;
    j["left_support"] = json_set(rep.left_support);
    j["right_support"] = json_set(rep.right_support);
    j["sum_support"] = json_set(rep.sum_support);
    j["apex_support"] = json_set(rep.apex_support);
    j["algebra_dim"] = rep.algebra_dim;
    j["left_dim"] = rep.left_dim;
    j["right_dim"] = rep.right_dim;
    j["quotient_dim"] = rep.quotient_dim;
    emit(j);
  } else {
    std::cout << "left support: " << format_set(rep.left_support)
              << " dim " << rep.left_dim << "\n";
    std::cout << "right support: " << format_set(rep.right_support)
              << " dim " << rep.right_dim << "\n";
    std::cout << "sum support: " << format_set(rep.sum_support) << "\n";
    std::cout << "apex support: " << format_set(rep.apex_support) << "\n";
    std::cout << "algebra dim: " << rep.algebra_dim << " = " << rep.left_dim
              << " + " << rep.right_dim << " + " << rep.quotient_dim << "\n";
    std::cout << (rep.pullback ? "pullback: yes\n" : "pullback: no\n");
  }
  return rep.pullback ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative graph algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "structured JSON output");

  std::string file, sub_file, amb_file, apex, left, right;
  std::string out_file, dot_file;
  std::optional<std::string> a_csv;
  bool suggest = false;
  bool dump = false;

  auto* analyze = app.add_subcommand("analyze", "validate and classify a graph");
  analyze->add_option("file", file)->required();

  auto* morph = app.add_subcommand("check-morphism",
                                   "check a relative-graph inclusion");
  morph->add_option("sub", sub_file)->required();
  morph->add_option("amb", amb_file)->required();

  auto* push = app.add_subcommand("pushout", "compute the pushout of a span");
  push->add_option("apex", apex)->required();
  push->add_option("left", left)->required();
  push->add_option("right", right)->required();
  push->add_option("--out", out_file, "write the colimit to a file");

  auto* ideals = app.add_subcommand("ideals",
                                    "enumerate the gauge-invariant ideal "
                                    "lattice");
  ideals->add_option("file", file)->required();
  std::string a_csv_raw;
  auto* a_opt = ideals->add_option("--A", a_csv_raw,
                                   "comma-separated CK vertices (overrides "
                                   "the file)");
  ideals->add_option("--dot", dot_file, "write the lattice as DOT");

  auto* adm = app.add_subcommand("admissible",
                                 "decide admissibility of a span");
  adm->add_option("apex", apex)->required();
  adm->add_option("left", left)->required();
  adm->add_option("right", right)->required();
  adm->add_flag("--suggest", suggest, "print the repaired apex CK set");

  auto* fock = app.add_subcommand("fock",
                                  "exact matrix model of a finite acyclic "
                                  "relative graph");
  fock->add_option("file", file)->required();
  fock->add_flag("--dump-matrices", dump, "dump matrices as row col value");

  auto* vp = app.add_subcommand("verify-pullback",
                                "matrix cross-check of the pullback verdict");
  vp->add_option("apex", apex)->required();
  vp->add_option("left", left)->required();
  vp->add_option("right", right)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      return run_analyze(file, as_json);
    }
    if (*morph) {
      return run_check_morphism(sub_file, amb_file, as_json);
    }
    if (*push) {
      return run_pushout(apex, left, right, out_file, as_json);
    }
    if (*ideals) {
      if (*a_opt) {
        a_csv = a_csv_raw;
      }
      return run_ideals(file, a_csv, dot_file, as_json);
    }
    if (*adm) {
      return run_admissible(apex, left, right, suggest, as_json);
    }
    if (*fock) {
      return run_fock(file, dump, as_json);
    }
    if (*vp) {
      return run_verify_pullback(apex, left, right, as_json);
    }
  } catch (const relgraph::InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const relgraph::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
