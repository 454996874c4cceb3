#include <catch2/catch_amalgamated.hpp>

#include "relgraph/fock.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"

using namespace relgraph;
using namespace relgraph::testing;

TEST_CASE("path_basis and block dimensions on the chain") {
  RelativeGraph toeplitz{chain_graph(), {}};
  MatrixRep rep = build_representation(toeplitz);
  CHECK(rep.basis.paths.size() == 3);
  auto blocks = block_dimensions(toeplitz);
  CHECK(blocks.at("u") == 1);
  CHECK(blocks.at("v") == 2);
  CHECK(algebra_dimension(toeplitz) == 5);

  RelativeGraph ck{chain_graph(), {"u"}};
  CHECK(build_representation(ck).basis.paths.size() == 2);
  CHECK(algebra_dimension(ck) == 4);

  RelativeGraph empty{Graph{}, {}};
  CHECK(build_representation(empty).basis.paths.empty());
  CHECK(algebra_dimension(empty) == 0);
}

TEST_CASE("rejects cycles and bundles") {
  CHECK_THROWS_AS(build_representation(RelativeGraph{loop_graph(), {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_representation(RelativeGraph{twin_bundles_graph(), {}}),
                  std::invalid_argument);
}

TEST_CASE("verify_ck accepts built representations") {
  for (const auto& a : {VertexSet{}, VertexSet{"u"}}) {
    RelativeGraph ctx{chain_graph(), a};
    CHECK(verify_ck(build_representation(ctx), ctx).empty());
  }
}

TEST_CASE("verify_ck flags a transposed isometry") {
  RelativeGraph ctx{chain_graph(), {}};
  MatrixRep rep = build_representation(ctx);
  rep.edge_isometries["e"] = IntMatrix(rep.edge_isometries["e"].transpose());
  auto viol = verify_ck(rep, ctx);
  REQUIRE_FALSE(viol.empty());
  bool ck3_flagged = false;
  for (const auto& m : viol) {
    if (m.find("CK3") != std::string::npos) {
      ck3_flagged = true;
    }
  }
  CHECK(ck3_flagged);
}

TEST_CASE("verify_ck flags a missing gap projection") {
  // impose the summation relation in the matrices but not in the context:
  // the gap at the regular vertex u must be reported as vanished
  RelativeGraph ck{chain_graph(), {"u"}};
  RelativeGraph toeplitz{chain_graph(), {}};
  MatrixRep rep = build_representation(ck);
  auto viol = verify_ck(rep, toeplitz);
  REQUIRE_FALSE(viol.empty());
  bool gap_flagged = false;
  for (const auto& m : viol) {
    if (m.find("gap") != std::string::npos && m.find("u") != std::string::npos) {
      gap_flagged = true;
    }
  }
  CHECK(gap_flagged);
}

TEST_CASE("gap projection is dropped exactly at CK vertices") {
  // the same matrices satisfy the relaxed relations when no summation is
  // required: relations never mention TCK4 at vertices outside the CK set
  RelativeGraph toeplitz{chain_graph(), {}};
  MatrixRep rep = build_representation(toeplitz);
  CHECK(verify_ck(rep, toeplitz).empty());
}

TEST_CASE("ideal_support and ideal_dimension") {
  RelativeGraph toeplitz{chain_graph(), {}};
  CHECK(ideal_support(IdealCode{{"v"}, {}}, toeplitz) == VertexSet{"v"});
  CHECK(ideal_dimension(IdealCode{{"v"}, {}}, toeplitz) == 4);
  CHECK(ideal_support(IdealCode{{}, {}}, toeplitz).empty());
  CHECK(ideal_dimension(IdealCode{{}, {}}, toeplitz) == 0);

  RelativeGraph ck{chain_graph(), {"u"}};
  CHECK(ideal_support(IdealCode{{"u", "v"}, {}}, ck) == VertexSet{"v"});
  CHECK(ideal_dimension(IdealCode{{"u", "v"}, {}}, ck) == 4);
}

TEST_CASE("support map preserves and reflects code inclusion on acyclic "
          "contexts") {
  Rng rng(8501);
  for (int i = 0; i < 25; ++i) {
    RelativeGraph ctx = random_acyclic_relative(rng);
    auto codes = ideal_codes(ctx);
    if (codes.size() > 10) {
      codes.resize(10);
    }
    for (const auto& c1 : codes) {
      for (const auto& c2 : codes) {
        CHECK(code_subset(c1, c2, ctx) ==
              is_subset(ideal_support(c1, ctx), ideal_support(c2, ctx)));
      }
    }
  }
}

TEST_CASE("verify_pullback on the cherry spans") {
  PushoutDiagram d = cherry_span();
  PushoutResult res = compute_pushout(d);
  PullbackReport rep = verify_pullback(d, res);
  CHECK(rep.left_support == VertexSet{"w"});
  CHECK(rep.right_support == VertexSet{"v"});
  CHECK(rep.sum_support == VertexSet{"v", "w"});
  CHECK(rep.apex_support == VertexSet{"v", "w"});
  CHECK(rep.pullback);
  CHECK(rep.algebra_dim == 9);
  CHECK(rep.left_dim + rep.right_dim + rep.quotient_dim == 9);
  CHECK(check_admissibility(d, res).admissible);

  PushoutDiagram bad = cherry_span_inadmissible();
  PushoutResult bres = compute_pushout(bad);
  PullbackReport brep = verify_pullback(bad, bres);
  CHECK_FALSE(brep.pullback);
  CHECK(brep.apex_support == VertexSet{"u", "v", "w"});
  CHECK(brep.sum_support == VertexSet{"v", "w"});
  CHECK(brep.algebra_dim == 13);
  CHECK(brep.left_dim == 4);
  CHECK(brep.right_dim == 4);
  CHECK(brep.quotient_dim == 5);
  CHECK_FALSE(check_admissibility(bad, bres).admissible);
}

TEST_CASE("degenerate span has zero ideals") {
  RelativeGraph rg{chain_graph(), {"u"}};
  PushoutDiagram d{rg, rg, rg};
  PushoutResult res = compute_pushout(d);
  PullbackReport rep = verify_pullback(d, res);
  CHECK(rep.left_support.empty());
  CHECK(rep.right_support.empty());
  CHECK(rep.left_dim == 0);
  CHECK(rep.right_dim == 0);
  CHECK(rep.pullback);
}

TEST_CASE("verify_pullback verdict matches admissibility on generated "
          "acyclic spans") {
  Rng rng(8502);
  int pullbacks = 0;
  int obstructions = 0;
  for (int i = 0; i < 60; ++i) {
    PushoutDiagram d = random_acyclic_span(rng);
    PushoutResult res = compute_pushout(d);
    PullbackReport rep = verify_pullback(d, res);
    AdmissibilityReport adm = check_admissibility(d, res);
    CHECK(rep.pullback == adm.admissible);
    (rep.pullback ? pullbacks : obstructions)++;
  }
  CHECK(pullbacks > 0);
}

TEST_CASE("dimension formula against independent path counting") {
  Rng rng(8503);
  for (int i = 0; i < 40; ++i) {
    RelativeGraph ctx = random_acyclic_relative(rng);
    MatrixRep rep = build_representation(ctx);
    CHECK(verify_ck(rep, ctx).empty());
    // count paths by source with the generic enumerator
    std::map<VertexId, std::int64_t> counted;
    for (const auto& p :
         enumerate_paths(ctx.graph, ctx.graph.vertices.size() + 2, 1)) {
      ++counted[path_source(ctx.graph, p)];
    }
    std::int64_t total = 0;
    for (const auto& [v, n] : counted) {
      if (!ctx.ck_vertices.count(v)) {
        total += n * n;
      }
    }
    CHECK(algebra_dimension(ctx) == total);
    CHECK(static_cast<std::int64_t>(rep.basis.paths.size() *
                                    rep.basis.paths.size()) >=
          algebra_dimension(ctx));
  }
}
