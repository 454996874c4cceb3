#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relgraph/ideal_lattice.hpp"
#include "relgraph/pushout.hpp"

namespace relgraph {

//! The four ideal codes a pushout diagram induces in the colimit context:
//! one per leg, one for the apex, and the code of the sum of the two leg
//! ideals (the apex complement relativized at the induced apex CK set).
struct DiagramCodes {
  IdealCode apex;
  IdealCode left;
  IdealCode right;
  IdealCode sum;
};

inline DiagramCodes diagram_codes(const PushoutDiagram& d,
                                  const PushoutResult& res) {
  const Graph& e = res.colimit.graph;
  const VertexSet& a = res.colimit.ck_vertices;
  auto code_for = [&](const RelativeGraph& part, const VertexSet& ck) {
    return IdealCode{complement_vertices(part.graph, e),
                     set_difference(ck, a)};
  };
  return DiagramCodes{
      code_for(d.apex, d.apex.ck_vertices),
      code_for(d.left, d.left.ck_vertices),
      code_for(d.right, d.right.ck_vertices),
      code_for(d.apex, induced_a0(d))};
}

//! The two leg ideals annihilate each other; their coded sets are disjoint
//! for every valid pushout, so a negative answer is a bug, not a verdict.
inline bool check_disjoint(const PushoutDiagram& d, const PushoutResult& res) {
  DiagramCodes dc = diagram_codes(d, res);
  internal_check(code_disjoint(dc.left, dc.right, res.colimit),
                 "check_disjoint: leg ideals are not disjoint");
  return true;
}

//! The sum of the leg ideals is the ideal coded by `sum`; holds for every
//! valid pushout and is asserted.
inline bool check_union(const PushoutDiagram& d, const PushoutResult& res) {
  DiagramCodes dc = diagram_codes(d, res);
  IdealCode u = canonical_union({dc.left, dc.right}, res.colimit);
  internal_check(u == dc.sum,
                 "check_union: sum of leg ideals has the wrong code");
  return true;
}

//! The sum ideal sits inside the apex ideal; holds for every valid pushout
//! and is asserted.
inline bool check_containment(const PushoutDiagram& d,
                              const PushoutResult& res) {
  DiagramCodes dc = diagram_codes(d, res);
  internal_check(code_subset(dc.sum, dc.apex, res.colimit),
                 "check_containment: sum ideal escapes the apex ideal");
  return true;
}

//! Verdict on whether the pushout of relative graphs induces a pullback of
//! the corresponding algebras, with each equivalent formulation computed
//! independently. The flags must agree; disagreement is a bug.
struct AdmissibilityReport {
  bool admissible = false;
  //! The apex CK set is covered by the leg CK sets.
  bool apex_within_legs = false;
  //! The apex CK set equals the one induced by the legs.
  bool apex_matches_induced = false;
  //! Apex CK vertices singular in one leg are relativized in the other, and
  //! those regular in the colimit are relativized in some leg.
  bool singular_cover = false;
  //! The apex ideal and the sum of the leg ideals code the same set.
  bool ideals_match = false;
  //! Least apex CK vertex relativized in neither leg; present iff not
  //! admissible.
  std::optional<VertexId> witness;
};

inline AdmissibilityReport check_admissibility(const PushoutDiagram& d,
                                               const PushoutResult& res) {
  const VertexSet& a0 = d.apex.ck_vertices;
  const VertexSet& a1 = d.left.ck_vertices;
  const VertexSet& a2 = d.right.ck_vertices;

  AdmissibilityReport rep;
  rep.apex_within_legs = is_subset(a0, set_union(a1, a2));
  rep.apex_matches_induced = a0 == induced_a0(d);
  rep.singular_cover =
      is_subset(set_intersection(a0, singular_vertices(d.left.graph)), a2) &&
      is_subset(set_intersection(a0, singular_vertices(d.right.graph)), a1) &&
      is_subset(set_intersection(a0, regular_vertices(res.colimit.graph)),
                set_union(a1, a2));
  DiagramCodes dc = diagram_codes(d, res);
  rep.ideals_match = code_subset(dc.apex, dc.sum, res.colimit) &&
                     code_subset(dc.sum, dc.apex, res.colimit);

  internal_check(rep.apex_within_legs == rep.apex_matches_induced &&
                     rep.apex_within_legs == rep.singular_cover &&
                     rep.apex_within_legs == rep.ideals_match,
                 "check_admissibility: equivalent conditions disagree");
  rep.admissible = rep.apex_within_legs;
  if (!rep.admissible) {
    rep.witness = *set_difference(a0, set_union(a1, a2)).begin();
  }
  return rep;
}

//! Specialized verdict for graph-algebra diagrams (every CK set is the full
//! regular set): admissible exactly when no apex-regular vertex is singular
//! in both legs. Agreement with the general verdict is asserted.
inline bool ck_admissibility(const PushoutDiagram& d) {
  for (const auto* part : {&d.apex, &d.left, &d.right}) {
    if (part->ck_vertices != regular_vertices(part->graph)) {
      throw std::invalid_argument(
          "ck_admissibility: a CK set is not the full regular set");
    }
  }
  bool predicate =
      set_intersection(
          set_intersection(singular_vertices(d.left.graph),
                           singular_vertices(d.right.graph)),
          regular_vertices(d.apex.graph))
          .empty();
  AdmissibilityReport rep = check_admissibility(d, compute_pushout(d));
  internal_check(rep.admissible == predicate,
                 "ck_admissibility: disagrees with the general verdict");
  return predicate;
}

//! The unique apex CK set making the diagram admissible: the one the legs
//! induce. The repaired diagram is rebuilt and its admissibility asserted.
inline VertexSet suggest_a0(const PushoutDiagram& d) {
  VertexSet suggested = set_intersection(
      set_union(d.left.ck_vertices, d.right.ck_vertices),
      d.apex.graph.vertices);
  if (!is_subset(suggested, regular_vertices(d.apex.graph))) {
    throw std::invalid_argument(
        "suggest_a0: induced set is not regular in the apex, no admissible "
        "choice exists");
  }
  PushoutDiagram repaired = d;
  repaired.apex.ck_vertices = suggested;
  auto viol = validate_diagram(repaired);
  if (!viol.empty()) {
    throw std::invalid_argument("suggest_a0: diagram invalid beyond the apex "
                                "CK set: " +
                                viol.front());
  }
  AdmissibilityReport rep =
      check_admissibility(repaired, compute_pushout(repaired));
  internal_check(rep.admissible, "suggest_a0: repaired diagram inadmissible");
  return suggested;
}

}  // namespace relgraph
