#pragma once

#include <string>
#include <vector>

#include "relgraph/relative.hpp"

namespace relgraph {

//! A span of relative-graph inclusions apex -> left, apex -> right.
//! Amalgamation is by shared names, so the two legs must overlap exactly in
//! the apex: any other shared vertex or edge name is rejected rather than
//! renamed.
struct PushoutDiagram {
  RelativeGraph apex;
  RelativeGraph left;
  RelativeGraph right;

  friend bool operator==(const PushoutDiagram&,
                         const PushoutDiagram&) = default;
};

inline std::vector<std::string> validate_diagram(const PushoutDiagram& d) {
  std::vector<std::string> out;
  for (const auto& m : check_morphism(d.apex, d.left)) {
    out.push_back("left leg: " + m);
  }
  for (const auto& m : check_morphism(d.apex, d.right)) {
    out.push_back("right leg: " + m);
  }
  if (!out.empty()) {
    return out;
  }
  VertexSet stray_v = set_difference(
      set_intersection(d.left.graph.vertices, d.right.graph.vertices),
      d.apex.graph.vertices);
  if (!stray_v.empty()) {
    out.push_back("shared vertex " + *stray_v.begin() +
                  " does not belong to the apex");
  }
  for (const auto& e : d.left.graph.edges) {
    // Names shared by the legs must come from the apex; the leg checks above
    // already force identical declarations there.
    if (d.right.graph.find_edge(e.name) != nullptr &&
        d.apex.graph.find_edge(e.name) == nullptr) {
      out.push_back("shared edge " + e.name + " does not belong to the apex");
      break;
    }
  }
  return out;
}

struct PushoutResult {
  RelativeGraph colimit;
  InclusionMorphism left_leg;
  InclusionMorphism right_leg;
};

//! The relativization the legs induce on the apex: the part of either leg's
//! CK set that lives on apex vertices. For a valid diagram this is contained
//! in the apex CK set, and it is the only admissible choice of apex CK set.
inline VertexSet induced_a0(const PushoutDiagram& d) {
  VertexSet out = set_intersection(
      set_union(d.left.ck_vertices, d.right.ck_vertices),
      d.apex.graph.vertices);
  auto viol = validate_diagram(d);
  if (!viol.empty()) {
    throw std::invalid_argument("induced_a0: invalid diagram: " +
                                viol.front());
  }
  internal_check(is_subset(out, d.apex.ck_vertices),
                 "induced_a0: induced set escapes the apex CK set");
  return out;
}

//! Colimit of the span: the union graph, relativized at the leg CK vertices
//! away from the apex plus the vertices both legs relativize. The proof
//! obligations (the CK set is regular in the colimit, both legs are
//! morphisms into it, and the legs' complements are disjoint) are asserted.
inline PushoutResult compute_pushout(const PushoutDiagram& d) {
  auto viol = validate_diagram(d);
  if (!viol.empty()) {
    throw std::invalid_argument("compute_pushout: " + viol.front());
  }

  VertexSet verts = set_union(d.left.graph.vertices, d.right.graph.vertices);
  std::vector<EdgeDecl> edges = d.left.graph.edges;
  for (const auto& e : d.right.graph.edges) {
    if (d.left.graph.find_edge(e.name) == nullptr) {
      edges.push_back(e);
    }
  }
  Graph colimit_graph = make_graph(std::move(verts), std::move(edges));

  const VertexSet& apex_v = d.apex.graph.vertices;
  VertexSet a = set_union(
      set_union(set_difference(d.left.ck_vertices, apex_v),
                set_difference(d.right.ck_vertices, apex_v)),
      set_intersection(d.left.ck_vertices, d.right.ck_vertices));

  internal_check(is_subset(a, regular_vertices(colimit_graph)),
                 "compute_pushout: colimit CK set is not regular");
  RelativeGraph colimit{std::move(colimit_graph), std::move(a)};
  internal_check(check_morphism(d.left, colimit).empty(),
                 "compute_pushout: left leg into the colimit fails");
  internal_check(check_morphism(d.right, colimit).empty(),
                 "compute_pushout: right leg into the colimit fails");
  internal_check(
      set_intersection(complement_vertices(d.left.graph, colimit.graph),
                       complement_vertices(d.right.graph, colimit.graph))
          .empty(),
      "compute_pushout: leg complements intersect");
  return PushoutResult{colimit,
                       InclusionMorphism{d.left, colimit},
                       InclusionMorphism{d.right, colimit}};
}

//! The mediating inclusion of the colimit into a cocone tip. The cocone legs
//! are the name inclusions of the diagram legs into `tip`; they must be
//! morphisms. That the induced inclusion is again a morphism is part of the
//! pushout theorem and is asserted.
inline InclusionMorphism mediating(const PushoutDiagram& d,
                                   const PushoutResult& res,
                                   const RelativeGraph& tip) {
  auto lv = check_morphism(d.left, tip);
  if (!lv.empty()) {
    throw std::invalid_argument("mediating: left cocone leg invalid: " +
                                lv.front());
  }
  auto rv = check_morphism(d.right, tip);
  if (!rv.empty()) {
    throw std::invalid_argument("mediating: right cocone leg invalid: " +
                                rv.front());
  }
  InclusionMorphism phi{res.colimit, tip};
  internal_check(check_morphism(phi.sub, phi.amb).empty(),
                 "mediating: induced inclusion is not a morphism");
  return phi;
}

}  // namespace relgraph
