#pragma once

// Shared hand-built instances used across the test suites: the two
// three-vertex spans over a loop apex (one where the shared vertex breaks on
// both legs, one where a leg keeps it regular), small classics, and the
// acyclic spans for the matrix model.

#include "relgraph/pushout.hpp"

namespace relgraph::testing {

inline EdgeDecl edge(std::string name, VertexId src, VertexId rng) {
  return EdgeDecl{std::move(name), std::move(src), std::move(rng),
                  Cardinality::one};
}

inline EdgeDecl bundle(std::string name, VertexId src, VertexId rng) {
  return EdgeDecl{std::move(name), std::move(src), std::move(rng),
                  Cardinality::countably_infinite};
}

inline Graph loop_graph() { return make_graph({"v"}, {edge("d", "v", "v")}); }

inline Graph chain_graph() {
  return make_graph({"u", "v"}, {edge("e", "v", "u")});
}

inline Graph apex_loop_graph() {
  return make_graph({"u"}, {edge("d", "u", "u")});
}

//! Loop at u plus one feeder declaration into it.
inline Graph loop_with_feeder(const std::string& name, const VertexId& from,
                              Cardinality card) {
  return make_graph({"u", from},
                    {edge("d", "u", "u"), EdgeDecl{name, from, "u", card}});
}

//! Loop at u fed by infinite families from both v and w: u is an infinite
//! receiver everywhere outside the apex.
inline Graph twin_bundles_graph() {
  return make_graph({"u", "v", "w"},
                    {edge("d", "u", "u"), bundle("e", "v", "u"),
                     bundle("f", "w", "u")});
}

//! As above but with a single edge from v, so u stays regular on that side.
inline Graph one_bundle_graph() {
  return make_graph({"u", "v", "w"},
                    {edge("d", "u", "u"), edge("e", "v", "u"),
                     bundle("f", "w", "u")});
}

inline Graph bundle_feeder_v_graph() {
  return loop_with_feeder("e", "v", Cardinality::countably_infinite);
}

inline Graph bundle_feeder_w_graph() {
  return loop_with_feeder("f", "w", Cardinality::countably_infinite);
}

inline Graph single_feeder_v_graph() {
  return loop_with_feeder("e", "v", Cardinality::one);
}

//! Span with every CK set the full regular set whose shared vertex breaks
//! on both legs; not admissible.
inline PushoutDiagram twin_bundles_span() {
  return PushoutDiagram{
      RelativeGraph{apex_loop_graph(), {"u"}},
      RelativeGraph{bundle_feeder_v_graph(), {}},
      RelativeGraph{bundle_feeder_w_graph(), {}}};
}

//! Span with every CK set the full regular set whose shared vertex stays
//! regular on the single-edge leg; admissible.
inline PushoutDiagram one_bundle_span() {
  return PushoutDiagram{
      RelativeGraph{apex_loop_graph(), {"u"}},
      RelativeGraph{single_feeder_v_graph(), {"u"}},
      RelativeGraph{bundle_feeder_w_graph(), {}}};
}

// Acyclic span: a bare apex vertex, each leg feeding it one edge.
inline PushoutDiagram cherry_span() {
  return PushoutDiagram{
      RelativeGraph{make_graph({"u"}, {}), {}},
      RelativeGraph{make_graph({"u", "v"}, {edge("e", "v", "u")}), {}},
      RelativeGraph{make_graph({"u", "w"}, {edge("f", "w", "u")}), {}}};
}

// Acyclic span whose apex already receives an edge, relativized at the apex
// only; the legs induce nothing, so the diagram is not admissible.
inline PushoutDiagram cherry_span_inadmissible() {
  Graph apex = make_graph({"u", "z"}, {edge("g", "z", "u")});
  Graph left = make_graph({"u", "v", "z"},
                          {edge("e", "v", "u"), edge("g", "z", "u")});
  Graph right = make_graph({"u", "w", "z"},
                           {edge("f", "w", "u"), edge("g", "z", "u")});
  return PushoutDiagram{RelativeGraph{apex, {"u"}},
                        RelativeGraph{left, {}},
                        RelativeGraph{right, {}}};
}

}  // namespace relgraph::testing
