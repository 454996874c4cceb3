#pragma once

#include <string>
#include <vector>

#include "relgraph/graph.hpp"

namespace relgraph {

//! A graph together with the set of regular vertices at which the
//! Cuntz-Krieger summation relation is imposed. The empty set presents the
//! Toeplitz algebra of the graph, the full regular set the graph algebra.
struct RelativeGraph {
  Graph graph;
  VertexSet ck_vertices;

  friend bool operator==(const RelativeGraph&, const RelativeGraph&) = default;
};

//! Empty result means ck_vertices is a subset of the regular vertices of a
//! valid graph; otherwise one message per offending entity.
inline std::vector<std::string> validate_relative(const RelativeGraph& rg) {
  std::vector<std::string> out = validate_graph(rg.graph);
  for (const auto& v : rg.ck_vertices) {
    if (!rg.graph.has_vertex(v)) {
      out.push_back("ck vertex " + v + ": not a vertex of the graph");
    } else if (!is_regular(rg.graph, v)) {
      out.push_back("ck vertex " + v + ": singular (" +
                    (is_source(rg.graph, v) ? "source" : "infinite receiver") +
                    ")");
    }
  }
  return out;
}

//! Morphisms of relative graphs are literal name-preserving inclusions of
//! the subgraph into the ambient graph; the pair determines the morphism.
struct InclusionMorphism {
  RelativeGraph sub;
  RelativeGraph amb;

  friend bool operator==(const InclusionMorphism&,
                         const InclusionMorphism&) = default;
};

//! Ambient vertices not present in the subgraph.
inline VertexSet complement_vertices(const Graph& sub, const Graph& amb) {
  return set_difference(amb.vertices, sub.vertices);
}

//! Checks that sub -> amb is a morphism of relative graphs: a name-level
//! inclusion whose complement vertex set is hereditary in the ambient graph,
//! which is full on edges between retained vertices, and whose CK set
//! contains every ambient CK vertex it retains. Each failed condition is
//! reported once with its lexicographically least witness.
inline std::vector<std::string> check_morphism(const RelativeGraph& sub,
                                               const RelativeGraph& amb) {
  std::vector<std::string> out;
  for (const auto& m : validate_relative(sub)) {
    out.push_back("subgraph: " + m);
  }
  for (const auto& m : validate_relative(amb)) {
    out.push_back("ambient: " + m);
  }
  if (!out.empty()) {
    return out;
  }

  for (const auto& v : sub.graph.vertices) {
    if (!amb.graph.has_vertex(v)) {
      out.push_back("vertex " + v + ": missing from the ambient graph");
      break;
    }
  }
  for (const auto& d : sub.graph.edges) {
    const EdgeDecl* a = amb.graph.find_edge(d.name);
    if (a == nullptr) {
      out.push_back("edge " + d.name + ": missing from the ambient graph");
      break;
    }
    if (*a != d) {
      out.push_back("edge " + d.name +
                    ": declared differently in the ambient graph");
      break;
    }
  }
  if (!out.empty()) {
    return out;
  }

  VertexSet h = complement_vertices(sub.graph, amb.graph);
  for (const auto& d : amb.graph.edges) {
    if (h.count(d.rng) && !h.count(d.src)) {
      out.push_back("edge " + d.name + ": received by removed vertex " +
                    d.rng + " from retained vertex " + d.src +
                    " (complement not hereditary)");
      break;
    }
  }
  for (const auto& d : amb.graph.edges) {
    if (sub.graph.has_vertex(d.src) && sub.graph.has_vertex(d.rng) &&
        sub.graph.find_edge(d.name) == nullptr) {
      out.push_back("edge " + d.name +
                    ": joins retained vertices but is missing from the "
                    "subgraph");
      break;
    }
  }
  VertexSet bad = set_difference(
      set_intersection(amb.ck_vertices, sub.graph.vertices), sub.ck_vertices);
  if (!bad.empty()) {
    out.push_back("vertex " + *bad.begin() +
                  ": ambient imposes the CK relation but the subgraph does "
                  "not");
  }
  return out;
}

//! Composition of inclusions. That the composite is again a morphism is a
//! theorem, so it is asserted rather than assumed.
inline InclusionMorphism compose(const InclusionMorphism& inner,
                                 const InclusionMorphism& outer) {
  if (!(inner.amb == outer.sub)) {
    throw std::invalid_argument("compose: middle objects differ");
  }
  InclusionMorphism out{inner.sub, outer.amb};
  internal_check(check_morphism(out.sub, out.amb).empty(),
                 "compose: composite inclusion is not a morphism");
  return out;
}

//! Generators of the kernel of the quotient map induced by a morphism:
//! the vertex projections over the removed vertices, plus the gap
//! projections at subgraph CK vertices not relativized in the ambient graph.
struct IdealGenerators {
  VertexSet vertex_projections;
  VertexSet gap_projections;

  friend bool operator==(const IdealGenerators&,
                         const IdealGenerators&) = default;
};

inline IdealGenerators quotient_generators(const InclusionMorphism& m) {
  auto viol = check_morphism(m.sub, m.amb);
  if (!viol.empty()) {
    throw std::invalid_argument("quotient_generators: invalid morphism: " +
                                viol.front());
  }
  return IdealGenerators{
      complement_vertices(m.sub.graph, m.amb.graph),
      set_difference(m.sub.ck_vertices, m.amb.ck_vertices)};
}

}  // namespace relgraph
