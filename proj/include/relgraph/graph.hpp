#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "relgraph/errors.hpp"

namespace relgraph {

using VertexId = std::string;
using VertexSet = std::set<VertexId>;

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

//! Renders {a,b,c} with sorted, comma-separated elements.
inline std::string format_set(const VertexSet& s) {
  std::string out = "{";
  for (const auto& v : s) {
    if (out.size() > 1) {
      out += ",";
    }
    out += v;
  }
  return out + "}";
}

//! All subsets of `s`, ordered by (size, lexicographic). Intended for desk
//! scale; refuses more than 20 elements.
inline std::vector<VertexSet> all_subsets(const VertexSet& s) {
  if (s.size() > 20) {
    throw std::invalid_argument("all_subsets: more than 20 elements");
  }
  std::vector<VertexId> elems(s.begin(), s.end());
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << elems.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
    VertexSet sub;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        sub.insert(elems[i]);
      }
    }
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  });
  return out;
}

//! An edge declaration of cardinality `countably_infinite` stands for the
//! whole parallel family name[1], name[2], ... from src to rng. Vertex-level
//! structure only ever depends on whether a received family is finite.
enum class Cardinality { one, countably_infinite };

struct EdgeDecl {
  std::string name;
  VertexId src;
  VertexId rng;
  Cardinality card = Cardinality::one;

  bool is_bundle() const { return card == Cardinality::countably_infinite; }

  friend auto operator<=>(const EdgeDecl&, const EdgeDecl&) = default;
};

//! A directed graph with named vertices and named edge declarations.
//! Composition follows the range-to-source convention: a path e1 e2 ... en
//! requires src(e_i) == rng(e_{i+1}), and a vertex "receives" the edges whose
//! range it is. Values are immutable after construction; `edges` is kept
//! sorted by name.
struct Graph {
  VertexSet vertices;
  std::vector<EdgeDecl> edges;

  bool has_vertex(const VertexId& v) const { return vertices.count(v) > 0; }

  const EdgeDecl* find_edge(const std::string& name) const {
    auto it = std::lower_bound(
        edges.begin(), edges.end(), name,
        [](const EdgeDecl& d, const std::string& n) { return d.name < n; });
    if (it != edges.end() && it->name == name) {
      return &*it;
    }
    return nullptr;
  }

  //! Declarations whose range is v, i.e. the edges v receives.
  std::vector<const EdgeDecl*> received_by(const VertexId& v) const {
    std::vector<const EdgeDecl*> out;
    for (const auto& d : edges) {
      if (d.rng == v) {
        out.push_back(&d);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;
};

inline Graph make_graph(VertexSet vertices, std::vector<EdgeDecl> edges) {
  std::sort(edges.begin(), edges.end(),
            [](const EdgeDecl& a, const EdgeDecl& b) { return a.name < b.name; });
  return Graph{std::move(vertices), std::move(edges)};
}

//! Empty result means the graph invariants hold; otherwise one message per
//! violation, each naming the offending entity.
inline std::vector<std::string> validate_graph(const Graph& g) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& d : g.edges) {
    if (!seen.insert(d.name).second) {
      out.push_back("duplicate edge name: " + d.name);
    }
    if (!g.has_vertex(d.src)) {
      out.push_back("edge " + d.name + ": unresolved vertex " + d.src);
    }
    if (!g.has_vertex(d.rng)) {
      out.push_back("edge " + d.name + ": unresolved vertex " + d.rng);
    }
  }
  return out;
}

inline void require_vertex(const Graph& g, const VertexId& v,
                           const char* where) {
  if (!g.has_vertex(v)) {
    throw std::invalid_argument(std::string(where) + ": unknown vertex " + v);
  }
}

inline void require_vertices(const Graph& g, const VertexSet& s,
                             const char* where) {
  for (const auto& v : s) {
    require_vertex(g, v, where);
  }
}

//! A source receives no edges at all.
inline bool is_source(const Graph& g, const VertexId& v) {
  return g.received_by(v).empty();
}

inline bool is_infinite_receiver(const Graph& g, const VertexId& v) {
  for (const EdgeDecl* d : g.received_by(v)) {
    if (d->is_bundle()) {
      return true;
    }
  }
  return false;
}

//! Regular: receives a finite, nonzero number of edges.
inline bool is_regular(const Graph& g, const VertexId& v) {
  auto rec = g.received_by(v);
  if (rec.empty()) {
    return false;
  }
  for (const EdgeDecl* d : rec) {
    if (d->is_bundle()) {
      return false;
    }
  }
  return true;
}

inline VertexSet sources(const Graph& g) {
  VertexSet out;
  for (const auto& v : g.vertices) {
    if (is_source(g, v)) {
      out.insert(v);
    }
  }
  return out;
}

inline VertexSet infinite_receivers(const Graph& g) {
  VertexSet out;
  for (const auto& v : g.vertices) {
    if (is_infinite_receiver(g, v)) {
      out.insert(v);
    }
  }
  return out;
}

inline VertexSet regular_vertices(const Graph& g) {
  VertexSet out;
  for (const auto& v : g.vertices) {
    if (is_regular(g, v)) {
      out.insert(v);
    }
  }
  return out;
}

inline VertexSet singular_vertices(const Graph& g) {
  return set_difference(g.vertices, regular_vertices(g));
}

//! A set is hereditary when every edge received by one of its vertices also
//! has its source inside the set.
inline bool is_hereditary(const Graph& g, const VertexSet& h) {
  for (const auto& d : g.edges) {
    if (h.count(d.rng) && !h.count(d.src)) {
      return false;
    }
  }
  return true;
}

//! A set is saturated when it contains every regular vertex all of whose
//! received edges are sourced inside the set. Singular vertices are exempt.
inline bool is_saturated(const Graph& g, const VertexSet& h) {
  for (const auto& v : g.vertices) {
    if (h.count(v) || !is_regular(g, v)) {
      continue;
    }
    bool all_from_h = true;
    for (const EdgeDecl* d : g.received_by(v)) {
      if (!h.count(d->src)) {
        all_from_h = false;
        break;
      }
    }
    if (all_from_h) {
      return false;
    }
  }
  return true;
}

//! Least hereditary superset of `s`: propagate from the range of an edge to
//! its source until stable. Idempotent, extensive and monotone.
inline VertexSet hereditary_closure(const Graph& g, const VertexSet& s) {
  require_vertices(g, s, "hereditary_closure");
  VertexSet h = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& d : g.edges) {
      if (h.count(d.rng) && h.insert(d.src).second) {
        changed = true;
      }
    }
  }
  return h;
}

//! The subgraph on the vertices outside a hereditary set `h`, keeping the
//! edges with both endpoints outside. Heredity makes this the same as
//! keeping every edge whose source survives.
inline Graph complement_subgraph(const Graph& g, const VertexSet& h) {
  require_vertices(g, h, "complement_subgraph");
  if (!is_hereditary(g, h)) {
    throw std::invalid_argument("complement_subgraph: set is not hereditary");
  }
  Graph f;
  f.vertices = set_difference(g.vertices, h);
  for (const auto& d : g.edges) {
    if (!h.count(d.src) && !h.count(d.rng)) {
      f.edges.push_back(d);
    }
  }
  return f;
}

//! Vertices regular in the complement subgraph of `h` but singular in `g`:
//! they receive infinitely many edges from inside `h` and a finite nonzero
//! number from outside.
inline VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  Graph f = complement_subgraph(g, h);
  return set_intersection(regular_vertices(f), singular_vertices(g));
}

}  // namespace relgraph
