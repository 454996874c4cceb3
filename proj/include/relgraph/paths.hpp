#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relgraph/graph.hpp"

namespace relgraph {

//! One member of the edge set: either a plain declaration or the
//! `index`-th member of an infinite bundle. `index` is present exactly when
//! the declaration is a bundle; members are 1-based.
struct EdgeRef {
  std::string decl;
  std::optional<std::uint32_t> index;

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

inline std::string format_edge_ref(const EdgeRef& r) {
  if (r.index) {
    return r.decl + "[" + std::to_string(*r.index) + "]";
  }
  return r.decl;
}

//! A finite directed path. Steps run from the range end toward the source:
//! for steps e1..en, rng(e1) == root and src(e_i) == rng(e_{i+1}). The empty
//! path is the vertex `root` itself.
struct Path {
  VertexId root;
  std::vector<EdgeRef> steps;

  std::size_t length() const { return steps.size(); }

  friend auto operator<=>(const Path&, const Path&) = default;
};

inline std::string format_path(const Path& p) {
  if (p.steps.empty()) {
    return p.root;
  }
  std::string out;
  for (const auto& s : p.steps) {
    if (!out.empty()) {
      out += ".";
    }
    out += format_edge_ref(s);
  }
  return out;
}

//! Resolves a ref against the graph; nullptr when the name is unknown or the
//! index presence does not match the declaration's cardinality.
inline const EdgeDecl* resolve(const Graph& g, const EdgeRef& r) {
  const EdgeDecl* d = g.find_edge(r.decl);
  if (d == nullptr || d->is_bundle() != r.index.has_value()) {
    return nullptr;
  }
  if (r.index && *r.index == 0) {
    return nullptr;
  }
  return d;
}

inline bool is_valid_path(const Graph& g, const Path& p) {
  if (!g.has_vertex(p.root)) {
    return false;
  }
  VertexId at = p.root;
  for (const auto& s : p.steps) {
    const EdgeDecl* d = resolve(g, s);
    if (d == nullptr || d->rng != at) {
      return false;
    }
    at = d->src;
  }
  return true;
}

//! Source of a valid path: the source of its last step, or the root itself
//! for the empty path.
inline VertexId path_source(const Graph& g, const Path& p) {
  if (p.steps.empty()) {
    return p.root;
  }
  const EdgeDecl* d = resolve(g, p.steps.back());
  if (d == nullptr) {
    throw std::invalid_argument("path_source: invalid path");
  }
  return d->src;
}

//! Every vertex the path touches: its root plus the source of each step.
inline VertexSet visited_vertices(const Graph& g, const Path& p) {
  VertexSet out{p.root};
  for (const auto& s : p.steps) {
    const EdgeDecl* d = resolve(g, s);
    if (d == nullptr) {
      throw std::invalid_argument("visited_vertices: invalid path");
    }
    out.insert(d->src);
  }
  return out;
}

//! Concatenation `front` then `back`; defined exactly when the source of
//! `front` is the root of `back`. Lengths add.
inline std::optional<Path> concat(const Graph& g, const Path& front,
                                  const Path& back) {
  if (!is_valid_path(g, front) || !is_valid_path(g, back) ||
      path_source(g, front) != back.root) {
    return std::nullopt;
  }
  Path out = front;
  out.steps.insert(out.steps.end(), back.steps.begin(), back.steps.end());
  return out;
}

//! Finite presentation of the eventually periodic infinite path
//! prefix.cycle.cycle..., so the cycle must close on itself and attach to
//! the source of the prefix.
struct Lasso {
  Path prefix;
  Path cycle;

  friend auto operator<=>(const Lasso&, const Lasso&) = default;
};

inline bool is_valid_lasso(const Graph& g, const Lasso& x) {
  return !x.cycle.steps.empty() && is_valid_path(g, x.prefix) &&
         is_valid_path(g, x.cycle) &&
         path_source(g, x.prefix) == x.cycle.root &&
         path_source(g, x.cycle) == x.cycle.root;
}

inline VertexSet lasso_visited(const Graph& g, const Lasso& x) {
  return set_union(visited_vertices(g, x.prefix),
                   visited_vertices(g, x.cycle));
}

namespace detail {
inline std::vector<EdgeRef> edge_members(const Graph& g,
                                         std::uint32_t max_bundle_index) {
  std::vector<EdgeRef> out;
  for (const auto& d : g.edges) {
    if (d.is_bundle()) {
      for (std::uint32_t i = 1; i <= max_bundle_index; ++i) {
        out.push_back(EdgeRef{d.name, i});
      }
    } else {
      out.push_back(EdgeRef{d.name, std::nullopt});
    }
  }
  return out;
}
}  // namespace detail

//! All valid paths of length <= max_len whose bundle members have index
//! <= max_bundle_index, ordered by (length, root, steps).
inline std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len,
                                         std::uint32_t max_bundle_index) {
  auto members = detail::edge_members(g, max_bundle_index);
  std::vector<Path> out;
  std::vector<Path> level;
  for (const auto& v : g.vertices) {
    level.push_back(Path{v, {}});
  }
  for (std::size_t len = 0; len <= max_len && !level.empty(); ++len) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<Path> next;
    for (const auto& p : level) {
      VertexId src = path_source(g, p);
      for (const auto& m : members) {
        if (g.find_edge(m.decl)->rng == src) {
          Path q = p;
          q.steps.push_back(m);
          next.push_back(std::move(q));
        }
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) {
      return a.length() < b.length();
    }
    return a < b;
  });
  return out;
}

//! Truncation defaults: length |V|+2 is pigeonhole-sufficient for cycle
//! witnesses, and two bundle members witness every finite-vs-infinite
//! distinction the coded sets can make.
inline constexpr std::uint32_t default_bundle_truncation = 2;

inline std::vector<Path> enumerate_paths(const Graph& g) {
  return enumerate_paths(g, g.vertices.size() + 2, default_bundle_truncation);
}

//! Vertices w admitting a path with range v and source w (v included):
//! the closure of {v} under passing from an edge's range to its source.
inline VertexSet reachable_from(const Graph& g, const VertexId& v) {
  require_vertex(g, v, "reachable_from");
  VertexSet out{v};
  std::deque<VertexId> todo{v};
  while (!todo.empty()) {
    VertexId at = todo.front();
    todo.pop_front();
    for (const auto& d : g.edges) {
      if (d.rng == at && out.insert(d.src).second) {
        todo.push_back(d.src);
      }
    }
  }
  return out;
}

//! Decides whether an infinite path with range `start` exists that visits
//! only vertices of `allowed`; equivalently, whether `start` reaches a
//! directed cycle of the received-edge digraph restricted to `allowed`.
inline bool reaches_cycle(const Graph& g, const VertexId& start,
                          const VertexSet& allowed) {
  require_vertex(g, start, "reaches_cycle");
  if (!allowed.count(start)) {
    throw std::invalid_argument("reaches_cycle: start not in allowed set");
  }
  // Arcs rng -> src, both endpoints allowed.
  std::map<VertexId, std::vector<VertexId>> succ;
  for (const auto& d : g.edges) {
    if (allowed.count(d.src) && allowed.count(d.rng)) {
      succ[d.rng].push_back(d.src);
    }
  }
  VertexSet reach{start};
  std::deque<VertexId> todo{start};
  while (!todo.empty()) {
    VertexId at = todo.front();
    todo.pop_front();
    for (const auto& w : succ[at]) {
      if (reach.insert(w).second) {
        todo.push_back(w);
      }
    }
  }
  // reach is closed under the arcs, so any cycle inside it is reachable.
  // Peel vertices without outgoing arcs; whatever survives lies on a cycle.
  std::map<VertexId, std::size_t> outdeg;
  std::map<VertexId, std::vector<VertexId>> pred;
  for (const auto& v : reach) {
    outdeg[v] = 0;
  }
  for (const auto& v : reach) {
    for (const auto& w : succ[v]) {
      if (reach.count(w)) {
        ++outdeg[v];
        pred[w].push_back(v);
      }
    }
  }
  std::deque<VertexId> peel;
  for (const auto& [v, deg] : outdeg) {
    if (deg == 0) {
      peel.push_back(v);
    }
  }
  std::size_t removed = 0;
  while (!peel.empty()) {
    VertexId v = peel.front();
    peel.pop_front();
    ++removed;
    for (const auto& p : pred[v]) {
      if (--outdeg[p] == 0) {
        peel.push_back(p);
      }
    }
  }
  return removed < reach.size();
}

inline bool is_acyclic(const Graph& g) {
  for (const auto& v : g.vertices) {
    if (reaches_cycle(g, v, g.vertices)) {
      return false;
    }
  }
  return true;
}

}  // namespace relgraph
