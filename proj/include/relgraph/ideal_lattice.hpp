#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relgraph/paths.hpp"
#include "relgraph/relative.hpp"

namespace relgraph {

//! Code (h, b) for a gauge-invariant ideal: h is a hereditary vertex set and
//! b a set of vertices regular in the complement subgraph of h. The coded
//! point set holds every infinite path that visits h and every finite path
//! whose source lies in h or b; its trace on the unit space of a relative
//! context (E, A) additionally drops the finite paths sourced in A.
struct IdealCode {
  VertexSet h;
  VertexSet b;

  VertexSet support() const { return set_union(h, b); }

  friend auto operator<=>(const IdealCode&, const IdealCode&) = default;
};

inline std::string format_code(const IdealCode& c) {
  return "H=" + format_set(c.h) + " B=" + format_set(c.b);
}

inline std::vector<std::string> validate_code(const Graph& g,
                                              const IdealCode& c) {
  std::vector<std::string> out;
  for (const auto& v : set_union(c.h, c.b)) {
    if (!g.has_vertex(v)) {
      out.push_back("code vertex " + v + ": not a vertex of the graph");
    }
  }
  if (!out.empty()) {
    return out;
  }
  if (!is_hereditary(g, c.h)) {
    out.push_back("code: H is not hereditary");
    return out;
  }
  Graph f = complement_subgraph(g, c.h);
  for (const auto& v : c.b) {
    if (!f.has_vertex(v)) {
      out.push_back("code vertex " + v + ": lies in H, not in its complement");
    } else if (!is_regular(f, v)) {
      out.push_back("code vertex " + v +
                    ": not regular in the complement subgraph");
    }
  }
  return out;
}

inline void require_code(const Graph& g, const IdealCode& c,
                         const char* where) {
  auto viol = validate_code(g, c);
  if (!viol.empty()) {
    throw std::invalid_argument(std::string(where) + ": " + viol.front());
  }
}

//! Membership of a finite path in the coded set, within the unit space of
//! the context: the source must lie in h or b and escape the CK set.
inline bool code_contains_path(const IdealCode& c, const RelativeGraph& ctx,
                               const Path& p) {
  if (!is_valid_path(ctx.graph, p)) {
    throw std::invalid_argument("code_contains_path: invalid path");
  }
  VertexId s = path_source(ctx.graph, p);
  return !ctx.ck_vertices.count(s) && c.support().count(s) > 0;
}

//! Membership of an eventually periodic infinite path: it belongs to the
//! coded set exactly when it visits h somewhere. (Heredity then absorbs the
//! whole tail.) Infinite paths always lie in the unit space.
inline bool code_contains_lasso(const IdealCode& c, const RelativeGraph& ctx,
                                const Lasso& x) {
  if (!is_valid_lasso(ctx.graph, x)) {
    throw std::invalid_argument("code_contains_lasso: invalid lasso");
  }
  return !set_intersection(lasso_visited(ctx.graph, x), c.h).empty();
}

//! Decides whether every point of the cylinder over v (all paths with range
//! v), within the unit space, belongs to the union of the coded sets.
//! Reduces to reachability: every vertex reachable from v and outside the
//! CK set must lie in some code's support, and no infinite path from v may
//! avoid the union of the h parts.
inline bool cylinder_in_union(const std::vector<IdealCode>& codes,
                              const RelativeGraph& ctx, const VertexId& v) {
  require_vertex(ctx.graph, v, "cylinder_in_union");
  VertexSet all_support;
  VertexSet all_h;
  for (const auto& c : codes) {
    all_support = set_union(all_support, c.support());
    all_h = set_union(all_h, c.h);
  }
  for (const auto& w : reachable_from(ctx.graph, v)) {
    if (!ctx.ck_vertices.count(w) && !all_support.count(w)) {
      return false;
    }
  }
  if (all_h.count(v)) {
    return true;
  }
  return !reaches_cycle(ctx.graph, v,
                        set_difference(ctx.graph.vertices, all_h));
}

//! Canonical code of a union of coded sets: h collects the vertices whose
//! whole cylinder lies in the union, b the remaining vertices the union
//! contains. On single codes this is the identity (for a relative context,
//! on the codes whose support covers the CK set). That the result is again
//! a valid code is guaranteed and asserted.
inline IdealCode canonical_union(const std::vector<IdealCode>& codes,
                                 const RelativeGraph& ctx) {
  for (const auto& c : codes) {
    require_code(ctx.graph, c, "canonical_union");
  }
  IdealCode out;
  VertexSet members;
  for (const auto& c : codes) {
    members = set_union(members, c.support());
  }
  for (const auto& v : ctx.graph.vertices) {
    if (cylinder_in_union(codes, ctx, v)) {
      out.h.insert(v);
    }
  }
  out.b = set_difference(members, out.h);
  internal_check(validate_code(ctx.graph, out).empty(),
                 "canonical_union: produced an invalid code");
  return out;
}

//! Inclusion of coded sets within the unit space: the supports must be
//! included away from the CK set, and no infinite path may visit h1 while
//! avoiding h2. The second condition reduces to cycle reachability from the
//! vertices of h1 \ h2 inside the complement of h2.
inline bool code_subset(const IdealCode& c1, const IdealCode& c2,
                        const RelativeGraph& ctx) {
  require_code(ctx.graph, c1, "code_subset");
  require_code(ctx.graph, c2, "code_subset");
  if (!is_subset(set_difference(c1.support(), ctx.ck_vertices),
                 c2.support())) {
    return false;
  }
  VertexSet outside = set_difference(ctx.graph.vertices, c2.h);
  for (const auto& v : set_difference(c1.h, c2.h)) {
    if (reaches_cycle(ctx.graph, v, outside)) {
      return false;
    }
  }
  return true;
}

//! Disjointness of coded sets within the unit space. An infinite path lying
//! in both must visit h1 and h2, hence (by heredity) their intersection, so
//! it exists exactly when some vertex of the intersection admits any
//! infinite path at all.
inline bool code_disjoint(const IdealCode& c1, const IdealCode& c2,
                          const RelativeGraph& ctx) {
  require_code(ctx.graph, c1, "code_disjoint");
  require_code(ctx.graph, c2, "code_disjoint");
  if (!set_difference(set_intersection(c1.support(), c2.support()),
                      ctx.ck_vertices)
           .empty()) {
    return false;
  }
  for (const auto& v : set_intersection(c1.h, c2.h)) {
    if (reaches_cycle(ctx.graph, v, ctx.graph.vertices)) {
      return false;
    }
  }
  return true;
}

namespace detail {
//! Hereditary subsets via closed sets of the strongly-connected condensation
//! of the received-edge digraph; output-sensitive, used past desk scale.
inline std::vector<VertexSet> hereditary_subsets_condensed(const Graph& g) {
  // Tarjan over arcs rng -> src.
  std::map<VertexId, std::vector<VertexId>> succ;
  for (const auto& d : g.edges) {
    succ[d.rng].push_back(d.src);
  }
  std::map<VertexId, int> comp;
  std::map<VertexId, int> low;
  std::map<VertexId, int> num;
  std::vector<VertexId> stack;
  std::map<VertexId, bool> on_stack;
  int counter = 0;
  int ncomp = 0;
  std::vector<VertexSet> comps;

  auto strongconnect = [&](auto&& self, const VertexId& v) -> void {
    num[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const auto& w : succ[v]) {
      if (!num.count(w)) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (low[v] == num[v]) {
      VertexSet c;
      while (true) {
        VertexId w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
        c.insert(w);
        if (w == v) {
          break;
        }
      }
      comps.push_back(std::move(c));
      ++ncomp;
    }
  };
  for (const auto& v : g.vertices) {
    if (!num.count(v)) {
      strongconnect(strongconnect, v);
    }
  }

  // comp -> comps it requires (arcs of the condensation).
  std::vector<std::set<int>> requires_comp(comps.size());
  for (const auto& d : g.edges) {
    if (comp[d.rng] != comp[d.src]) {
      requires_comp[comp[d.rng]].insert(comp[d.src]);
    }
  }
  // Tarjan emits components in reverse topological order of the arcs, so
  // everything a component requires precedes it in `comps`.
  std::vector<VertexSet> out;
  std::vector<bool> chosen(comps.size(), false);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == comps.size()) {
      VertexSet h;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        if (chosen[k]) {
          h.insert(comps[k].begin(), comps[k].end());
        }
      }
      out.push_back(std::move(h));
      return;
    }
    self(self, i + 1);
    bool ok = true;
    for (int r : requires_comp[i]) {
      if (!chosen[static_cast<std::size_t>(r)]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      chosen[i] = true;
      self(self, i + 1);
      chosen[i] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}
}  // namespace detail

//! All hereditary subsets, ordered by (size, lexicographic). Direct subset
//! filtration at desk scale, condensation enumeration beyond it.
inline std::vector<VertexSet> hereditary_subsets(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.vertices.size() <= 20) {
    for (auto& s : all_subsets(g.vertices)) {
      if (is_hereditary(g, s)) {
        out.push_back(std::move(s));
      }
    }
  } else {
    out = detail::hereditary_subsets_condensed(g);
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) {
              if (a.size() != b.size()) {
                return a.size() < b.size();
              }
              return a < b;
            });
  return out;
}

//! All ideal codes of the context: every (h, b) with h hereditary and b
//! regular in the complement, kept when the support covers the CK set.
//! (A code with the CK set outside its support does not name an ideal of
//! the relative algebra.) Deterministic (h, then b) enumeration order.
inline std::vector<IdealCode> ideal_codes(const RelativeGraph& ctx) {
  auto viol = validate_relative(ctx);
  if (!viol.empty()) {
    throw std::invalid_argument("ideal_codes: invalid context: " +
                                viol.front());
  }
  std::vector<IdealCode> out;
  for (const auto& h : hereditary_subsets(ctx.graph)) {
    Graph f = complement_subgraph(ctx.graph, h);
    for (auto& b : all_subsets(regular_vertices(f))) {
      IdealCode c{h, std::move(b)};
      if (is_subset(ctx.ck_vertices, c.support())) {
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

//! The lattice of ideal codes under coded-set inclusion, as a Hasse diagram:
//! covers are the transitive reduction of the order. The zero ideal is the
//! unique bottom and the whole algebra the unique top.
struct IdealLattice {
  std::vector<IdealCode> codes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t bottom = 0;
  std::size_t top = 0;
};

inline IdealLattice ideal_lattice(const RelativeGraph& ctx) {
  IdealLattice lat;
  lat.codes = ideal_codes(ctx);
  std::size_t n = lat.codes.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = code_subset(lat.codes[i], lat.codes[j], ctx);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      internal_check(i == j || !(leq[i][j] && leq[j][i]),
                     "ideal_lattice: distinct codes with equal coded sets");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) {
        continue;
      }
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (k != i && k != j && leq[i][k] && leq[k][j]) {
          cover = false;
        }
      }
      if (cover) {
        lat.covers.emplace_back(i, j);
      }
    }
  }
  bool found_bottom = false;
  bool found_top = false;
  for (std::size_t i = 0; i < n; ++i) {
    bool least = true;
    bool greatest = true;
    for (std::size_t j = 0; j < n; ++j) {
      least = least && leq[i][j];
      greatest = greatest && leq[j][i];
    }
    if (least) {
      lat.bottom = i;
      found_bottom = true;
    }
    if (greatest) {
      lat.top = i;
      found_top = true;
    }
  }
  internal_check(found_bottom && found_top,
                 "ideal_lattice: missing bottom or top");
  return lat;
}

//! Ideal codes of the graph algebra (CK set = all regular vertices). In this
//! case every code must have the classical shape: h saturated, with b the
//! regular complement vertices plus a subset of the breaking vertices of h.
//! That shape is asserted.
inline std::vector<IdealCode> ck_ideal_codes(const Graph& g) {
  auto codes = ideal_codes(RelativeGraph{g, regular_vertices(g)});
  VertexSet reg = regular_vertices(g);
  for (const auto& c : codes) {
    internal_check(is_saturated(g, c.h),
                   "ck_ideal_codes: code with unsaturated H");
    Graph f = complement_subgraph(g, c.h);
    VertexSet forced = set_intersection(reg, f.vertices);
    internal_check(is_subset(forced, c.b),
                   "ck_ideal_codes: B misses a regular complement vertex");
    internal_check(
        is_subset(set_difference(c.b, forced), breaking_vertices(g, c.h)),
        "ck_ideal_codes: B exceeds the breaking vertices");
  }
  return codes;
}

inline std::string lattice_dot(const IdealLattice& lat) {
  std::string out = "digraph ideal_lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.codes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           format_code(lat.codes[i]) + "\"];\n";
  }
  for (const auto& [lo, hi] : lat.covers) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace relgraph
