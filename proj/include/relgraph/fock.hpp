#pragma once

#include <Eigen/SparseCore>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relgraph/ideal_lattice.hpp"
#include "relgraph/pullback.hpp"
#include "relgraph/pushout.hpp"

namespace relgraph {

//! Exact integer arithmetic throughout; entries are 0/1 and small naturals,
//! so the relations are checked as identities, never to a tolerance.
using IntMatrix = Eigen::SparseMatrix<std::int64_t>;

inline bool matrix_is_zero(const IntMatrix& m) {
  IntMatrix c = m;
  c.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) {
    return v != 0;
  });
  return c.nonZeros() == 0;
}

inline bool matrices_equal(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    return false;
  }
  return matrix_is_zero(x - y);
}

//! The finite paths of an acyclic bundle-free relative graph whose source
//! escapes the CK set, ordered by (source, length, steps) so the matrix
//! algebra decomposes into one block per source vertex.
struct PathBasis {
  std::vector<Path> paths;
  std::map<Path, std::size_t> index;
};

namespace detail {
inline void require_fock_context(const RelativeGraph& ctx, const char* where) {
  auto viol = validate_relative(ctx);
  if (!viol.empty()) {
    throw std::invalid_argument(std::string(where) + ": " + viol.front());
  }
  for (const auto& d : ctx.graph.edges) {
    if (d.is_bundle()) {
      throw std::invalid_argument(std::string(where) +
                                  ": graph has an infinite edge bundle (" +
                                  d.name + ")");
    }
  }
  if (!is_acyclic(ctx.graph)) {
    throw std::invalid_argument(std::string(where) + ": graph has a cycle");
  }
}

//! All finite paths of an acyclic bundle-free graph.
inline std::vector<Path> all_paths(const Graph& g) {
  std::vector<Path> out;
  std::vector<Path> level;
  for (const auto& v : g.vertices) {
    level.push_back(Path{v, {}});
  }
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<Path> next;
    for (const auto& p : level) {
      VertexId src = path_source(g, p);
      for (const auto& d : g.edges) {
        if (d.rng == src) {
          Path q = p;
          q.steps.push_back(EdgeRef{d.name, std::nullopt});
          next.push_back(std::move(q));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}
}  // namespace detail

inline PathBasis path_basis(const RelativeGraph& ctx) {
  detail::require_fock_context(ctx, "path_basis");
  PathBasis basis;
  for (auto& p : detail::all_paths(ctx.graph)) {
    if (!ctx.ck_vertices.count(path_source(ctx.graph, p))) {
      basis.paths.push_back(std::move(p));
    }
  }
  const Graph& g = ctx.graph;
  std::sort(basis.paths.begin(), basis.paths.end(),
            [&](const Path& a, const Path& b) {
              VertexId sa = path_source(g, a);
              VertexId sb = path_source(g, b);
              if (sa != sb) {
                return sa < sb;
              }
              if (a.length() != b.length()) {
                return a.length() < b.length();
              }
              return a < b;
            });
  for (std::size_t i = 0; i < basis.paths.size(); ++i) {
    basis.index.emplace(basis.paths[i], i);
  }
  return basis;
}

//! Concrete family on the path basis: P_v projects onto the paths with range
//! v, and S_e sends a basis path to its extension by e when the ranges line
//! up. Entries are exactly 0/1.
struct MatrixRep {
  PathBasis basis;
  std::map<VertexId, IntMatrix> vertex_projections;
  std::map<std::string, IntMatrix> edge_isometries;
};

inline MatrixRep build_representation(const RelativeGraph& ctx) {
  MatrixRep rep;
  rep.basis = path_basis(ctx);
  const auto dim = static_cast<Eigen::Index>(rep.basis.paths.size());
  using Triplet = Eigen::Triplet<std::int64_t>;

  for (const auto& v : ctx.graph.vertices) {
    std::vector<Triplet> trips;
    for (std::size_t i = 0; i < rep.basis.paths.size(); ++i) {
      if (rep.basis.paths[i].root == v) {
        auto k = static_cast<Eigen::Index>(i);
        trips.emplace_back(k, k, 1);
      }
    }
    IntMatrix m(dim, dim);
    m.setFromTriplets(trips.begin(), trips.end());
    rep.vertex_projections.emplace(v, std::move(m));
  }
  for (const auto& d : ctx.graph.edges) {
    std::vector<Triplet> trips;
    for (std::size_t i = 0; i < rep.basis.paths.size(); ++i) {
      const Path& p = rep.basis.paths[i];
      if (p.root != d.src) {
        continue;
      }
      Path extended{d.rng, {EdgeRef{d.name, std::nullopt}}};
      extended.steps.insert(extended.steps.end(), p.steps.begin(),
                            p.steps.end());
      auto it = rep.basis.index.find(extended);
      internal_check(it != rep.basis.index.end(),
                     "build_representation: extension left the basis");
      trips.emplace_back(static_cast<Eigen::Index>(it->second),
                         static_cast<Eigen::Index>(i), 1);
    }
    IntMatrix m(dim, dim);
    m.setFromTriplets(trips.begin(), trips.end());
    rep.edge_isometries.emplace(d.name, std::move(m));
  }
  return rep;
}

//! Checks the defining relations by exact matrix arithmetic. Empty result
//! means every relation holds; otherwise each violated relation is reported
//! with the offending generators, in a fixed order.
inline std::vector<std::string> verify_ck(const MatrixRep& rep,
                                          const RelativeGraph& ctx) {
  std::vector<std::string> out;
  auto s_of = [&](const std::string& name) -> const IntMatrix& {
    auto it = rep.edge_isometries.find(name);
    if (it == rep.edge_isometries.end()) {
      throw std::invalid_argument("verify_ck: representation misses edge " +
                                  name);
    }
    return it->second;
  };
  auto p_of = [&](const VertexId& v) -> const IntMatrix& {
    auto it = rep.vertex_projections.find(v);
    if (it == rep.vertex_projections.end()) {
      throw std::invalid_argument("verify_ck: representation misses vertex " +
                                  v);
    }
    return it->second;
  };

  for (const auto& d : ctx.graph.edges) {
    const IntMatrix& s = s_of(d.name);
    IntMatrix st = s.transpose();
    if (!matrices_equal(IntMatrix(st * s), p_of(d.src))) {
      out.push_back("CK1 violated at edge " + d.name);
    }
  }
  for (const auto& d : ctx.graph.edges) {
    IntMatrix st = IntMatrix(s_of(d.name).transpose());
    for (const auto& e : ctx.graph.edges) {
      if (d.name != e.name && !matrix_is_zero(IntMatrix(st * s_of(e.name)))) {
        out.push_back("CK2 violated at edges " + d.name + "," + e.name);
      }
    }
  }
  for (const auto& d : ctx.graph.edges) {
    const IntMatrix& s = s_of(d.name);
    if (!matrices_equal(IntMatrix(p_of(d.rng) * s), s)) {
      out.push_back("CK3 violated at edge " + d.name);
    }
  }
  const auto dim = static_cast<Eigen::Index>(rep.basis.paths.size());
  for (const auto& v : ctx.graph.vertices) {
    IntMatrix range_sum(dim, dim);
    for (const auto& d : ctx.graph.edges) {
      if (d.rng == v) {
        const IntMatrix& s = s_of(d.name);
        range_sum = IntMatrix(range_sum + IntMatrix(s * IntMatrix(s.transpose())));
      }
    }
    if (ctx.ck_vertices.count(v)) {
      if (!matrices_equal(p_of(v), range_sum)) {
        out.push_back("TCK4 violated at vertex " + v);
      }
    } else if (is_regular(ctx.graph, v) &&
               matrix_is_zero(IntMatrix(p_of(v) - range_sum))) {
      out.push_back("gap projection vanished at regular vertex " + v);
    }
  }
  return out;
}

//! Block sizes of the algebra: each source vertex outside the CK set carries
//! the block of all paths sourced there.
inline std::map<VertexId, std::int64_t> block_dimensions(
    const RelativeGraph& ctx) {
  PathBasis basis = path_basis(ctx);
  std::map<VertexId, std::int64_t> out;
  for (const auto& v : set_difference(ctx.graph.vertices, ctx.ck_vertices)) {
    out[v] = 0;
  }
  for (const auto& p : basis.paths) {
    ++out[path_source(ctx.graph, p)];
  }
  return out;
}

inline std::int64_t algebra_dimension(const RelativeGraph& ctx) {
  std::int64_t total = 0;
  for (const auto& [v, n] : block_dimensions(ctx)) {
    total += n * n;
  }
  return total;
}

//! Blocks supporting the ideal of a code: the coded sources away from the
//! CK set. In the acyclic case the coded set has no infinite part, so the
//! support determines the ideal completely.
inline VertexSet ideal_support(const IdealCode& c, const RelativeGraph& ctx) {
  detail::require_fock_context(ctx, "ideal_support");
  require_code(ctx.graph, c, "ideal_support");
  return set_difference(c.support(), ctx.ck_vertices);
}

inline std::int64_t ideal_dimension(const IdealCode& c,
                                    const RelativeGraph& ctx) {
  auto blocks = block_dimensions(ctx);
  std::int64_t total = 0;
  for (const auto& v : ideal_support(c, ctx)) {
    total += blocks[v] * blocks[v];
  }
  return total;
}

//! Exact numerical cross-check of the pullback verdict on an acyclic
//! bundle-free pushout: the two leg ideals occupy disjoint blocks summing to
//! the blocks of their span, the dimensions add up against the quotient, and
//! the annihilation is confirmed on actual matrices. Whether the apex ideal
//! coincides with the sum of the leg ideals is the reported verdict.
struct PullbackReport {
  VertexSet apex_support;
  VertexSet left_support;
  VertexSet right_support;
  VertexSet sum_support;
  std::int64_t algebra_dim = 0;
  std::int64_t left_dim = 0;
  std::int64_t right_dim = 0;
  std::int64_t quotient_dim = 0;
  bool pullback = false;
};

inline PullbackReport verify_pullback(const PushoutDiagram& d,
                                      const PushoutResult& res) {
  detail::require_fock_context(res.colimit, "verify_pullback");
  DiagramCodes dc = diagram_codes(d, res);

  PullbackReport rep;
  rep.apex_support = ideal_support(dc.apex, res.colimit);
  rep.left_support = ideal_support(dc.left, res.colimit);
  rep.right_support = ideal_support(dc.right, res.colimit);
  rep.sum_support = ideal_support(dc.sum, res.colimit);

  internal_check(
      set_intersection(rep.left_support, rep.right_support).empty(),
      "verify_pullback: leg supports intersect");
  internal_check(
      set_union(rep.left_support, rep.right_support) == rep.sum_support,
      "verify_pullback: leg supports do not fill the sum support");

  rep.algebra_dim = algebra_dimension(res.colimit);
  rep.left_dim = ideal_dimension(dc.left, res.colimit);
  rep.right_dim = ideal_dimension(dc.right, res.colimit);
  rep.quotient_dim = algebra_dimension(
      RelativeGraph{d.apex.graph, induced_a0(d)});
  internal_check(rep.algebra_dim ==
                     rep.left_dim + rep.right_dim + rep.quotient_dim,
                 "verify_pullback: dimension identity fails");

  // Annihilation on actual matrices: the unit of each leg ideal is the
  // diagonal projection onto its blocks; the generators must sit under it
  // and the two units must multiply to zero, exactly.
  MatrixRep mrep = build_representation(res.colimit);
  const auto dim = static_cast<Eigen::Index>(mrep.basis.paths.size());
  auto support_projection = [&](const VertexSet& supp) {
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    for (std::size_t i = 0; i < mrep.basis.paths.size(); ++i) {
      if (supp.count(path_source(res.colimit.graph, mrep.basis.paths[i]))) {
        auto k = static_cast<Eigen::Index>(i);
        trips.emplace_back(k, k, 1);
      }
    }
    IntMatrix m(dim, dim);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
  };
  IntMatrix q_left = support_projection(rep.left_support);
  IntMatrix q_right = support_projection(rep.right_support);
  internal_check(matrix_is_zero(IntMatrix(q_left * q_right)),
                 "verify_pullback: leg support projections do not annihilate");

  auto generators_under = [&](const InclusionMorphism& leg,
                              const IntMatrix& unit) {
    IdealGenerators gen = quotient_generators(leg);
    auto check_under = [&](const IntMatrix& m, const std::string& what) {
      internal_check(matrices_equal(IntMatrix(unit * m), m) &&
                         matrices_equal(IntMatrix(m * unit), m),
                     "verify_pullback: " + what + " escapes its ideal blocks");
    };
    for (const auto& v : gen.vertex_projections) {
      check_under(mrep.vertex_projections.at(v), "vertex projection at " + v);
    }
    for (const auto& v : gen.gap_projections) {
      IntMatrix inside(dim, dim);
      for (const auto& e : leg.sub.graph.received_by(v)) {
        const IntMatrix& s = mrep.edge_isometries.at(e->name);
        inside = IntMatrix(inside + IntMatrix(s * IntMatrix(s.transpose())));
      }
      IntMatrix gap = IntMatrix(mrep.vertex_projections.at(v) - inside);
      check_under(gap, "gap projection at " + v);
    }
  };
  generators_under(res.left_leg, q_left);
  generators_under(res.right_leg, q_right);

  rep.pullback = rep.sum_support == rep.apex_support;
  return rep;
}

}  // namespace relgraph
