// Recognition of stable, p-stable, quasi-stable and quasi-p-stable curves,
// and the blow-up / contraction surgeries between their models.
//
// Stability is decided on the dual graph: connectedness, which singularities
// occur, and per-component counts of special points on the normalization
// (a node endpoint or tacnode endpoint counts 1, a loop counts 2, a cusp
// counts 1).  Genus-0 components need at least 3 special points, genus-1
// components at least 1; that is the finite-automorphism condition.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gitstab/curve_graph.hpp"

namespace gitstab {

/// Special points on the normalization of component v.
inline int special_point_count(const CurveGraph& g, int v) {
  int count = g.vertex(v).cusps;
  for (const Edge& e : g.edges()) {
    if (e.a == e.b) {
      if (e.a == v) count += 2;
    } else if (e.a == v || e.b == v) {
      count += 1;
    }
  }
  return count;
}

inline int special_point_count(const CurveGraph& g, const std::string& id) {
  return special_point_count(g, g.index_of(id));
}

namespace detail {

inline bool all_edges_node(const CurveGraph& g) {
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Tacnode) return false;
  return true;
}

inline bool has_exceptional(const CurveGraph& g) {
  for (const Vertex& v : g.vertices())
    if (v.exceptional) return true;
  return false;
}

inline bool finite_automorphism_thresholds(const CurveGraph& g) {
  for (int i = 0; i < g.vertex_count(); ++i) {
    int genus = g.vertex(i).genus;
    if (genus == 0 && special_point_count(g, i) < 3) return false;
    if (genus == 1 && special_point_count(g, i) < 1) return false;
  }
  return true;
}

}  // namespace detail

/// Connected subcurves of arithmetic genus 1 meeting the rest of the curve
/// in exactly one node.  Such a subcurve always attaches along a bridge of
/// the dual graph, so only bridge edges are examined.
inline std::vector<Subcurve> elliptic_tails(const CurveGraph& g) {
  require_valid(g);
  if (!detail::all_edges_node(g))
    throw PreconditionError("elliptic tails are defined for nodal curves only");
  if (!is_connected(g))
    throw PreconditionError("elliptic tails need a connected curve");

  int m = static_cast<int>(g.edges().size());

  // side of vertex `start` when edge `skip` is removed
  auto side_mask = [&](int start, int skip) {
    VertexMask mask = VertexMask{1} << start;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e = 0; e < m; ++e) {
        if (e == skip) continue;
        const Edge& ed = g.edges()[static_cast<size_t>(e)];
        int other = -1;
        if (ed.a == v) other = ed.b;
        else if (ed.b == v) other = ed.a;
        else continue;
        if (!(mask & (VertexMask{1} << other))) {
          mask |= VertexMask{1} << other;
          stack.push_back(other);
        }
      }
    }
    return mask;
  };

  std::vector<Subcurve> tails;
  std::vector<VertexMask> seen;
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edges()[static_cast<size_t>(e)];
    if (ed.a == ed.b) continue;
    VertexMask sa = side_mask(ed.a, e);
    if (sa == g.full_mask()) continue;  // not a bridge
    VertexMask sides[2] = {sa, static_cast<VertexMask>(g.full_mask() & ~sa)};
    for (VertexMask side : sides) {
      if (subcurve_genus(g, side) != 1) continue;
      if (std::find(seen.begin(), seen.end(), side) != seen.end()) continue;
      seen.push_back(side);
      tails.push_back(subcurve_of(g, side));
    }
  }
  std::sort(tails.begin(), tails.end(), subcurve_less);
  return tails;
}

/// Combinatorially stable: connected and nodal, finite automorphisms,
/// genus at least 2, no exceptional components.
inline bool is_stable(const CurveGraph& g) {
  if (!is_valid(g)) return false;
  if (!is_connected(g)) return false;
  if (!detail::all_edges_node(g)) return false;
  if (detail::has_exceptional(g)) return false;
  for (const Vertex& v : g.vertices())
    if (v.cusps != 0) return false;
  if (!detail::finite_automorphism_thresholds(g)) return false;
  return arithmetic_genus(g) >= 2;
}

/// Combinatorially p-stable: nodes and cusps allowed, finite automorphisms,
/// genus at least 2, and no elliptic tails.
inline bool is_p_stable(const CurveGraph& g) {
  if (!is_valid(g)) return false;
  if (!is_connected(g)) return false;
  if (!detail::all_edges_node(g)) return false;
  if (detail::has_exceptional(g)) return false;
  if (!detail::finite_automorphism_thresholds(g)) return false;
  if (arithmetic_genus(g) < 2) return false;
  return elliptic_tails(g).empty();
}

// ---------------------------------------------------------------------------
// Surgeries

struct BlowUpSelection {
  std::vector<int> node_edges;            // indices into CurveGraph::edges()
  std::map<std::string, int> cusp_counts; // vertex id -> cusps to blow up
};

namespace detail {

inline std::string fresh_exceptional_id(const CurveGraph& g, int& counter) {
  for (;;) {
    std::string id = "exc" + std::to_string(counter++);
    if (!g.find_vertex(id)) return id;
  }
}

}  // namespace detail

/// Blows up the selected nodes and cusps, inserting one exceptional line per
/// selection.  A blown-up node (u,w) becomes u - E - w (a loop becomes two
/// parallel edges), a blown-up cusp on v becomes a tacnode edge v - E.
/// Arithmetic genus is preserved.
inline CurveGraph blow_up(const CurveGraph& g, const BlowUpSelection& sel) {
  require_valid(g);
  bool stable = is_stable(g);
  bool p_stable = is_p_stable(g);
  if (!stable && !p_stable)
    throw PreconditionError("blow-up requires a stable or p-stable curve");

  std::vector<char> blow_edge(g.edges().size(), 0);
  for (int e : sel.node_edges) {
    if (e < 0 || e >= static_cast<int>(g.edges().size()))
      throw PreconditionError("node selection out of bounds: edge #" + std::to_string(e));
    if (g.edges()[static_cast<size_t>(e)].kind != EdgeKind::Node)
      throw PreconditionError("selected edge #" + std::to_string(e) + " is not a node");
    blow_edge[static_cast<size_t>(e)] = 1;
  }
  for (const auto& [id, count] : sel.cusp_counts) {
    int v = g.index_of(id);
    if (count < 0 || count > g.vertex(v).cusps)
      throw PreconditionError("cusp selection out of bounds on vertex '" + id + "'");
    if (count > 0 && !p_stable)
      throw PreconditionError("cusp blow-up requires a p-stable curve");
  }

  CurveGraph out;
  for (const Vertex& v : g.vertices()) {
    Vertex copy = v;
    auto it = sel.cusp_counts.find(v.id);
    if (it != sel.cusp_counts.end()) copy.cusps -= it->second;
    out.add_vertex(copy);
  }
  int counter = 0;
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    if (!blow_edge[e]) {
      out.add_edge(ed.a, ed.b, ed.kind);
      continue;
    }
    int exc = out.add_vertex(Vertex{detail::fresh_exceptional_id(g, counter), 0, 0, true});
    out.add_edge(ed.a, exc, EdgeKind::Node);
    out.add_edge(exc, ed.b, EdgeKind::Node);
  }
  // cusp blow-ups in id order, so output is deterministic
  for (const auto& [id, count] : sel.cusp_counts) {
    int host = out.index_of(id);
    for (int i = 0; i < count; ++i) {
      int exc = out.add_vertex(Vertex{detail::fresh_exceptional_id(g, counter), 0, 0, true});
      out.add_edge(host, exc, EdgeKind::Tacnode);
    }
  }
  return out;
}

/// Removes every exceptional component: a node-type one is replaced by the
/// node it resolved, a tacnode-type one by a cusp on its host.  Inverse of
/// blow_up up to isomorphism; genus is preserved.
inline CurveGraph contract_exceptional(const CurveGraph& g) {
  require_valid(g);
  std::vector<int> remap(static_cast<size_t>(g.vertex_count()), -1);
  CurveGraph out;
  std::vector<int> extra_cusps(static_cast<size_t>(g.vertex_count()), 0);

  // tacnode attachments become cusps on the host
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Tacnode) continue;
    int host = g.vertex(e.a).exceptional ? e.b : e.a;
    extra_cusps[static_cast<size_t>(host)]++;
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    const Vertex& v = g.vertex(i);
    if (v.exceptional) continue;
    Vertex copy = v;
    copy.cusps += extra_cusps[static_cast<size_t>(i)];
    remap[static_cast<size_t>(i)] = out.add_vertex(copy);
  }
  // edges not touching an exceptional vertex survive unchanged
  for (const Edge& e : g.edges()) {
    if (g.vertex(e.a).exceptional || g.vertex(e.b).exceptional) continue;
    out.add_edge(remap[static_cast<size_t>(e.a)], remap[static_cast<size_t>(e.b)], e.kind);
  }
  // each node-type exceptional vertex contracts to the node joining its
  // two neighbors (a loop when they coincide)
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!g.vertex(i).exceptional) continue;
    std::vector<int> neighbors;
    for (const Edge& e : g.edges()) {
      if (e.kind != EdgeKind::Node) continue;
      if (e.a == i) neighbors.push_back(e.b);
      else if (e.b == i) neighbors.push_back(e.a);
    }
    if (neighbors.size() == 2)
      out.add_edge(remap[static_cast<size_t>(neighbors[0])],
                   remap[static_cast<size_t>(neighbors[1])], EdgeKind::Node);
  }
  return out;
}

struct CurveClass {
  bool is_stable = false;
  bool is_p_stable = false;
  bool is_quasi_stable = false;
  bool is_quasi_p_stable = false;
  std::vector<Subcurve> elliptic_tails;  // tails of the contracted model
};

/// Classifies a valid graph: quasi-stable means it contracts to a stable
/// curve through node-type blow-ups only; quasi-p-stable means it contracts
/// to a p-stable curve (tacnode-type blow-ups allowed).
inline CurveClass classify_curve(const CurveGraph& g) {
  require_valid(g);
  CurveClass out;
  out.is_stable = is_stable(g);
  out.is_p_stable = is_p_stable(g);
  CurveGraph contracted = contract_exceptional(g);
  out.is_quasi_stable = detail::all_edges_node(g) && is_stable(contracted);
  out.is_quasi_p_stable = is_p_stable(contracted);
  if (is_connected(contracted) && detail::all_edges_node(contracted))
    out.elliptic_tails = elliptic_tails(contracted);
  return out;
}

}  // namespace gitstab
