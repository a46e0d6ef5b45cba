// Decorated dual graphs of projective curves.
//
// A vertex stands for an irreducible component (decorated with the
// geometric genus of its normalization, a count of ordinary cusps and an
// "exceptional" flag marking inserted blow-up lines).  An edge stands for
// an intersection point of two components: a node (length 1) or a tacnode
// (length 2).  Loops are self-nodes of a single component.
//
// Everything in this header is exact integer arithmetic on small graphs.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitstab {

/// Thrown when an operation is invoked outside its stated preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EdgeKind { Node, Tacnode };

/// Intersection length of the singular point an edge stands for.
inline int edge_length(EdgeKind k) { return k == EdgeKind::Tacnode ? 2 : 1; }

struct Vertex {
  std::string id;
  int genus = 0;        // geometric genus of the normalization
  int cusps = 0;        // ordinary cusps supported on this component
  bool exceptional = false;
};

struct Edge {
  int a = 0;            // vertex indices; a == b is a loop
  int b = 0;
  EdgeKind kind = EdgeKind::Node;
};

/// Subset of vertices as a bitmask over vertex indices.
using VertexMask = std::uint32_t;

class CurveGraph {
 public:
  CurveGraph() = default;

  int add_vertex(Vertex v) {
    if (index_.count(v.id))
      throw PreconditionError("duplicate vertex id '" + v.id + "'");
    if (vertices_.size() >= 32)
      throw PreconditionError("graphs with more than 32 vertices are not supported");
    int idx = static_cast<int>(vertices_.size());
    index_.emplace(v.id, idx);
    vertices_.push_back(std::move(v));
    return idx;
  }

  int add_vertex(const std::string& id, int genus, int cusps = 0, bool exceptional = false) {
    return add_vertex(Vertex{id, genus, cusps, exceptional});
  }

  void add_edge(int a, int b, EdgeKind kind = EdgeKind::Node) {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
      throw PreconditionError("edge endpoint index out of range");
    edges_.push_back(Edge{a, b, kind});
  }

  void add_edge(const std::string& a, const std::string& b, EdgeKind kind = EdgeKind::Node) {
    add_edge(index_of(a), index_of(b), kind);
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int i) const { return vertices_.at(static_cast<size_t>(i)); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> find_vertex(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw PreconditionError("unknown vertex id '" + id + "'");
    return it->second;
  }

  VertexMask full_mask() const {
    return vertex_count() == 0 ? 0 : (VertexMask{1} << vertex_count()) - 1;
  }

  /// Vertex indices ordered by id; fixes the enumeration order of subsets
  /// and the reporting order of subcurves.
  std::vector<int> indices_by_id() const {
    std::vector<int> order(vertices_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return vertices_[static_cast<size_t>(x)].id < vertices_[static_cast<size_t>(y)].id;
    });
    return order;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, int> index_;
};

/// A subcurve named by the ids of the components it contains.
struct Subcurve {
  std::vector<std::string> component_ids;  // sorted, no duplicates
};

inline Subcurve subcurve_of(const CurveGraph& g, VertexMask mask) {
  Subcurve z;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (mask & (VertexMask{1} << i)) z.component_ids.push_back(g.vertex(i).id);
  std::sort(z.component_ids.begin(), z.component_ids.end());
  return z;
}

inline VertexMask mask_of(const CurveGraph& g, const Subcurve& z) {
  VertexMask mask = 0;
  for (const auto& id : z.component_ids) mask |= VertexMask{1} << g.index_of(id);
  return mask;
}

inline bool operator==(const Subcurve& x, const Subcurve& y) {
  return x.component_ids == y.component_ids;
}

/// Lexicographic order on subcurves as sorted id lists; gives deterministic
/// witnesses and listing order.
inline bool subcurve_less(const Subcurve& x, const Subcurve& y) {
  return std::lexicographical_compare(x.component_ids.begin(), x.component_ids.end(),
                                      y.component_ids.begin(), y.component_ids.end());
}

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string rule;    // short machine-checkable rule name
  std::string detail;  // offending vertex/edge ids
};

/// Checks every structural invariant; an empty report means the graph is a
/// well-formed decorated dual graph.  Purely reporting, never throws.
inline std::vector<Violation> validate(const CurveGraph& g) {
  std::vector<Violation> out;
  if (g.vertex_count() == 0) {
    out.push_back({"empty graph", "a curve has at least one component"});
    return out;
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    const Vertex& v = g.vertex(i);
    if (v.genus < 0 || v.cusps < 0)
      out.push_back({"negative decoration", "vertex '" + v.id + "'"});
    if (v.exceptional && (v.genus != 0 || v.cusps != 0))
      out.push_back({"exceptional decoration",
                     "vertex '" + v.id + "' is exceptional but has genus or cusps"});
  }
  // per-vertex attachment bookkeeping for exceptional components
  std::vector<int> node_ends(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> tac_ends(static_cast<size_t>(g.vertex_count()), 0);
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    const Vertex& va = g.vertex(ed.a);
    const Vertex& vb = g.vertex(ed.b);
    std::string ename = "edge #" + std::to_string(e) + " ('" + va.id + "','" + vb.id + "')";
    if (ed.kind == EdgeKind::Tacnode) {
      if (ed.a == ed.b) {
        out.push_back({"tacnode loop", ename});
        continue;
      }
      if (!va.exceptional && !vb.exceptional)
        out.push_back({"tacnode endpoint must be exceptional", ename});
      if (va.exceptional && vb.exceptional)
        out.push_back({"adjacent exceptional vertices", ename});
      tac_ends[static_cast<size_t>(ed.a)]++;
      tac_ends[static_cast<size_t>(ed.b)]++;
    } else {
      if (ed.a == ed.b) {
        if (va.exceptional) out.push_back({"loop on exceptional vertex", ename});
        node_ends[static_cast<size_t>(ed.a)] += 2;
        continue;
      }
      if (va.exceptional && vb.exceptional)
        out.push_back({"adjacent exceptional vertices", ename});
      node_ends[static_cast<size_t>(ed.a)]++;
      node_ends[static_cast<size_t>(ed.b)]++;
    }
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    const Vertex& v = g.vertex(i);
    if (!v.exceptional) continue;
    int ne = node_ends[static_cast<size_t>(i)];
    int te = tac_ends[static_cast<size_t>(i)];
    bool node_blowup = (ne == 2 && te == 0);
    bool cusp_blowup = (ne == 0 && te == 1);
    if (!node_blowup && !cusp_blowup)
      out.push_back({"exceptional attachment count",
                     "vertex '" + v.id + "' has " + std::to_string(ne) +
                         " node end(s) and " + std::to_string(te) + " tacnode edge(s)"});
  }
  return out;
}

inline bool is_valid(const CurveGraph& g) { return validate(g).empty(); }

inline void require_valid(const CurveGraph& g) {
  auto report = validate(g);
  if (report.empty()) return;
  std::string msg = "invalid curve graph:";
  for (const auto& v : report) msg += " [" + v.rule + ": " + v.detail + "]";
  throw PreconditionError(msg);
}

// ---------------------------------------------------------------------------
// Genus, intersection length, dualizing degrees

/// p_a = sum(genus + cusps) + sum of edge lengths - |V| + 1.
/// Node and cusp contribute delta 1, tacnode delta 2.
inline int arithmetic_genus(const CurveGraph& g) {
  int total = 0;
  for (const Vertex& v : g.vertices()) total += v.genus + v.cusps;
  for (const Edge& e : g.edges()) total += edge_length(e.kind);
  return total - g.vertex_count() + 1;
}

/// Arithmetic genus of the subcurve spanned by `mask`: the same formula over
/// its vertices and internal edges.  For a disconnected subcurve this is
/// 1 - chi, so two disjoint genus-1 components give 1.
inline int subcurve_genus(const CurveGraph& g, VertexMask mask) {
  if (mask == 0) throw PreconditionError("subcurve is empty");
  int total = 0, count = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!(mask & (VertexMask{1} << i))) continue;
    total += g.vertex(i).genus + g.vertex(i).cusps;
    ++count;
  }
  for (const Edge& e : g.edges()) {
    bool ina = mask & (VertexMask{1} << e.a);
    bool inb = mask & (VertexMask{1} << e.b);
    if (ina && inb) total += edge_length(e.kind);
  }
  return total - count + 1;
}

/// k_Z: total length of the scheme-theoretic intersection of Z with its
/// complement, i.e. the sum of lengths of crossing edges.  Loops never cross.
inline int intersection_length(const CurveGraph& g, VertexMask mask) {
  if (mask == 0 || mask == g.full_mask())
    throw PreconditionError("intersection length needs a proper nonempty subcurve");
  int k = 0;
  for (const Edge& e : g.edges()) {
    bool ina = mask & (VertexMask{1} << e.a);
    bool inb = mask & (VertexMask{1} << e.b);
    if (ina != inb) k += edge_length(e.kind);
  }
  return k;
}

/// deg_Z(omega_X) by adjunction: 2 p_a(Z) - 2 + k_Z, with k_X := 0 when Z is
/// the whole curve.
inline int omega_degree(const CurveGraph& g, VertexMask mask) {
  if (mask == 0) throw PreconditionError("subcurve is empty");
  int k = (mask == g.full_mask()) ? 0 : intersection_length(g, mask);
  return 2 * subcurve_genus(g, mask) - 2 + k;
}

inline int subcurve_genus(const CurveGraph& g, const Subcurve& z) {
  return subcurve_genus(g, mask_of(g, z));
}
inline int intersection_length(const CurveGraph& g, const Subcurve& z) {
  return intersection_length(g, mask_of(g, z));
}
inline int omega_degree(const CurveGraph& g, const Subcurve& z) {
  return omega_degree(g, mask_of(g, z));
}

inline bool is_connected(const CurveGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const Edge& e : g.edges()) {
    if (e.a == e.b) continue;
    adj[static_cast<size_t>(e.a)].push_back(e.b);
    adj[static_cast<size_t>(e.b)].push_back(e.a);
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

// ---------------------------------------------------------------------------
// Isomorphism via canonical labeling.
//
// Colors start from the decorations (genus, cusps, exceptional, loop profile),
// get refined by neighbor color multisets, and remaining ties are broken by
// individualization with backtracking.  Adequate for desk-scale graphs.

namespace detail {

inline std::string encode_ordered(const CurveGraph& g, const std::vector<int>& pos) {
  // pos[old index] = new position
  int n = g.vertex_count();
  std::vector<int> at(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) at[static_cast<size_t>(pos[static_cast<size_t>(i)])] = i;
  std::string s;
  for (int p = 0; p < n; ++p) {
    const Vertex& v = g.vertex(at[static_cast<size_t>(p)]);
    s += 'v';
    s += std::to_string(v.genus) + "," + std::to_string(v.cusps) + "," +
         (v.exceptional ? "1" : "0") + ";";
  }
  std::vector<std::array<int, 3>> es;
  es.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    int pa = pos[static_cast<size_t>(e.a)], pb = pos[static_cast<size_t>(e.b)];
    es.push_back({std::min(pa, pb), std::max(pa, pb), e.kind == EdgeKind::Tacnode ? 1 : 0});
  }
  std::sort(es.begin(), es.end());
  for (const auto& e : es)
    s += "e" + std::to_string(e[0]) + "-" + std::to_string(e[1]) + ":" + std::to_string(e[2]) + ";";
  return s;
}

inline std::vector<int> refine_colors(const CurveGraph& g, std::vector<int> color) {
  int n = g.vertex_count();
  for (;;) {
    std::vector<std::vector<long long>> sig(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sig[static_cast<size_t>(i)].push_back(color[static_cast<size_t>(i)]);
    for (const Edge& e : g.edges()) {
      long long kind = e.kind == EdgeKind::Tacnode ? 1 : 0;
      if (e.a == e.b) {
        sig[static_cast<size_t>(e.a)].push_back(-(kind * 2 + 1));  // loop marker
        continue;
      }
      sig[static_cast<size_t>(e.a)].push_back(kind * (n + 1) + color[static_cast<size_t>(e.b)] + 2);
      sig[static_cast<size_t>(e.b)].push_back(kind * (n + 1) + color[static_cast<size_t>(e.a)] + 2);
    }
    for (auto& s : sig) std::sort(s.begin() + 1, s.end());
    std::vector<std::vector<long long>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<size_t>(i)]);
      next[static_cast<size_t>(i)] = static_cast<int>(it - sorted.begin());
    }
    int old_classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
    int new_classes = static_cast<int>(sorted.size());
    color = std::move(next);
    if (new_classes == old_classes) return color;
  }
}

inline void canonical_search(const CurveGraph& g, std::vector<int> color, std::string& best) {
  color = refine_colors(g, color);
  int n = g.vertex_count();
  // find the smallest non-singleton color class
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[color[static_cast<size_t>(i)]].push_back(i);
  const std::vector<int>* target = nullptr;
  for (const auto& [c, members] : classes)
    if (members.size() > 1 && (!target || members.size() < target->size())) target = &members;
  if (!target) {
    // discrete: color is a permutation rank
    std::vector<int> pos(static_cast<size_t>(n));
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < n; ++i) order.emplace_back(color[static_cast<size_t>(i)], i);
    std::sort(order.begin(), order.end());
    for (int p = 0; p < n; ++p) pos[static_cast<size_t>(order[static_cast<size_t>(p)].second)] = p;
    std::string enc = encode_ordered(g, pos);
    if (best.empty() || enc < best) best = enc;
    return;
  }
  for (int v : *target) {
    std::vector<int> c2 = color;
    for (int i = 0; i < n; ++i)
      if (c2[static_cast<size_t>(i)] >= 0) c2[static_cast<size_t>(i)] *= 2;
    c2[static_cast<size_t>(v)] += 1;  // split v off its class
    canonical_search(g, c2, best);
  }
}

}  // namespace detail

/// Canonical string form: equal strings iff the decorated multigraphs are
/// isomorphic.  Also used as a deterministic sort key for censuses.
inline std::string canonical_encoding(const CurveGraph& g) {
  int n = g.vertex_count();
  std::vector<std::array<int, 4>> init(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vertex& v = g.vertex(i);
    init[static_cast<size_t>(i)] = {v.genus, v.cusps, v.exceptional ? 1 : 0, 0};
  }
  for (const Edge& e : g.edges())
    if (e.a == e.b) init[static_cast<size_t>(e.a)][3] += edge_length(e.kind);
  std::vector<std::array<int, 4>> sorted = init;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> color(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), init[static_cast<size_t>(i)]);
    color[static_cast<size_t>(i)] = static_cast<int>(it - sorted.begin());
  }
  std::string best;
  detail::canonical_search(g, color, best);
  return best;
}

/// True iff some vertex bijection preserves genus, cusps, the exceptional
/// flag and the edge multiset with kinds.
inline bool are_isomorphic(const CurveGraph& a, const CurveGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

}  // namespace gitstab
