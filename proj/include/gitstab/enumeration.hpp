// Exhaustive enumerators: balanced multidegrees on a fixed curve, blow-up
// models of a base curve, fiber strata of the compactified Jacobian over a
// p-stable curve, and small-genus censuses of (p-)stable dual graphs.
//
// Everything is deterministic: multidegrees come out lexicographically
// sorted in sorted-vertex-id order, graph lists are sorted by canonical
// encoding.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gitstab/balance.hpp"
#include "gitstab/curve_class.hpp"
#include "gitstab/curve_graph.hpp"

namespace gitstab {

/// All integer degree vectors of total d whose classification reaches at
/// least `flavor`, restricted to the per-vertex degree bounds (and to
/// strictly positive degrees when `positive`).
inline std::vector<Multidegree> enumerate_multidegrees(const CurveGraph& g, long long d,
                                                       BalanceFlavor flavor,
                                                       bool positive) {
  require_valid(g);
  if (arithmetic_genus(g) < 2)
    throw PreconditionError("multidegree enumeration needs arithmetic genus >= 2");
  detail::require_subset_scannable(g);

  int n = g.vertex_count();
  std::vector<int> order = g.indices_by_id();
  std::vector<long long> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    DegreeBounds b = degree_bounds(g, d, order[static_cast<size_t>(p)]);
    lo[static_cast<size_t>(p)] = positive ? std::max(b.lo, 1LL) : b.lo;
    hi[static_cast<size_t>(p)] = b.hi;
  }
  std::vector<long long> suffix_lo(static_cast<size_t>(n) + 1, 0);
  std::vector<long long> suffix_hi(static_cast<size_t>(n) + 1, 0);
  for (int p = n - 1; p >= 0; --p) {
    suffix_lo[static_cast<size_t>(p)] = suffix_lo[static_cast<size_t>(p) + 1] + lo[static_cast<size_t>(p)];
    suffix_hi[static_cast<size_t>(p)] = suffix_hi[static_cast<size_t>(p) + 1] + hi[static_cast<size_t>(p)];
  }

  std::vector<Multidegree> out;
  std::vector<long long> deg(static_cast<size_t>(n), 0);  // aligned to vertex indices

  // DFS in sorted-id order, ascending values: results come out sorted
  auto rec = [&](auto&& self, int p, long long sum) -> void {
    if (p == n) {
      if (sum == d && classify_flavor(g, deg, flavor) >= flavor)
        out.push_back(Multidegree{deg});
      return;
    }
    for (long long v = lo[static_cast<size_t>(p)]; v <= hi[static_cast<size_t>(p)]; ++v) {
      long long s = sum + v;
      if (s + suffix_lo[static_cast<size_t>(p) + 1] > d) break;
      if (s + suffix_hi[static_cast<size_t>(p) + 1] < d) continue;
      deg[static_cast<size_t>(order[static_cast<size_t>(p)])] = v;
      self(self, p + 1, s);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// One representative per isomorphism class of blow-up of the base: every
/// subset of its nodes, and every choice of cusps when the base is p-stable.
/// The empty blow-up (the base itself) is included.
inline std::vector<CurveGraph> enumerate_blowups(const CurveGraph& base) {
  require_valid(base);
  bool stable = is_stable(base);
  bool p_stable = is_p_stable(base);
  if (!stable && !p_stable)
    throw PreconditionError("blow-up enumeration requires a stable or p-stable base");

  int m = static_cast<int>(base.edges().size());
  if (m > 20) throw PreconditionError("blow-up enumeration supports at most 20 edges");

  // cusp choices: per-vertex counts 0..cusps(v); only p-stable bases carry cusps
  std::vector<std::pair<std::string, int>> cusped;
  for (const Vertex& v : base.vertices())
    if (v.cusps > 0) cusped.emplace_back(v.id, v.cusps);

  std::map<std::string, CurveGraph> models;
  std::vector<int> cusp_choice(cusped.size(), 0);
  for (;;) {
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << m); ++subset) {
      BlowUpSelection sel;
      for (int e = 0; e < m; ++e)
        if (subset & (std::uint32_t{1} << e)) sel.node_edges.push_back(e);
      for (size_t i = 0; i < cusped.size(); ++i)
        if (cusp_choice[i] > 0) sel.cusp_counts[cusped[i].first] = cusp_choice[i];
      CurveGraph model = blow_up(base, sel);
      models.emplace(canonical_encoding(model), std::move(model));
    }
    // next cusp choice, odometer style
    size_t i = 0;
    while (i < cusped.size() && cusp_choice[i] == cusped[i].second) cusp_choice[i++] = 0;
    if (i == cusped.size()) break;
    ++cusp_choice[i];
  }

  std::vector<CurveGraph> out;
  out.reserve(models.size());
  for (auto& [enc, graph] : models) out.push_back(std::move(graph));
  return out;
}

/// One stratum of the compactified-Jacobian fiber over the base: a blow-up
/// model together with a strictly balanced positive multidegree on it.
struct StratumRecord {
  CurveGraph model;
  Multidegree multidegree;
  CurveGraph base;
};

inline std::vector<StratumRecord> fiber_strata(const CurveGraph& base, long long d) {
  if (!is_p_stable(base))
    throw PreconditionError("fiber strata are indexed over a p-stable base");
  std::vector<StratumRecord> out;
  for (const CurveGraph& model : enumerate_blowups(base)) {
    for (Multidegree& md :
         enumerate_multidegrees(model, d, BalanceFlavor::StrictlyBalanced, true))
      out.push_back(StratumRecord{model, std::move(md), base});
  }
  return out;
}

enum class CensusType { Stable, PStable };

/// Exhaustive list of isomorphism classes of connected (p-)stable dual
/// graphs of genus g with at most max_vertices components.  Desk-scale
/// generator; the documented parameter range is 2 <= g <= 5 and
/// 1 <= max_vertices <= 2g-2 (a genus-g curve of either kind has at most
/// 2g-2 components).
inline std::vector<CurveGraph> census(int g, CensusType type, int max_vertices) {
  if (g < 2 || g > 5)
    throw PreconditionError("census supports genus 2..5");
  if (max_vertices < 1 || max_vertices > 2 * g - 2)
    throw PreconditionError("census supports 1..2g-2 vertices");

  std::map<std::string, CurveGraph> found;

  for (int n = 1; n <= max_vertices; ++n) {
    int slots = n * (n + 1) / 2;
    std::vector<std::pair<int, int>> slot_at(static_cast<size_t>(slots));
    {
      int s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) slot_at[static_cast<size_t>(s++)] = {i, j};
    }

    std::vector<int> genus(static_cast<size_t>(n), 0);
    std::vector<int> cusps(static_cast<size_t>(n), 0);
    std::vector<int> mult(static_cast<size_t>(slots), 0);
    std::vector<int> spc(static_cast<size_t>(n), 0);  // special points so far

    auto threshold = [&](int v) {
      if (genus[static_cast<size_t>(v)] == 0) return 3;
      if (genus[static_cast<size_t>(v)] == 1) return 1;
      return 0;
    };

    // union-find connectivity straight off the multiplicity table, so
    // disconnected placements never pay for graph construction
    std::vector<int> parent(static_cast<size_t>(n));
    auto root = [&](int v) {
      while (parent[static_cast<size_t>(v)] != v) {
        parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        v = parent[static_cast<size_t>(v)];
      }
      return v;
    };
    auto connected_placement = [&]() {
      for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
      int components = n;
      for (int s = 0; s < slots; ++s) {
        if (mult[static_cast<size_t>(s)] == 0) continue;
        auto [i, j] = slot_at[static_cast<size_t>(s)];
        int ri = root(i), rj = root(j);
        if (ri != rj) {
          parent[static_cast<size_t>(ri)] = rj;
          --components;
        }
      }
      return components == 1;
    };

    auto emit = [&]() {
      if (!connected_placement()) return;
      CurveGraph graph;
      for (int i = 0; i < n; ++i)
        graph.add_vertex("v" + std::to_string(i), genus[static_cast<size_t>(i)],
                         cusps[static_cast<size_t>(i)]);
      for (int s = 0; s < slots; ++s)
        for (int c = 0; c < mult[static_cast<size_t>(s)]; ++c)
          graph.add_edge(slot_at[static_cast<size_t>(s)].first,
                         slot_at[static_cast<size_t>(s)].second);
      bool keep = type == CensusType::Stable ? is_stable(graph) : is_p_stable(graph);
      if (!keep) return;
      found.emplace(std::to_string(n) + "|" + canonical_encoding(graph), std::move(graph));
    };

    // multiplicities per slot, pruned by the special-point deficits that the
    // remaining edges could still cover (an edge covers at most 2)
    auto place_edges = [&](auto&& self, int s, int remaining) -> void {
      if (s == slots) {
        if (remaining == 0) emit();
        return;
      }
      auto [i, j] = slot_at[static_cast<size_t>(s)];
      for (int c = 0; c <= remaining; ++c) {
        mult[static_cast<size_t>(s)] = c;
        if (i == j) {
          spc[static_cast<size_t>(i)] += 2 * c;
        } else {
          spc[static_cast<size_t>(i)] += c;
          spc[static_cast<size_t>(j)] += c;
        }
        long long deficit = 0;
        for (int v = 0; v < n; ++v)
          deficit += std::max(0, threshold(v) - spc[static_cast<size_t>(v)]);
        bool prune = deficit > 2LL * (remaining - c);
        // row i ends at slot (i, n-1); after it, i gets no more edge ends
        if (!prune && j == n - 1 && spc[static_cast<size_t>(i)] < threshold(i)) prune = true;
        if (!prune) self(self, s + 1, remaining - c);
        if (i == j) {
          spc[static_cast<size_t>(i)] -= 2 * c;
        } else {
          spc[static_cast<size_t>(i)] -= c;
          spc[static_cast<size_t>(j)] -= c;
        }
      }
      mult[static_cast<size_t>(s)] = 0;
    };

    auto start_edges = [&](int decor_total) {
      int edges_total = (g - 1) + n - decor_total;
      if (edges_total < 0) return;
      if (n > 1 && edges_total < n - 1) return;  // loops never connect anything
      std::fill(mult.begin(), mult.end(), 0);
      for (int i = 0; i < n; ++i) spc[static_cast<size_t>(i)] = cusps[static_cast<size_t>(i)];
      place_edges(place_edges, 0, edges_total);
    };

    // decorations in non-increasing (genus, cusps) order: every isomorphism
    // class has such a labeling, and the symmetry cut is large for many
    // identical components
    auto assign_decor = [&](auto&& self, int v, int used, int prev_g, int prev_c) -> void {
      if (v == n) {
        start_edges(used);
        return;
      }
      for (int gv = std::min(prev_g, g - used); gv >= 0; --gv) {
        int cusp_room = type == CensusType::PStable ? g - used - gv : 0;
        if (gv == prev_g) cusp_room = std::min(cusp_room, prev_c);
        for (int cv = cusp_room; cv >= 0; --cv) {
          genus[static_cast<size_t>(v)] = gv;
          cusps[static_cast<size_t>(v)] = cv;
          self(self, v + 1, used + gv + cv, gv, cv);
        }
      }
      genus[static_cast<size_t>(v)] = 0;
      cusps[static_cast<size_t>(v)] = 0;
    };

    assign_decor(assign_decor, 0, 0, g, g);
  }

  std::vector<CurveGraph> out;
  out.reserve(found.size());
  for (auto& [enc, graph] : found) out.push_back(std::move(graph));
  return out;
}

}  // namespace gitstab
