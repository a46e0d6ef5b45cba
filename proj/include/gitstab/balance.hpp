// The basic inequality and the balancedness ladder for multidegrees.
//
// For a polarized curve of genus g and total degree d, a subcurve Z must
// satisfy  |deg_Z L - d/(2g-2) * deg_Z omega| <= k_Z / 2.  All comparisons
// are done in integers after scaling both sides by 2(2g-2); there is no
// floating point anywhere in this module.
//
// The four flavors stack as
//   Balanced            the inequality holds for every proper subcurve
//   ProperlyBalanced    and every exceptional component has degree 1
//   StrictlyBalanced    and equality occurs only where every crossing point
//                       lies on an exceptional component
//   StablyBalanced      and equality occurs only where Z or its complement
//                       consists of exceptional components
// The stable exemption set is contained in the strict one, so the ladder is
// totally ordered.

#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gitstab/curve_graph.hpp"

namespace gitstab {

enum class BalanceFlavor {
  NotBalanced = 0,
  Balanced = 1,
  ProperlyBalanced = 2,
  StrictlyBalanced = 3,
  StablyBalanced = 4,
};

inline const char* flavor_name(BalanceFlavor f) {
  switch (f) {
    case BalanceFlavor::NotBalanced: return "NotBalanced";
    case BalanceFlavor::Balanced: return "Balanced";
    case BalanceFlavor::ProperlyBalanced: return "ProperlyBalanced";
    case BalanceFlavor::StrictlyBalanced: return "StrictlyBalanced";
    case BalanceFlavor::StablyBalanced: return "StablyBalanced";
  }
  return "?";
}

/// Degrees aligned with the vertex order of the graph they polarize.
struct Multidegree {
  std::vector<long long> degrees;

  long long total() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0LL);
  }
};

inline Multidegree make_multidegree(const CurveGraph& g,
                                    const std::map<std::string, long long>& by_id) {
  if (static_cast<int>(by_id.size()) != g.vertex_count())
    throw PreconditionError("multidegree must assign exactly the graph's vertices");
  Multidegree md;
  md.degrees.resize(static_cast<size_t>(g.vertex_count()));
  for (const auto& [id, deg] : by_id)
    md.degrees[static_cast<size_t>(g.index_of(id))] = deg;
  return md;
}

inline std::map<std::string, long long> multidegree_by_id(const CurveGraph& g,
                                                          const Multidegree& md) {
  std::map<std::string, long long> out;
  for (int i = 0; i < g.vertex_count(); ++i)
    out[g.vertex(i).id] = md.degrees[static_cast<size_t>(i)];
  return out;
}

struct PolarizedCurve {
  CurveGraph graph;
  Multidegree multidegree;
};

inline void require_polarized(const PolarizedCurve& pc) {
  require_valid(pc.graph);
  if (static_cast<int>(pc.multidegree.degrees.size()) != pc.graph.vertex_count())
    throw PreconditionError("multidegree size does not match the vertex count");
}

enum class InequalityStatus { Fails, HoldsWithEquality, StrictlyHolds };

struct BasicInequalityResult {
  InequalityStatus status = InequalityStatus::Fails;
  bool strict_exempt = false;  // every crossing point lies on an exceptional component
  bool stable_exempt = false;  // Z or Z^c consists of exceptional components
  long long scaled_deviation = 0;  // |2(2g-2) deg_Z L - 2 d deg_Z omega|
  long long scaled_bound = 0;      // (2g-2) k_Z
};

namespace detail {

// exact floor/ceil division, b > 0
inline long long floor_div(long long a, long long b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

inline VertexMask exceptional_mask(const CurveGraph& g) {
  VertexMask m = 0;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (g.vertex(i).exceptional) m |= VertexMask{1} << i;
  return m;
}

inline BasicInequalityResult evaluate_inequality(const CurveGraph& g,
                                                 const std::vector<long long>& deg,
                                                 long long d, long long two_g_minus_2,
                                                 VertexMask exc, VertexMask mask) {
  BasicInequalityResult r;
  long long deg_z = 0;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (mask & (VertexMask{1} << i)) deg_z += deg[static_cast<size_t>(i)];
  long long k = 0;
  long long omega = 2 * subcurve_genus(g, mask) - 2;
  bool strict_exempt = true;
  for (const Edge& e : g.edges()) {
    bool ina = mask & (VertexMask{1} << e.a);
    bool inb = mask & (VertexMask{1} << e.b);
    if (ina == inb) continue;  // internal edges already counted in subcurve_genus
    k += edge_length(e.kind);
    if (!g.vertex(e.a).exceptional && !g.vertex(e.b).exceptional) strict_exempt = false;
  }
  omega += k;  // adjunction: deg_Z omega = 2 p_a(Z) - 2 + k_Z
  long long dev = 2 * two_g_minus_2 * deg_z - 2 * d * omega;
  if (dev < 0) dev = -dev;
  r.scaled_deviation = dev;
  r.scaled_bound = two_g_minus_2 * k;
  r.status = dev < r.scaled_bound    ? InequalityStatus::StrictlyHolds
             : dev == r.scaled_bound ? InequalityStatus::HoldsWithEquality
                                     : InequalityStatus::Fails;
  r.strict_exempt = strict_exempt;
  VertexMask comp = g.full_mask() & ~mask;
  r.stable_exempt = ((mask & ~exc) == 0) || ((comp & ~exc) == 0);
  return r;
}

// True iff the first id (in sorted-id order) on which the masks disagree
// belongs to `a`; this is lexicographic order on subcurves as id lists.
inline bool mask_less_by_ids(const CurveGraph& g, VertexMask a, VertexMask b) {
  for (int idx : g.indices_by_id()) {
    bool ina = a & (VertexMask{1} << idx);
    bool inb = b & (VertexMask{1} << idx);
    if (ina != inb) return ina;
  }
  return false;
}

inline void require_subset_scannable(const CurveGraph& g) {
  if (g.vertex_count() > 20)
    throw PreconditionError("subcurve scan supports at most 20 components");
}

struct BalanceScan {
  bool balanced = true;
  bool proper = true;
  bool strict = true;
  bool stable = true;
  std::optional<VertexMask> fail_witness;
  std::optional<VertexMask> strict_witness;
  std::optional<VertexMask> stable_witness;
  int proper_violation = -1;  // exceptional vertex with degree != 1
};

// Full subset scan.  With want_witness the lexicographically least witness
// per blocked upgrade is tracked; without it the scan exits as soon as the
// requested flavor is decided.
inline BalanceScan scan_balance(const CurveGraph& g, const std::vector<long long>& deg,
                                bool want_witness,
                                BalanceFlavor needed = BalanceFlavor::StablyBalanced) {
  require_subset_scannable(g);
  BalanceScan scan;
  long long d = std::accumulate(deg.begin(), deg.end(), 0LL);
  long long two_g_minus_2 = 2 * arithmetic_genus(g) - 2;
  if (two_g_minus_2 <= 0)
    throw PreconditionError("the basic inequality needs arithmetic genus >= 2");
  VertexMask exc = exceptional_mask(g);
  VertexMask full = g.full_mask();

  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!g.vertex(i).exceptional || deg[static_cast<size_t>(i)] == 1) continue;
    scan.proper = false;
    if (scan.proper_violation < 0 ||
        g.vertex(i).id < g.vertex(scan.proper_violation).id)
      scan.proper_violation = i;
  }

  auto keep_least = [&](std::optional<VertexMask>& slot, VertexMask mask) {
    if (!slot || mask_less_by_ids(g, mask, *slot)) slot = mask;
  };

  for (VertexMask mask = 1; mask < full; ++mask) {
    BasicInequalityResult r = evaluate_inequality(g, deg, d, two_g_minus_2, exc, mask);
    if (r.status == InequalityStatus::Fails) {
      scan.balanced = false;
      if (want_witness) keep_least(scan.fail_witness, mask);
    } else if (r.status == InequalityStatus::HoldsWithEquality) {
      if (!r.strict_exempt) {
        scan.strict = false;
        if (want_witness) keep_least(scan.strict_witness, mask);
      }
      if (!r.stable_exempt) {
        scan.stable = false;
        if (want_witness) keep_least(scan.stable_witness, mask);
      }
    }
    // early exit once the answer to "flavor >= needed" is definitively no
    if (!want_witness) {
      if (!scan.balanced) return scan;
      if (needed == BalanceFlavor::StrictlyBalanced && !scan.strict) return scan;
      if (needed == BalanceFlavor::StablyBalanced && !scan.stable) return scan;
    }
  }
  return scan;
}

inline BalanceFlavor flavor_of(const BalanceScan& scan) {
  if (!scan.balanced) return BalanceFlavor::NotBalanced;
  if (!scan.proper) return BalanceFlavor::Balanced;
  if (!scan.strict) return BalanceFlavor::ProperlyBalanced;
  if (!scan.stable) return BalanceFlavor::StrictlyBalanced;
  return BalanceFlavor::StablyBalanced;
}

}  // namespace detail

/// Evaluates the basic inequality for one proper nonempty subcurve, with the
/// scaled integer margin and the two exemption flags.
inline BasicInequalityResult basic_inequality(const PolarizedCurve& pc, VertexMask mask) {
  require_polarized(pc);
  if (mask == 0 || mask == pc.graph.full_mask())
    throw PreconditionError("the basic inequality needs a proper nonempty subcurve");
  long long two_g_minus_2 = 2 * arithmetic_genus(pc.graph) - 2;
  if (two_g_minus_2 <= 0)
    throw PreconditionError("the basic inequality needs arithmetic genus >= 2");
  return detail::evaluate_inequality(pc.graph, pc.multidegree.degrees,
                                     pc.multidegree.total(), two_g_minus_2,
                                     detail::exceptional_mask(pc.graph), mask);
}

inline BasicInequalityResult basic_inequality(const PolarizedCurve& pc, const Subcurve& z) {
  return basic_inequality(pc, mask_of(pc.graph, z));
}

struct BalanceClassification {
  BalanceFlavor flavor = BalanceFlavor::NotBalanced;
  /// Lexicographically least subcurve blocking the next flavor upgrade;
  /// absent when stably balanced.
  std::optional<Subcurve> witness;
};

/// Scans every proper nonempty subcurve and reports the maximal flavor the
/// multidegree attains, with a deterministic witness for the first upgrade
/// that fails.
inline BalanceClassification classify_multidegree(const PolarizedCurve& pc) {
  require_polarized(pc);
  detail::BalanceScan scan = detail::scan_balance(pc.graph, pc.multidegree.degrees, true);
  BalanceClassification out;
  out.flavor = detail::flavor_of(scan);
  switch (out.flavor) {
    case BalanceFlavor::NotBalanced:
      out.witness = subcurve_of(pc.graph, *scan.fail_witness);
      break;
    case BalanceFlavor::Balanced:
      out.witness = Subcurve{{pc.graph.vertex(scan.proper_violation).id}};
      break;
    case BalanceFlavor::ProperlyBalanced:
      out.witness = subcurve_of(pc.graph, *scan.strict_witness);
      break;
    case BalanceFlavor::StrictlyBalanced:
      out.witness = subcurve_of(pc.graph, *scan.stable_witness);
      break;
    case BalanceFlavor::StablyBalanced:
      break;
  }
  return out;
}

/// Flavor-only variant with early exit, used by the enumerators.  The result
/// compares correctly against `needed` (and is exact at or above it), but a
/// result below `needed` may underreport the precise flavor.
inline BalanceFlavor classify_flavor(const CurveGraph& g, const std::vector<long long>& deg,
                                     BalanceFlavor needed = BalanceFlavor::StablyBalanced) {
  return detail::flavor_of(detail::scan_balance(g, deg, false, needed));
}

/// Checks the basic inequality over connected subcurves only.  For the
/// Balanced flavor this is equivalent to the full scan; kept as a separately
/// testable optimization.
inline bool balanced_over_connected(const PolarizedCurve& pc) {
  require_polarized(pc);
  detail::require_subset_scannable(pc.graph);
  const CurveGraph& g = pc.graph;
  long long d = pc.multidegree.total();
  long long two_g_minus_2 = 2 * arithmetic_genus(g) - 2;
  if (two_g_minus_2 <= 0)
    throw PreconditionError("the basic inequality needs arithmetic genus >= 2");
  VertexMask exc = detail::exceptional_mask(g);
  VertexMask full = g.full_mask();
  for (VertexMask mask = 1; mask < full; ++mask) {
    // connectivity of the induced subgraph
    int start = -1, members = 0;
    for (int i = 0; i < g.vertex_count(); ++i)
      if (mask & (VertexMask{1} << i)) {
        if (start < 0) start = i;
        ++members;
      }
    VertexMask seen = VertexMask{1} << start;
    std::vector<int> stack = {start};
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges()) {
        int other = -1;
        if (e.a == v) other = e.b;
        else if (e.b == v) other = e.a;
        else continue;
        VertexMask bit = VertexMask{1} << other;
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          ++reached;
          stack.push_back(other);
        }
      }
    }
    if (reached != members) continue;
    auto r = detail::evaluate_inequality(g, pc.multidegree.degrees, d, two_g_minus_2, exc, mask);
    if (r.status == InequalityStatus::Fails) return false;
  }
  return true;
}

struct DegreeBounds {
  long long lo = 0;
  long long hi = 0;
};

/// Smallest integer interval containing every degree the single-vertex
/// inequality allows on v.  For a one-vertex curve the interval degenerates
/// to the total degree.
inline DegreeBounds degree_bounds(const CurveGraph& g, long long d, int v) {
  require_valid(g);
  long long two_g_minus_2 = 2 * arithmetic_genus(g) - 2;
  if (two_g_minus_2 <= 0)
    throw PreconditionError("degree bounds need arithmetic genus >= 2");
  if (g.vertex_count() == 1) return DegreeBounds{d, d};
  VertexMask mask = VertexMask{1} << v;
  long long omega = omega_degree(g, mask);
  long long k = intersection_length(g, mask);
  // m_v +- k_v/2 with m_v = d * omega / (2g-2), over the denominator 2(2g-2)
  long long lo = detail::ceil_div(2 * d * omega - two_g_minus_2 * k, 2 * two_g_minus_2);
  long long hi = detail::floor_div(2 * d * omega + two_g_minus_2 * k, 2 * two_g_minus_2);
  return DegreeBounds{lo, hi};
}

inline DegreeBounds degree_bounds(const CurveGraph& g, long long d, const std::string& id) {
  return degree_bounds(g, d, g.index_of(id));
}

}  // namespace gitstab
