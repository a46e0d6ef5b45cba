// Degree-regime dispatch and the combinatorial GIT stability decision.
//
// Two degree regimes admit a complete combinatorial answer for connected
// polarized curves, and Hilbert and Chow verdicts coincide there:
//
//   TheoremA   d > 4(2g-2), g >= 2:  semistable <=> quasi-stable + balanced,
//              polystable adds strictly balanced, stable adds stably balanced
//   TheoremB   2(2g-2) < d < 7(g-1), g >= 3:  the same ladder with
//              quasi-p-stable in place of quasi-stable
//
// Between them sits a gap where only necessary conditions are known; below
// 2(2g-2) and for genus 2 in the middle range nothing is decided here.  The
// quotient is geometric (semistable = stable throughout) exactly when
// gcd(2g-2, d-g+1) = 1.

#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gitstab/balance.hpp"
#include "gitstab/curve_class.hpp"
#include "gitstab/curve_graph.hpp"

namespace gitstab {

enum class Regime { TheoremA, TheoremB, GapRegion, LowDegree, SmallGenusB };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::TheoremA: return "TheoremA";
    case Regime::TheoremB: return "TheoremB";
    case Regime::GapRegion: return "GapRegion";
    case Regime::LowDegree: return "LowDegree";
    case Regime::SmallGenusB: return "SmallGenusB";
  }
  return "?";
}

/// The unique regime containing (d, g).  Boundary points d = 7(g-1) and
/// d = 4(2g-2) go to the gap (both theorem ranges are strict there);
/// d = 2(2g-2) is low degree.  For genus 2 the whole middle range is
/// undecided, since the second regime needs g >= 3.
inline Regime regime(long long d, int g) {
  if (g < 2) throw PreconditionError("regimes are defined for genus >= 2");
  long long two_g_minus_2 = 2LL * g - 2;
  if (d <= 2 * two_g_minus_2) return Regime::LowDegree;
  if (d > 4 * two_g_minus_2) return Regime::TheoremA;
  if (g == 2) return Regime::SmallGenusB;
  if (d < 7LL * (g - 1)) return Regime::TheoremB;
  return Regime::GapRegion;
}

/// Semistable = stable (geometric quotient) iff gcd(2g-2, d-g+1) = 1.
inline bool geometric_quotient(long long d, int g) {
  if (g < 2) throw PreconditionError("geometric quotient test needs genus >= 2");
  return std::gcd(2LL * g - 2, d - g + 1) == 1;
}

enum class GitStatusKind { Stable, StrictlyPolystable, StrictlySemistable, Unstable, Unknown };

inline const char* status_name(GitStatusKind s) {
  switch (s) {
    case GitStatusKind::Stable: return "Stable";
    case GitStatusKind::StrictlyPolystable: return "StrictlyPolystable";
    case GitStatusKind::StrictlySemistable: return "StrictlySemistable";
    case GitStatusKind::Unstable: return "Unstable";
    case GitStatusKind::Unknown: return "Unknown";
  }
  return "?";
}

/// One-sided report: failing it rules semistability out, passing it proves
/// nothing.
struct NecessaryReport {
  bool passes = true;
  std::vector<std::string> reasons;  // empty when passes
};

namespace detail {

inline NecessaryReport necessary_conditions(const PolarizedCurve& pc) {
  NecessaryReport rep;
  if (classify_flavor(pc.graph, pc.multidegree.degrees, BalanceFlavor::Balanced) <
      BalanceFlavor::Balanced)
    rep.reasons.push_back("not balanced");
  for (const Edge& e : pc.graph.edges()) {
    if (e.kind != EdgeKind::Tacnode) continue;
    int exc = pc.graph.vertex(e.a).exceptional ? e.a : e.b;
    if (pc.multidegree.degrees[static_cast<size_t>(exc)] != 1) {
      rep.reasons.push_back("tacnodal component not a line");
      break;
    }
  }
  rep.passes = rep.reasons.empty();
  return rep;
}

}  // namespace detail

/// Necessary conditions for semistability in the gap region: the multidegree
/// is balanced and every tacnodal component is a line (degree 1).
inline NecessaryReport gap_necessary(const PolarizedCurve& pc) {
  require_polarized(pc);
  if (!is_connected(pc.graph))
    throw PreconditionError("the necessary-condition check assumes a connected curve");
  int g = arithmetic_genus(pc.graph);
  if (g < 2) throw PreconditionError("the necessary-condition check needs genus >= 2");
  if (regime(pc.multidegree.total(), g) != Regime::GapRegion)
    throw PreconditionError("the necessary-condition check applies to the gap region only");
  return detail::necessary_conditions(pc);
}

struct GitDecision {
  GitStatusKind status = GitStatusKind::Unknown;
  Regime regime = Regime::LowDegree;
  BalanceFlavor flavor = BalanceFlavor::NotBalanced;
  std::string reason;
  std::optional<Subcurve> witness;            // subcurve behind a demotion
  std::optional<NecessaryReport> necessary;   // attached to Unknown verdicts
};

/// Decides GIT (semi/poly)stability of a connected polarized curve with
/// strictly positive multidegree.  Hilbert and Chow verdicts agree in both
/// decided regimes and are reported as one.
inline GitDecision decide(const PolarizedCurve& pc) {
  require_polarized(pc);
  if (!is_connected(pc.graph))
    throw PreconditionError(
        "input curve is disconnected; the stability criteria assume a connected curve");
  int g = arithmetic_genus(pc.graph);
  if (g < 2)
    throw PreconditionError("the stability criteria assume arithmetic genus >= 2");
  for (int i = 0; i < pc.graph.vertex_count(); ++i)
    if (pc.multidegree.degrees[static_cast<size_t>(i)] <= 0)
      throw PreconditionError("embedded components have positive degree; vertex '" +
                              pc.graph.vertex(i).id + "' has degree " +
                              std::to_string(pc.multidegree.degrees[static_cast<size_t>(i)]));

  GitDecision out;
  long long d = pc.multidegree.total();
  out.regime = regime(d, g);

  if (out.regime == Regime::GapRegion || out.regime == Regime::LowDegree ||
      out.regime == Regime::SmallGenusB) {
    out.status = GitStatusKind::Unknown;
    out.necessary = detail::necessary_conditions(pc);
    out.reason = std::string(regime_name(out.regime)) +
                 ": no combinatorial criterion decides this degree range; "
                 "necessary conditions " +
                 (out.necessary->passes ? "pass" : "fail");
    return out;
  }

  CurveClass cls = classify_curve(pc.graph);
  bool model_ok = out.regime == Regime::TheoremA ? cls.is_quasi_stable : cls.is_quasi_p_stable;
  const char* model_name = out.regime == Regime::TheoremA ? "quasi-stable" : "quasi-p-stable";
  if (!model_ok) {
    out.status = GitStatusKind::Unstable;
    out.reason = std::string("not ") + model_name;
    return out;
  }

  BalanceClassification bc = classify_multidegree(pc);
  out.flavor = bc.flavor;
  out.witness = bc.witness;
  switch (bc.flavor) {
    case BalanceFlavor::NotBalanced:
      out.status = GitStatusKind::Unstable;
      out.reason = std::string(model_name) + " but not balanced";
      break;
    case BalanceFlavor::Balanced:
    case BalanceFlavor::ProperlyBalanced:
      out.status = GitStatusKind::StrictlySemistable;
      out.reason = std::string(model_name) +
                   ", balanced, with a non-exempt equality blocking strict balance";
      break;
    case BalanceFlavor::StrictlyBalanced:
      out.status = GitStatusKind::StrictlyPolystable;
      out.reason = std::string(model_name) + ", strictly but not stably balanced";
      break;
    case BalanceFlavor::StablyBalanced:
      out.status = GitStatusKind::Stable;
      out.reason = std::string(model_name) + " and stably balanced";
      break;
  }
  return out;
}

}  // namespace gitstab
