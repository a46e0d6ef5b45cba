// Walks the genus-2 curve with two elliptic components joined at one node
// through the balancedness ladder and the stability decision for d = 9, 10.

#include <iostream>

#include "gitstab/gitstab.hpp"

using namespace gitstab;

int main() {
  CurveGraph g;
  g.add_vertex("v1", 1);
  g.add_vertex("v2", 1);
  g.add_edge("v1", "v2");

  std::cout << "curve: two elliptic components, one node; genus "
            << arithmetic_genus(g) << "\n";

  for (long long d : {9, 10}) {
    std::cout << "\nd = " << d << " (regime " << regime_name(regime(d, 2))
              << ", geometric quotient: " << (geometric_quotient(d, 2) ? "yes" : "no")
              << ")\n";
    for (const Multidegree& md : enumerate_multidegrees(g, d, BalanceFlavor::Balanced, true)) {
      PolarizedCurve pc{g, md};
      BalanceClassification bc = classify_multidegree(pc);
      GitDecision dec = decide(pc);
      std::cout << "  (" << md.degrees[0] << "," << md.degrees[1] << "): "
                << flavor_name(bc.flavor) << " -> " << status_name(dec.status) << "\n";
    }
  }
  return 0;
}
