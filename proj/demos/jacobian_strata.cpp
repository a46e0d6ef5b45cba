// Lists the compactified-Jacobian fiber strata over two p-stable genus-2
// curves: one with a cusp (blown up to a tacnode model) and one with a node
// (blown up to an exceptional line between the branches).

#include <iostream>

#include "gitstab/gitstab.hpp"

using namespace gitstab;

static void show(const char* label, const CurveGraph& base, long long d) {
  std::cout << label << ", d = " << d << ":\n";
  for (const StratumRecord& s : fiber_strata(base, d)) {
    std::cout << "  model {";
    for (int i = 0; i < s.model.vertex_count(); ++i) {
      const Vertex& v = s.model.vertex(i);
      std::cout << (i ? ", " : "") << v.id << "(g=" << v.genus << ",c=" << v.cusps
                << (v.exceptional ? ",exc" : "") << ")";
    }
    std::cout << "} degrees (";
    for (size_t i = 0; i < s.multidegree.degrees.size(); ++i)
      std::cout << (i ? "," : "") << s.multidegree.degrees[i];
    std::cout << ")\n";
  }
}

int main() {
  CurveGraph cusp_curve;
  cusp_curve.add_vertex("h", 1, 1);
  show("elliptic with one cusp", cusp_curve, 10);

  CurveGraph loop_curve;
  loop_curve.add_vertex("h", 1);
  loop_curve.add_edge("h", "h");
  show("elliptic with one node", loop_curve, 10);
  return 0;
}
