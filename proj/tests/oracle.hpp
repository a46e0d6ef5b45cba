// Independent brute-force classifier used as the test oracle.
//
// Classifies a multidegree on a decorated dual graph by evaluating the basic
// inequality literally, with its own rational arithmetic and its own genus /
// intersection bookkeeping.  Reads only the raw graph data; shares no
// computation path with the library it checks.

#pragma once

#include <cstdlib>
#include <numeric>
#include <vector>

#include "gitstab/curve_graph.hpp"

namespace oracle {

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

inline Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
inline Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
inline Rat rat_abs(Rat a) { return a.num < 0 ? Rat(-a.num, a.den) : a; }
inline bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
inline bool operator==(Rat a, Rat b) { return a.num * b.den == b.num * a.den; }
inline bool operator<=(Rat a, Rat b) { return a < b || a == b; }

enum class Flavor {
  NotBalanced = 0,
  Balanced = 1,
  ProperlyBalanced = 2,
  StrictlyBalanced = 3,
  StablyBalanced = 4,
};

// Genus of the subcurve picked by mask, recomputed from scratch:
// sum(genus + cusps) + sum of internal edge lengths - #vertices + 1.
inline long long sub_genus(const gitstab::CurveGraph& g, unsigned mask) {
  long long total = 0, count = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!(mask & (1u << i))) continue;
    total += g.vertex(i).genus + g.vertex(i).cusps;
    ++count;
  }
  for (const auto& e : g.edges()) {
    bool ina = mask & (1u << e.a);
    bool inb = mask & (1u << e.b);
    if (ina && inb) total += (e.kind == gitstab::EdgeKind::Tacnode) ? 2 : 1;
  }
  return total - count + 1;
}

inline long long crossing_length(const gitstab::CurveGraph& g, unsigned mask) {
  long long k = 0;
  for (const auto& e : g.edges()) {
    bool ina = mask & (1u << e.a);
    bool inb = mask & (1u << e.b);
    if (ina != inb) k += (e.kind == gitstab::EdgeKind::Tacnode) ? 2 : 1;
  }
  return k;
}

// deg_Z(omega) = 2 p_a(Z) - 2 + k_Z.
inline long long omega_deg(const gitstab::CurveGraph& g, unsigned mask) {
  return 2 * sub_genus(g, mask) - 2 + crossing_length(g, mask);
}

// Direct rational-arithmetic loop over every proper nonempty subset.
inline Flavor classify(const gitstab::CurveGraph& g, const std::vector<long long>& deg) {
  int n = g.vertex_count();
  unsigned full = (n >= 32) ? ~0u : ((1u << n) - 1u);
  long long d = 0;
  for (long long x : deg) d += x;
  long long two_g_minus_2 = 2 * sub_genus(g, full) - 2;

  bool any_fail = false;
  bool equality_outside_strict_exempt = false;
  bool equality_outside_stable_exempt = false;

  unsigned exc_mask = 0;
  for (int i = 0; i < n; ++i)
    if (g.vertex(i).exceptional) exc_mask |= 1u << i;

  for (unsigned mask = 1; mask < full; ++mask) {
    long long degL = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) degL += deg[static_cast<size_t>(i)];
    Rat lhs = rat_abs(Rat(degL) - Rat(d, two_g_minus_2) * Rat(omega_deg(g, mask)));
    Rat rhs(crossing_length(g, mask), 2);
    if (rhs < lhs) {
      any_fail = true;
      continue;
    }
    if (lhs == rhs) {
      bool strict_exempt = true;
      for (const auto& e : g.edges()) {
        bool ina = mask & (1u << e.a);
        bool inb = mask & (1u << e.b);
        if (ina != inb && !g.vertex(e.a).exceptional && !g.vertex(e.b).exceptional)
          strict_exempt = false;
      }
      bool stable_exempt =
          ((mask & ~exc_mask) == 0) || (((full & ~mask) & ~exc_mask) == 0);
      if (!strict_exempt) equality_outside_strict_exempt = true;
      if (!stable_exempt) equality_outside_stable_exempt = true;
    }
  }

  if (any_fail) return Flavor::NotBalanced;
  bool proper = true;
  for (int i = 0; i < n; ++i)
    if (g.vertex(i).exceptional && deg[static_cast<size_t>(i)] != 1) proper = false;
  if (!proper) return Flavor::Balanced;
  if (equality_outside_strict_exempt) return Flavor::ProperlyBalanced;
  if (equality_outside_stable_exempt) return Flavor::StrictlyBalanced;
  return Flavor::StablyBalanced;
}

}  // namespace oracle
