#include <catch2/catch_amalgamated.hpp>

#include "gitstab/balance.hpp"
#include "gitstab/enumeration.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace gitstab;
using namespace fixtures;

namespace {

PolarizedCurve polarize(const CurveGraph& g, std::map<std::string, long long> by_id) {
  return PolarizedCurve{g, make_multidegree(g, by_id)};
}

}  // namespace

TEST_CASE("basic inequality on the two-elliptic curve") {
  CurveGraph g = two_elliptic();
  Subcurve z{{"v1"}};

  auto equality = basic_inequality(polarize(g, {{"v1", 4}, {"v2", 5}}), z);
  CHECK(equality.status == InequalityStatus::HoldsWithEquality);
  CHECK(equality.scaled_deviation == 2);  // |2*2*4 - 2*9*1|
  CHECK(equality.scaled_bound == 2);      // (2g-2) * k
  CHECK_FALSE(equality.strict_exempt);
  CHECK_FALSE(equality.stable_exempt);

  auto strict = basic_inequality(polarize(g, {{"v1", 5}, {"v2", 5}}), z);
  CHECK(strict.status == InequalityStatus::StrictlyHolds);
  CHECK(strict.scaled_deviation == 0);

  auto fails = basic_inequality(polarize(g, {{"v1", 6}, {"v2", 3}}), z);
  CHECK(fails.status == InequalityStatus::Fails);
  CHECK(fails.scaled_deviation == 6);
}

TEST_CASE("exemption flags on a cusp blow-up model") {
  // host g=1 + exceptional line along a tacnode, d = 10, degrees (9,1):
  // equality on both sides, both exempt since the complement is exceptional
  PolarizedCurve pc = polarize(tacnode_model(1), {{"host", 9}, {"exc0", 1}});
  auto host_side = basic_inequality(pc, Subcurve{{"host"}});
  CHECK(host_side.status == InequalityStatus::HoldsWithEquality);
  CHECK(host_side.strict_exempt);
  CHECK(host_side.stable_exempt);
  auto exc_side = basic_inequality(pc, Subcurve{{"exc0"}});
  CHECK(exc_side.status == InequalityStatus::HoldsWithEquality);
  CHECK(exc_side.stable_exempt);
  CHECK(classify_multidegree(pc).flavor == BalanceFlavor::StablyBalanced);
}

TEST_CASE("basic inequality preconditions") {
  CurveGraph g = two_elliptic();
  PolarizedCurve pc = polarize(g, {{"v1", 5}, {"v2", 5}});
  CHECK_THROWS_AS(basic_inequality(pc, VertexMask{0}), PreconditionError);
  CHECK_THROWS_AS(basic_inequality(pc, g.full_mask()), PreconditionError);

  CurveGraph small = smooth(1);
  PolarizedCurve low{small, make_multidegree(small, {{"v", 3}})};
  CHECK_THROWS_AS(classify_multidegree(low), PreconditionError);
}

TEST_CASE("multidegree classification on the worked genus-2 table") {
  CurveGraph g = two_elliptic();

  auto stably = classify_multidegree(polarize(g, {{"v1", 5}, {"v2", 5}}));
  CHECK(stably.flavor == BalanceFlavor::StablyBalanced);
  CHECK_FALSE(stably.witness.has_value());

  auto properly = classify_multidegree(polarize(g, {{"v1", 4}, {"v2", 5}}));
  CHECK(properly.flavor == BalanceFlavor::ProperlyBalanced);
  REQUIRE(properly.witness.has_value());
  CHECK(*properly.witness == Subcurve{{"v1"}});

  auto unbalanced = classify_multidegree(polarize(g, {{"v1", 3}, {"v2", 6}}));
  CHECK(unbalanced.flavor == BalanceFlavor::NotBalanced);
  REQUIRE(unbalanced.witness.has_value());
  CHECK(basic_inequality(polarize(g, {{"v1", 3}, {"v2", 6}}), *unbalanced.witness).status ==
        InequalityStatus::Fails);
}

TEST_CASE("an exceptional component of degree other than 1 blocks properness") {
  // chain v1 - E - v2 blown up from the two-elliptic curve, d = 11:
  // (5,1,5) is properly balanced; (4,2,5) at most balanced
  CurveGraph g;
  g.add_vertex("v1", 1);
  g.add_vertex("v2", 1);
  g.add_vertex("zexc", 0, 0, true);
  g.add_edge("v1", "zexc");
  g.add_edge("zexc", "v2");

  auto ok = classify_multidegree(polarize(g, {{"v1", 5}, {"v2", 5}, {"zexc", 1}}));
  CHECK(ok.flavor >= BalanceFlavor::ProperlyBalanced);

  auto off = classify_multidegree(polarize(g, {{"v1", 5}, {"v2", 6}, {"zexc", 0}}));
  CHECK(off.flavor == BalanceFlavor::Balanced);
  REQUIRE(off.witness.has_value());
  CHECK(*off.witness == Subcurve{{"zexc"}});
}

TEST_CASE("degree bounds") {
  auto b = degree_bounds(two_elliptic(), 9, "v1");
  CHECK(b.lo == 4);
  CHECK(b.hi == 5);

  auto single = degree_bounds(smooth(2), 7, "v");
  CHECK(single.lo == 7);
  CHECK(single.hi == 7);

  auto exc = degree_bounds(tacnode_model(1), 10, "exc0");
  CHECK(exc.lo == -1);
  CHECK(exc.hi == 1);
}

TEST_CASE("complement symmetry of the basic inequality") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    CurveGraph g = random_graph(rng);
    if (g.vertex_count() < 2) continue;
    PolarizedCurve pc{g, Multidegree{random_multidegree(rng, g.vertex_count())}};
    VertexMask full = g.full_mask();
    VertexMask z = std::uniform_int_distribution<VertexMask>(1, full - 1)(rng);
    auto a = basic_inequality(pc, z);
    auto b = basic_inequality(pc, full & ~z);
    CHECK(a.status == b.status);
    CHECK(a.scaled_deviation == b.scaled_deviation);
    CHECK(a.scaled_bound == b.scaled_bound);
    CHECK(a.stable_exempt == b.stable_exempt);
    CHECK(a.strict_exempt == b.strict_exempt);
  }
}

TEST_CASE("flavor ladder is consistent with per-subcurve statuses") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    CurveGraph g = random_graph(rng);
    PolarizedCurve pc{g, Multidegree{random_multidegree(rng, g.vertex_count())}};
    BalanceFlavor flavor = classify_multidegree(pc).flavor;

    bool balanced = true, proper = true, strict = true, stable = true;
    VertexMask full = g.full_mask();
    for (VertexMask z = 1; g.vertex_count() > 1 && z < full; ++z) {
      auto r = basic_inequality(pc, z);
      if (r.status == InequalityStatus::Fails) balanced = false;
      if (r.status == InequalityStatus::HoldsWithEquality) {
        if (!r.strict_exempt) strict = false;
        if (!r.stable_exempt) stable = false;
      }
      // the stable exemption set is nested inside the strict one
      if (r.stable_exempt) CHECK(r.strict_exempt);
    }
    for (int i = 0; i < g.vertex_count(); ++i)
      if (g.vertex(i).exceptional && pc.multidegree.degrees[static_cast<size_t>(i)] != 1)
        proper = false;

    BalanceFlavor expected = !balanced  ? BalanceFlavor::NotBalanced
                             : !proper  ? BalanceFlavor::Balanced
                             : !strict  ? BalanceFlavor::ProperlyBalanced
                             : !stable  ? BalanceFlavor::StrictlyBalanced
                                        : BalanceFlavor::StablyBalanced;
    CHECK(flavor == expected);
  }
}

TEST_CASE("connected-subcurve scan agrees with the full scan for Balanced") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    CurveGraph g = random_graph(rng);
    PolarizedCurve pc{g, Multidegree{random_multidegree(rng, g.vertex_count())}};
    bool full_scan = classify_multidegree(pc).flavor >= BalanceFlavor::Balanced;
    CHECK(balanced_over_connected(pc) == full_scan);
  }
}

TEST_CASE("positive balanced multidegrees give every exceptional line degree 1") {
  CurveGraph model = blow_up(theta(), BlowUpSelection{{0, 1}, {}});
  for (long long d = 9; d <= 14; ++d) {
    for (const Multidegree& md :
         enumerate_multidegrees(model, d, BalanceFlavor::Balanced, true)) {
      for (int i = 0; i < model.vertex_count(); ++i)
        if (model.vertex(i).exceptional) CHECK(md.degrees[static_cast<size_t>(i)] == 1);
    }
  }
}

TEST_CASE("classification agrees with the rational-arithmetic oracle") {
  std::mt19937 rng(37);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    CurveGraph g = random_graph(rng, {.max_core_vertices = 4, .max_exceptional = 2});
    if (arithmetic_genus(g) < 2) continue;
    std::vector<long long> deg = random_multidegree(rng, g.vertex_count());
    PolarizedCurve pc{g, Multidegree{deg}};
    CHECK(static_cast<int>(classify_multidegree(pc).flavor) ==
          static_cast<int>(oracle::classify(g, deg)));
    ++compared;
  }
  CHECK(compared > 300);
}
