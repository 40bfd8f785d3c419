#include "oracles.hpp"

#include "polyvol/andreev.hpp"
#include "polyvol/generators.hpp"
#include "polyvol/rewrite.hpp"

#include <gtest/gtest.h>

using namespace polyvol;

namespace {

const angle R2 = angle::pi_over(2);
const angle R3 = angle::pi_over(3);

labeled_polyhedron cube(angle a = R2) {
  std::vector<std::vector<int>> f{{0, 1, 2, 3}, {4, 7, 6, 5}, {0, 4, 5, 1},
                                  {1, 5, 6, 2}, {2, 6, 7, 3}, {3, 7, 4, 0}};
  return build_polyhedron(8, f, [a](int, int) { return a; });
}

// sum of labels at v in units of pi, against 1 (degree 3) or 2 (degree 4)
vertex_kind expected_kind(const labeled_polyhedron& p, int v) {
  rational s(0);
  for (int w : p.map().rotation(v)) s += p.label(p.edge_index(v, w)).pi_multiple();
  rational target(p.degree(v) - 2);
  return s > target ? vertex_kind::finite : s < target ? vertex_kind::hyperideal : vertex_kind::ideal;
}

}  // namespace

TEST(Andreev, RightAngledTriangularPrismFailsSix) {
  auto p = make_prism(3, right_horizontal_labels(3, R2));
  try {
    auto r = check_andreev(p);
    EXPECT_FALSE(r.realizable);
    EXPECT_TRUE(r.violates("A6"));
  } catch (const andreev_error& e) {
    EXPECT_EQ(e.code(), andreev_errc::is_triangular_prism);
  }
}

TEST(Andreev, RightAngledCubeFailsFive) {
  auto r = check_andreev(cube());
  EXPECT_FALSE(r.realizable);
  EXPECT_TRUE(r.violates("A5"));
  bool witnessed = false;
  for (const auto& v : r.violated)
    if (v.condition == "A5") witnessed = v.edges.size() == 4;
  EXPECT_TRUE(witnessed);
}

TEST(Andreev, RightAngledDodecahedron) {
  auto r = check_andreev(make_dodecahedron(R2));
  EXPECT_TRUE(r.realizable);
  EXPECT_TRUE(r.finite_volume);
  EXPECT_TRUE(r.violated.empty());
  ASSERT_EQ(r.vertex_types.size(), 20u);
  for (auto k : r.vertex_types) EXPECT_EQ(k, vertex_kind::finite);
}

TEST(Andreev, ExactPiSumIsIdeal) {
  // three pi/3 edges at one dodecahedron vertex
  auto d = make_dodecahedron(R2);
  std::vector<angle> labels = d.labels();
  for (int w : d.map().rotation(0)) labels[d.edge_index(0, w)] = R3;
  auto p = d.with_labels(labels);
  auto r = check_andreev(p);
  EXPECT_EQ(r.vertex_types[0], vertex_kind::ideal);
  EXPECT_TRUE(r.realizable);
  EXPECT_TRUE(r.finite_volume);

  // pi/2 + pi/4 + pi/4 on a cube corner
  auto q = cube().with_labels([&] {
    auto c = cube();
    std::vector<angle> l = c.labels();
    l[c.edge_index(0, 1)] = angle::pi_over(4);
    l[c.edge_index(0, 3)] = angle::pi_over(4);
    return l;
  }());
  EXPECT_EQ(check_andreev(q).vertex_types[0], vertex_kind::ideal);
}

TEST(Andreev, VertexKindsMatchExactSums) {
  for (const auto& s : oracle::coxeter_corpus()) {
    if (s.p.vertex_count() <= 6) continue;
    realizability_report r;
    try {
      r = check_andreev(s.p);
    } catch (const andreev_error&) {
      continue;
    }
    for (int v = 0; v < s.p.vertex_count(); ++v) EXPECT_EQ(r.vertex_types[v], expected_kind(s.p, v)) << s.name;
  }
}

TEST(Andreev, AlternatingPrismsRealizable) {
  for (int n = 5; n <= 10; ++n) {
    auto r = check_andreev(make_prism(n, alternating_labels(n)));
    EXPECT_TRUE(r.realizable) << n;
    EXPECT_TRUE(r.finite_volume) << n;
  }
}

TEST(Andreev, RightHorizontalPrismsViolateFive) {
  for (int n = 5; n <= 8; ++n) {
    auto r = check_andreev(make_prism(n, right_horizontal_labels(n, R2)));
    EXPECT_FALSE(r.realizable);
    EXPECT_TRUE(r.violates("A5")) << n;
  }
}

TEST(Andreev, ObtuseLabelRejected) {
  auto c = cube();
  auto l = c.labels();
  l[0] = angle::pi_fraction(2, 3);
  EXPECT_THROW(c.with_labels(l), polyhedron_error);
}

TEST(Generalized, PiThirdPrismAllFinite) {
  auto p = make_prism(5, prism_labels_from_pattern("RRRRR", R2));
  prism_labels l;
  for (int i = 0; i < 5; ++i) {
    l.a.push_back(R3);
    l.b.push_back(R3);
    l.c.push_back(R2);
  }
  auto r = check_generalized(make_prism(5, l));
  EXPECT_TRUE(r.realizable);
  for (auto k : r.vertex_types) EXPECT_EQ(k, vertex_kind::finite);
  (void)p;
}

TEST(Generalized, HyperidealVertexGivesInfiniteVolume) {
  auto d = make_dodecahedron(R2);
  auto l = d.labels();
  for (int w : d.map().rotation(0)) l[d.edge_index(0, w)] = angle::pi_over(4);
  auto r = check_generalized(d.with_labels(l));
  EXPECT_TRUE(r.realizable);
  EXPECT_EQ(r.vertex_types[0], vertex_kind::hyperideal);
  EXPECT_FALSE(r.finite_volume);
}

TEST(Generalized, RightAngledPrismaticThreeCircuitFailsG1) {
  // cut a corner off the dodecahedron, then put pi/2 back on the three cut edges
  auto d = make_dodecahedron(R2);
  auto l = d.labels();
  for (int w : d.map().rotation(0)) l[d.edge_index(0, w)] = angle::pi_over(4);
  auto t = truncate_hyperideal(d.with_labels(l));
  auto r = check_generalized(t.with_labels(std::vector<angle>(t.edge_count(), R2)));
  EXPECT_FALSE(r.realizable);
  EXPECT_TRUE(r.violates("G1"));
}
