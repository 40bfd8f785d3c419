#include "oracles.hpp"

#include "polyvol/canonical.hpp"
#include "polyvol/decompose.hpp"
#include "polyvol/generators.hpp"
#include "polyvol/rewrite.hpp"

#include <gtest/gtest.h>

using namespace polyvol;

namespace {

const angle R2 = angle::pi_over(2);
const angle R3 = angle::pi_over(3);

// counts straight from the definitions: N_2 vertices have three degree-4 neighbours
truncation_counts count_by_hand(const labeled_polyhedron& p) {
  truncation_counts t;
  std::vector<bool> in_n3(p.vertex_count(), false);
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (p.degree(v) == 4) {
      ++t.n4;
      continue;
    }
    for (int w : p.map().rotation(v))
      if (p.degree(w) != 4) in_n3[v] = true;
    if (!in_n3[v]) ++t.n2;
  }
  for (const auto& e : p.edges()) {
    bool a = p.degree(e.u) == 3 && in_n3[e.u], b = p.degree(e.v) == 3 && in_n3[e.v];
    if (a && b) ++t.e33;
    if ((a && p.degree(e.v) == 4) || (b && p.degree(e.u) == 4)) ++t.e34;
  }
  return t;
}

labeled_polyhedron hyperideal_corner_dodecahedron() {
  auto d = make_dodecahedron(R2);
  auto l = d.labels();
  for (int w : d.map().rotation(0)) l[d.edge_index(0, w)] = angle::pi_over(4);
  return d.with_labels(l);
}

}  // namespace

TEST(Truncation, DodecahedronAndPrisms) {
  auto d = make_dodecahedron(R3);
  auto t = full_truncation(d);
  EXPECT_EQ(t.counts.e33, 30);
  EXPECT_EQ(t.counts.ideal(), 30);
  EXPECT_EQ(t.counts.finite(), 0);
  EXPECT_EQ(t.polyhedron.vertex_count(), 30);
  for (const auto& a : t.polyhedron.labels()) EXPECT_EQ(a, R2);
  for (int n = 5; n <= 9; ++n) {
    auto p = make_prism(n, alternating_labels(n));
    auto c = truncation_counts_of(p);
    EXPECT_EQ(c.e33, 3 * n) << n;
    EXPECT_EQ(full_truncation(p).polyhedron.vertex_count(), 3 * n) << n;
  }
}

TEST(Truncation, CountsMatchDefinitions) {
  for (const auto& s : oracle::coxeter_corpus()) {
    auto a = truncation_counts_of(s.p), b = count_by_hand(s.p);
    EXPECT_EQ(a.n2, b.n2) << s.name;
    EXPECT_EQ(a.n4, b.n4) << s.name;
    EXPECT_EQ(a.e33, b.e33) << s.name;
    EXPECT_EQ(a.e34, b.e34) << s.name;
  }
}

TEST(Truncation, AllDegreeFourIsUnchanged) {
  // square antiprism
  std::vector<std::vector<int>> f{{0, 1, 2, 3}, {4, 7, 6, 5}};
  for (int i = 0; i < 4; ++i) {
    int j = (i + 1) % 4;
    f.push_back({i, 4 + i, j});
    f.push_back({j, 4 + i, 4 + j});
  }
  auto p = build_polyhedron(8, f, [](int, int) { return angle::pi_over(3); });
  auto t = full_truncation(p);
  EXPECT_EQ(t.counts.n4, 8);
  EXPECT_EQ(t.counts.e33 + t.counts.e34 + t.counts.n2 + t.counts.n3, 0);
  EXPECT_EQ(canonical_code(t.polyhedron.map()), canonical_code(p.map()));
}

TEST(Truncation, DodecahedronCounts) {
  auto d = make_dodecahedron(R2);
  auto c = truncation_counts_of(d);
  EXPECT_EQ(c.n2, 0);
  EXPECT_EQ(c.n3, 20);
  EXPECT_EQ(c.e33, 30);
  EXPECT_EQ(c.e34, 0);
}

TEST(Extension, NothingToCut) {
  auto d = make_dodecahedron(R2);
  EXPECT_EQ(canonical_code(truncate_hyperideal(d)), canonical_code(d));
  EXPECT_EQ(extend(d).collapsed, 0);
}

TEST(Extension, TruncateThenExtendIsIdentity) {
  auto p = hyperideal_corner_dodecahedron();
  auto t = truncate_hyperideal(p);
  EXPECT_EQ(t.vertex_count(), 22);
  ASSERT_EQ(parallel_triangles(t).size(), 1u);
  auto e = extend(t);
  EXPECT_EQ(e.collapsed, 1);
  EXPECT_EQ(canonical_code(e.polyhedron), canonical_code(p));
}

TEST(Extension, TriangularPrismCollapsesOneEnd) {
  auto p = make_prism(3, right_horizontal_labels(3, R3));
  auto e = extend(p);
  EXPECT_EQ(e.collapsed, 1);
  EXPECT_EQ(e.skipped, 0);  // the other end is no longer parallel once one collapses
  EXPECT_EQ(e.polyhedron.vertex_count(), 4);
}

TEST(Uniformize, Fixpoints) {
  auto d = make_dodecahedron(R2);
  EXPECT_EQ(canonical_code(uniformize_labeling(d).polyhedron), canonical_code(d));
  auto u = uniformize_labeling(make_dodecahedron(angle::pi_over(7)));
  for (const auto& a : u.polyhedron.labels()) EXPECT_EQ(a, R3);
}

TEST(Uniformize, MixedLabels) {
  auto d = make_dodecahedron(R2);
  auto l = d.labels();
  for (std::size_t i = 0; i < l.size(); i += 3) l[i] = angle::pi_over(5);
  auto u = uniformize_labeling(d.with_labels(l));
  for (std::size_t i = 0; i < l.size(); ++i) EXPECT_EQ(u.polyhedron.label(i), i % 3 == 0 ? R3 : R2);
  EXPECT_TRUE(u.check.realizable);
}

TEST(Uniformize, Errors) {
  auto expect_code = [](const labeled_polyhedron& p, rewrite_errc c) {
    try {
      uniformize_labeling(p);
      ADD_FAILURE() << "no error";
    } catch (const rewrite_error& e) {
      EXPECT_EQ(e.code(), c);
    }
  };
  expect_code(truncate_hyperideal(hyperideal_corner_dodecahedron()), rewrite_errc::has_prismatic_3_circuit);
  expect_code(make_prism(3, right_horizontal_labels(3, R3)), rewrite_errc::too_few_faces);
  auto d = make_dodecahedron(R2);
  auto l = d.labels();
  l[0] = angle::pi_fraction(2, 5);
  expect_code(d.with_labels(l), rewrite_errc::not_coxeter);
}

TEST(Quadrilateral, RightAngledNeighboursAreCylindrical) {
  auto p = make_prism(8, right_horizontal_labels(8, R2));
  auto s = as_prism(p);
  auto t = make_circuit(p, {s->top, s->lateral[1], s->bottom, s->lateral[5]});
  auto q = classify_quadrilateral(p, t);
  EXPECT_EQ(q.kind, quadrilateral_kind::cylindrical);
  EXPECT_EQ(q.witness_ids.size(), 4u);
}

TEST(Quadrilateral, PiThirdLateralsAreAcylindrical) {
  // every lateral pair carries a pi/3
  auto p = make_prism(8, prism_labels_from_pattern("TTTTTTTT", R2));
  auto s = as_prism(p);
  auto t = make_circuit(p, {s->top, s->lateral[1], s->bottom, s->lateral[5]});
  EXPECT_EQ(classify_quadrilateral(p, t).kind, quadrilateral_kind::acylindrical);
}
