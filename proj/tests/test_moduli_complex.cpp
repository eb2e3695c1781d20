#include <gtest/gtest.h>

#include "tropmod/moduli_complex.hpp"

using namespace tropmod;

TEST(FacePoset, MaximalTypesOfGenusOneTwoMarkings) {
  auto poset = build_poset(1, 2);
  auto top = poset.maximal();
  ASSERT_EQ(top.size(), 2u);
  for (auto i : top) EXPECT_EQ(poset.catalog().type(i).num_edges(), 2);
}

TEST(FacePoset, MaximalTypesOfGenusTwo) {
  auto poset = build_poset(2, 0);
  auto top = poset.maximal();
  ASSERT_EQ(top.size(), 2u);  // theta and dumbbell
  WeightedMarkedGraph theta({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {});
  WeightedMarkedGraph dumbbell({0, 0}, {{0, 0}, {0, 1}, {1, 1}}, {});
  std::set<std::size_t> expected{*poset.catalog().find(theta), *poset.catalog().find(dumbbell)};
  EXPECT_EQ(std::set<std::size_t>(top.begin(), top.end()), expected);
}

TEST(FacePoset, SinglePointForThreeMarkedPoints) {
  auto poset = build_poset(0, 3);
  EXPECT_EQ(poset.catalog().size(), 1u);
  EXPECT_TRUE(poset.covers().empty());
  EXPECT_EQ(link_cells(0, 3).size(), 0u);
}

TEST(FacePoset, CoversDropOneEdge) {
  auto poset = build_poset(2, 2);
  const auto& cat = poset.catalog();
  for (const auto& r : poset.covers()) {
    EXPECT_EQ(cat.type(r.parent).num_edges(), cat.type(r.child).num_edges() + 1);
    EXPECT_EQ(r.witness.size(), 1u);
    EXPECT_EQ(static_cast<int>(r.edge_map.size()), cat.type(r.child).num_edges());
  }
}

TEST(FacePoset, OneCoverPerEdge) {
  auto poset = build_poset(1, 4);
  for (std::size_t i = 0; i < poset.catalog().size(); ++i)
    EXPECT_EQ(static_cast<int>(poset.covers_of(i).size()), poset.catalog().type(i).num_edges());
}

TEST(FacePoset, OrderIsAntisymmetricAndRooted) {
  auto poset = build_poset(1, 3);
  const auto n = poset.catalog().size();
  for (std::size_t a = 0; a < n; ++a) {
    EXPECT_TRUE(poset.leq(poset.minimum(), a));
    EXPECT_TRUE(poset.leq(a, a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && poset.leq(a, b)) {
        EXPECT_FALSE(poset.leq(b, a));
      }
    }
  }
}

TEST(FacePoset, AllRelationsIncludeCovers) {
  auto poset = build_poset(1, 3);
  auto rel = poset.all_relations();
  for (const auto& c : poset.covers()) {
    bool found = std::any_of(rel.begin(), rel.end(), [&](const auto& r) {
      return r.parent == c.parent && r.child == c.child && r.witness == c.witness;
    });
    EXPECT_TRUE(found);
  }
}

TEST(LinkComplex, CellCounts) {
  EXPECT_EQ(link_cells(1, 1).size(), 1u);
  EXPECT_EQ(link_cells(2, 0).size(), 6u);
  EXPECT_EQ(link_cells(1, 2).size(), 4u);
  for (auto [g, n] : {std::pair{1, 4}, {2, 2}, {0, 6}}) {
    auto link = link_cells(g, n);
    EXPECT_EQ(link.size(), link.catalog().size() - 1);
  }
}

TEST(LinkComplex, CellsCarryFaces) {
  auto link = link_cells(2, 0);
  for (const auto& cell : link.cells()) {
    EXPECT_EQ(cell.dimension, link.catalog().type(cell.type).num_edges() - 1);
    EXPECT_EQ(static_cast<int>(cell.faces.size()), cell.dimension + 1);
    for (const auto& f : cell.faces) {
      if (cell.dimension == 0) {
        EXPECT_FALSE(f.has_value());
      } else {
        ASSERT_TRUE(f.has_value());
        EXPECT_EQ(link.cells()[*f].dimension, cell.dimension - 1);
      }
    }
  }
}

TEST(LinkComplex, Dimension) {
  EXPECT_EQ(complex_dimension(1, 1), 0);
  EXPECT_EQ(complex_dimension(2, 0), 2);
  EXPECT_EQ(complex_dimension(1, 5), 4);
  EXPECT_EQ(link_cells(2, 1).dimension(), 3);
}

TEST(LinkComplex, PureUpToSixEdges) {
  for (int g = 0; g <= 3; ++g)
    for (int n = 0; 3 * g - 3 + n <= 6; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      auto poset = build_poset(g, n);
      for (auto m : poset.maximal()) EXPECT_EQ(poset.catalog().type(m).num_edges(), 3 * g - 3 + n) << g << "," << n;
    }
}

TEST(LinkComplex, HasseDiagramMentionsEveryType) {
  auto poset = build_poset(1, 2);
  auto dot = hasse_dot(poset);
  for (std::size_t i = 0; i < poset.catalog().size(); ++i)
    EXPECT_NE(dot.find("t" + std::to_string(i)), std::string::npos);
}
