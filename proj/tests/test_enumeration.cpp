#include <gtest/gtest.h>

#include <set>

#include "oracles/brute_force.hpp"
#include "tropmod/enumeration.hpp"

using namespace tropmod;

namespace {

std::set<oracle::Key> keys_of(const std::vector<WeightedMarkedGraph>& types) {
  std::set<oracle::Key> out;
  for (const auto& t : types) out.insert(oracle::class_canonical_key(t));
  return out;
}

}  // namespace

TEST(Enumeration, GenusTwoNoMarkings) {
  auto cat = enumerate_types(2, 0);
  EXPECT_EQ(cat.size(), 7u);
  EXPECT_EQ(cat.f_vector(), (std::vector<std::size_t>{1, 2, 2, 2}));
}

TEST(Enumeration, SmallCounts) {
  EXPECT_EQ(enumerate_types(1, 2).size(), 5u);
  EXPECT_EQ(enumerate_types(1, 2).f_vector(), (std::vector<std::size_t>{1, 2, 2}));
  EXPECT_EQ(enumerate_types(0, 3).size(), 1u);
  EXPECT_EQ(enumerate_types(1, 1).size(), 2u);
  EXPECT_EQ(enumerate_types(0, 4).f_vector(), (std::vector<std::size_t>{1, 3}));
  // trees with 5 labelled leaves: 1 + 10 + 15
  EXPECT_EQ(enumerate_types(0, 5).f_vector(), (std::vector<std::size_t>{1, 10, 15}));
}

TEST(Enumeration, UnstableTypesRejected) {
  EXPECT_THROW(enumerate_types(0, 2), UnstableTypeError);
  EXPECT_THROW(enumerate_types(0, 0), UnstableTypeError);
  EXPECT_THROW(enumerate_types(1, 0), UnstableTypeError);
  EXPECT_THROW(enumerate_types(-1, 5), DomainError);
  try {
    enumerate_types(0, 1);
    FAIL();
  } catch (const UnstableTypeError& e) {
    EXPECT_NE(std::string(e.what()).find("2g-2+n > 0"), std::string::npos) << e.what();
  }
}

TEST(Enumeration, ConePointFirst) {
  auto cat = enumerate_types(2, 1);
  EXPECT_EQ(cat.type(0), WeightedMarkedGraph::cone_point(2, 1));
}

TEST(Enumeration, AgreesWithBruteForce) {
  for (int g = 0; g <= 2; ++g)
    for (int n = 0; 3 * g - 3 + n <= 5; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      if (g == 0 && n > 7) continue;
      auto cat = enumerate_types(g, n);
      auto brute = oracle::brute_force_catalog(g, n, oracle::class_canonical_key);
      EXPECT_EQ(cat.size(), brute.size()) << "g=" << g << " n=" << n;
      EXPECT_EQ(keys_of(cat.types()), keys_of(brute)) << "g=" << g << " n=" << n;
    }
}

TEST(Enumeration, ClosedUnderContraction) {
  for (auto [g, n] : {std::pair{2, 2}, {1, 5}, {3, 0}}) {
    auto cat = enumerate_types(g, n);
    for (const auto& t : cat.types())
      for (int e = 0; e < t.num_edges(); ++e) ASSERT_TRUE(cat.find(contract_edge(t, e)).has_value());
  }
}

TEST(Enumeration, EveryTypeContractsToConePoint) {
  auto cat = enumerate_types(2, 2);
  const auto cone = WeightedMarkedGraph::cone_point(2, 2);
  for (auto t : cat.types()) {
    while (t.num_edges() > 0) t = contract_edge(t, 0);
    EXPECT_EQ(t, cone);
  }
}

TEST(Enumeration, MaximalEdgeCountAttained) {
  for (auto [g, n] : {std::pair{2, 0}, {1, 3}, {0, 6}, {3, 1}}) {
    auto cat = enumerate_types(g, n);
    EXPECT_EQ(static_cast<int>(cat.f_vector().size()) - 1, 3 * g - 3 + n);
    EXPECT_GT(cat.f_vector().back(), 0u);
  }
}

TEST(Enumeration, IndependentOfThreadCount) {
  auto serial = enumerate_types(2, 3, {1, 0});
  for (unsigned threads : {2u, 4u, 8u}) {
    auto par = enumerate_types(2, 3, {threads, 0});
    ASSERT_EQ(par.size(), serial.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      EXPECT_EQ(par.encoding(i), serial.encoding(i));
      EXPECT_EQ(par.type(i), serial.type(i));
    }
  }
}

TEST(Enumeration, CountTypesMatchesCatalog) {
  EXPECT_EQ(count_types(1, 4), enumerate_types(1, 4).f_vector());
}

TEST(Enumeration, ResourceCap) {
  try {
    enumerate_types(2, 4, {1, 100});
    FAIL();
  } catch (const ResourceLimitError& e) {
    EXPECT_FALSE(e.partial_sizes().empty());
  }
}

TEST(Enumeration, UncontractionsAreOneEdgeUp) {
  auto cat = enumerate_types(1, 3);
  for (const auto& t : cat.types())
    for (const auto& up : uncontractions(t)) {
      EXPECT_EQ(up.num_edges(), t.num_edges() + 1);
      EXPECT_TRUE(is_stable(up));
      EXPECT_EQ(genus(up), 1);
    }
}
