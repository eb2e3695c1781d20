#include <gtest/gtest.h>

#include "tropmod/abstract_trop.hpp"
#include "tropmod/canonical.hpp"

using namespace tropmod;

namespace {

StableModelDescription conic(ExtendedLength ell) {
  StableModelDescription m;
  m.components = {{1, 0}, {2, 0}};
  m.nodes = {{1, 2, ell}};
  m.markings = {1, 1, 2, 2};
  return m;
}

}  // namespace

TEST(AbstractTrop, ConicModel) {
  auto curve = tropicalize_model(conic(ExtendedLength(Rational(5))));
  WeightedMarkedGraph expected({0, 0}, {{0, 1}}, {0, 0, 1, 1});
  EXPECT_EQ(curve.type, expected);
  ASSERT_EQ(curve.lengths.size(), 1u);
  EXPECT_EQ(curve.lengths[0], ExtendedLength(Rational(5)));
  EXPECT_FALSE(curve.is_extended());
  EXPECT_EQ(volume(curve), 5);
  EXPECT_EQ(genus(curve.type), 0);
}

TEST(AbstractTrop, SmoothModelIsConePoint) {
  StableModelDescription m;
  m.components = {{7, 2}};
  m.markings = {7, 7, 7};
  auto curve = tropicalize_model(m);
  EXPECT_EQ(curve.type, WeightedMarkedGraph::cone_point(2, 3));
  EXPECT_EQ(volume(curve), 0);
  EXPECT_THROW(rescale_to_volume_one(curve), ExtendedCurveError);
}

TEST(AbstractTrop, InfiniteNodeIsExtended) {
  auto curve = tropicalize_model(conic(ExtendedLength::infinity()));
  EXPECT_TRUE(curve.is_extended());
  EXPECT_TRUE(curve.lengths[0].is_infinite());
  EXPECT_THROW(volume(curve), ExtendedCurveError);
  EXPECT_EQ(to_json(curve)["volume"], nullptr);
  EXPECT_EQ(to_json(curve)["lengths"][0], "inf");
}

TEST(AbstractTrop, ThetaVolumeAndRescaling) {
  StableModelDescription m;
  m.components = {{0, 0}, {1, 0}};
  m.nodes = {{0, 1, ExtendedLength(Rational(1, 2))}, {0, 1, ExtendedLength(Rational(1, 3))},
             {0, 1, ExtendedLength(Rational(1, 6))}};
  auto curve = tropicalize_model(m);
  EXPECT_EQ(volume(curve), 1);
  EXPECT_EQ(genus(curve.type), 2);

  m.nodes[0].valuation = ExtendedLength(Rational(3));
  auto big = tropicalize_model(m);
  auto unit = rescale_to_volume_one(big);
  EXPECT_EQ(volume(unit), 1);
  EXPECT_EQ(unit.lengths[0], ExtendedLength(Rational(18, 21)));
  EXPECT_EQ(genus(unit.type), genus(big.type));
}

TEST(AbstractTrop, GenusMatchesArithmeticGenus) {
  // two elliptic components meeting twice: 1 + 1 + (2 - 2 + 1)
  StableModelDescription m;
  m.components = {{1, 1}, {2, 1}};
  m.nodes = {{1, 2, ExtendedLength(Rational(2))}, {1, 2, ExtendedLength(Rational(7, 3))}};
  EXPECT_EQ(genus(tropicalize_model(m).type), 3);
}

TEST(AbstractTrop, UnstableComponentRejected) {
  StableModelDescription m;
  m.components = {{1, 0}, {2, 0}};
  m.nodes = {{1, 2, ExtendedLength(Rational(1))}};
  m.markings = {1, 1, 2};
  try {
    tropicalize_model(m);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("component 2"), std::string::npos) << e.what();
  }
}

TEST(AbstractTrop, MalformedModels) {
  StableModelDescription disconnected;
  disconnected.components = {{1, 1}, {2, 1}};
  EXPECT_THROW(tropicalize_model(disconnected), ModelError);

  auto bad = conic(ExtendedLength(Rational(0)));
  EXPECT_THROW(tropicalize_model(bad), ModelError);

  auto unknown = conic(ExtendedLength(Rational(1)));
  unknown.nodes[0].b = 9;
  EXPECT_THROW(tropicalize_model(unknown), ModelError);

  StableModelDescription empty;
  EXPECT_THROW(tropicalize_model(empty), ModelError);
}

TEST(AbstractTrop, JsonInput) {
  auto j = Json::parse(R"json({"components":[{"id":1,"genus":0},{"id":2,"genus":0}],
                           "nodes":[{"a":1,"b":2,"length":"t^(5/2)"}],"markings":[1,1,2,2]})json");
  auto curve = tropicalize_model(model_from_json(j));
  EXPECT_EQ(curve.lengths[0], ExtendedLength(Rational(5, 2)));
  auto out = to_json(curve);
  EXPECT_EQ(out["lengths"][0], "5/2");
  EXPECT_EQ(out["volume"], "5/2");
  EXPECT_EQ(out["genus"], 0);
  EXPECT_THROW(model_from_json(Json::parse(R"({"nodes":[]})")), ModelError);
}

TEST(AbstractTrop, DotOutput) {
  auto dot = to_dot(tropicalize_model(conic(ExtendedLength(Rational(5)))));
  EXPECT_NE(dot.find("v0 -- v1 [label=\"5\"]"), std::string::npos) << dot;
}
