#include <gtest/gtest.h>

#include <random>

#include "tropmod/plane_trop.hpp"

using namespace tropmod;

namespace {

TropicalPolynomial poly(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  TropicalPolynomial f;
  for (const auto& [i, j, v] : terms) f.add_term({i, j}, v);
  return f;
}

TropicalPolynomial line_poly() { return poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}); }

TropicalPolynomial random_poly(std::mt19937& rng, int max_terms, int box) {
  std::uniform_int_distribution<int> coord(0, box), size(1, max_terms), num(-12, 12), den(1, 4);
  TropicalPolynomial f;
  const int want = std::min(size(rng), (box + 1) * (box + 1));
  while (static_cast<int>(f.size()) < want) {
    Exponent e{coord(rng), coord(rng)};
    if (f.terms().count(e)) continue;
    Rational v(num(rng), den(rng));
    v.canonicalize();
    f.add_term(e, v);
  }
  return f;
}

// Points on the tie line of a random pair of terms; these hit the curve with
// positive probability, unlike generic points.
std::vector<Point> probe_points(const TropicalPolynomial& f, std::mt19937& rng) {
  std::vector<std::pair<Exponent, Rational>> t(f.terms().begin(), f.terms().end());
  std::vector<Point> out;
  std::uniform_int_distribution<int> num(-40, 40), den(1, 6);
  for (int k = 0; k < 40; ++k) {
    Rational z(num(rng), den(rng)), w(num(rng), den(rng));
    z.canonicalize();
    w.canonicalize();
    out.push_back({z, w});
    if (t.size() < 2) continue;
    const auto& [ea, va] = t[rng() % t.size()];
    const auto& [eb, vb] = t[rng() % t.size()];
    if (ea == eb) continue;
    // (ea - eb) . p = vb - va: solve for whichever coordinate has a nonzero coefficient
    const long dz = ea.first - eb.first, dw = ea.second - eb.second;
    if (dw != 0)
      out.push_back({z, Rational((vb - va) - dz * z) / dw});
    else
      out.push_back({Rational((vb - va) - dw * w) / dz, w});
  }
  return out;
}

std::vector<Point> cell_samples(const TropicalPlaneCurve& c) {
  std::vector<Point> out = c.vertices;
  for (const auto& [a, b] : c.segments) {
    const auto &pa = c.vertices[a], &pb = c.vertices[b];
    out.push_back({(pa.z + pb.z) / 2, (pa.w + pb.w) / 2});
    out.push_back({(2 * pa.z + pb.z) / 3, (2 * pa.w + pb.w) / 3});
  }
  for (const auto& r : c.rays) {
    const auto& p = c.vertices[r.base];
    for (long t : {1L, 7L, 100L}) out.push_back({p.z + t * r.direction.dz, p.w + t * r.direction.dw});
  }
  for (const auto& l : c.lines)
    for (long t : {-9L, 0L, 5L}) out.push_back({l.point.z + t * l.direction.dz, l.point.w + t * l.direction.dw});
  return out;
}

}  // namespace

TEST(TropEval, LineAtOrigin) {
  auto r = trop_eval(line_poly(), {0, 0});
  EXPECT_EQ(r.minimum, 0);
  EXPECT_EQ(r.achievers.size(), 3u);
  EXPECT_TRUE(contains(line_poly(), {0, 0}));
}

TEST(TropEval, PositiveQuadrant) {
  auto r = trop_eval(line_poly(), {2, 3});
  EXPECT_EQ(r.minimum, 0);
  EXPECT_EQ(r.achievers, (std::vector<Exponent>{{0, 0}}));
  EXPECT_FALSE(contains(line_poly(), {2, 3}));
}

TEST(TropEval, Monomial) {
  auto f = poly({{2, 1, Rational(3, 2)}});
  for (Point p : {Point{0, 0}, Point{1, -4}, Point{Rational(1, 3), 7}}) {
    EXPECT_EQ(trop_eval(f, p).achievers.size(), 1u);
    EXPECT_FALSE(contains(f, p));
  }
  EXPECT_TRUE(tropical_curve(f).empty());
}

TEST(TropicalCurve, LineIsTripodAtOrigin) {
  auto c = tropical_curve(line_poly());
  ASSERT_EQ(c.vertices, (std::vector<Point>{{0, 0}}));
  EXPECT_TRUE(c.segments.empty());
  EXPECT_TRUE(c.lines.empty());
  std::set<Direction> dirs;
  for (const auto& r : c.rays) {
    EXPECT_EQ(r.base, 0u);
    dirs.insert(r.direction);
  }
  EXPECT_EQ(dirs, (std::set<Direction>{{1, 0}, {0, 1}, {-1, -1}}));
  EXPECT_EQ(c.rays.size(), 3u);
}

TEST(TropicalCurve, ShiftedLine) {
  auto c = tropical_curve(poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  ASSERT_EQ(c.vertices, (std::vector<Point>{{1, 1}}));
  std::set<Direction> dirs;
  for (const auto& r : c.rays) dirs.insert(r.direction);
  EXPECT_EQ(dirs, (std::set<Direction>{{1, 0}, {0, 1}, {-1, -1}}));
}

TEST(TropicalCurve, GeneralLineVertex) {
  // a x + b y + c: vertex at (c - a, c - b)
  for (auto [a, b, c] : {std::tuple{Rational(1), Rational(2), Rational(5)}, {Rational(-1, 2), Rational(0), Rational(3, 7)}}) {
    auto curve = tropical_curve(poly({{1, 0, a}, {0, 1, b}, {0, 0, c}}));
    ASSERT_EQ(curve.vertices.size(), 1u);
    EXPECT_EQ(curve.vertices[0], (Point{c - a, c - b}));
  }
}

TEST(NewtonSubdivision, Examples) {
  auto s = newton_subdivision(line_poly());
  EXPECT_EQ(s.dimension, 2);
  ASSERT_EQ(s.cells.size(), 1u);
  EXPECT_EQ(s.cells[0].vertices.size(), 3u);
  EXPECT_EQ(s.edges.size(), 3u);

  EXPECT_EQ(newton_subdivision(poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).cells.size(), 1u);

  auto seg = newton_subdivision(poly({{1, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(seg.dimension, 1);
  ASSERT_EQ(seg.cells.size(), 1u);
  auto c = tropical_curve(poly({{1, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(c.vertices.empty());
  ASSERT_EQ(c.lines.size(), 1u);
  EXPECT_EQ(c.lines[0].direction, (Direction{1, -1}));
  EXPECT_TRUE(c.passes_through({1, 0}));
}

TEST(NewtonSubdivision, ConicSplitsIntoTriangles) {
  // heights i^2 + ij + j^2 cut the degree-2 triangle into four unit triangles
  auto f = poly({{2, 0, 4}, {0, 2, 4}, {0, 0, 0}, {1, 1, 3}, {1, 0, 1}, {0, 1, 1}});
  auto s = newton_subdivision(f);
  EXPECT_EQ(s.cells.size(), 4u);
  auto c = tropical_curve(f);
  EXPECT_EQ(c.vertices.size(), 4u);
  EXPECT_EQ(c.segments.size(), 3u);
  EXPECT_EQ(c.rays.size(), 6u);
}

TEST(TropicalCurve, DualityCounts) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, 8, 4);
    auto s = newton_subdivision(f);
    auto c = tropical_curve(f);
    if (s.dimension != 2) continue;
    EXPECT_EQ(c.vertices.size(), s.cells.size());
    std::size_t interior = 0, boundary = 0;
    for (const auto& e : s.edges) (e.on_boundary() ? boundary : interior)++;
    EXPECT_EQ(c.segments.size(), interior);
    EXPECT_EQ(c.rays.size(), boundary);
  }
}

TEST(TropicalCurve, MembershipMatchesKapranov) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, 7, 3);
    auto c = tropical_curve(f);
    for (const auto& p : probe_points(f, rng)) ASSERT_EQ(contains(f, p), c.passes_through(p));
    for (const auto& p : cell_samples(c)) ASSERT_TRUE(contains(f, p));
  }
}

TEST(TropicalCurve, TranslationEquivariance) {
  // Adding a.i + b.j to each valuation moves the curve by (-a, -b).
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(rng, 6, 3);
    Rational a(static_cast<long>(rng() % 7) - 3, 2), b(static_cast<long>(rng() % 5) - 2, 3);
    a.canonicalize();
    b.canonicalize();
    TropicalPolynomial h;
    for (const auto& [e, v] : f.terms()) h.add_term(e, v + a * static_cast<long>(e.first) + b * static_cast<long>(e.second));
    auto cf = tropical_curve(f);
    auto ch = tropical_curve(h);
    ASSERT_EQ(cf.vertices.size(), ch.vertices.size());
    for (std::size_t v = 0; v < cf.vertices.size(); ++v)
      EXPECT_EQ(ch.vertices[v], (Point{cf.vertices[v].z - a, cf.vertices[v].w - b}));
    EXPECT_EQ(cf.segments, ch.segments);
    EXPECT_EQ(cf.rays, ch.rays);
  }
}

TEST(TropicalCurve, AlgorithmsAgreeOnRandomSupports) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = random_poly(rng, 8, 1 + trial % 5);
    auto direct = tropical_curve_bisector(f);
    auto dual = curve_from_subdivision(f, newton_subdivision(f));
    ASSERT_TRUE(direct == dual) << to_json(f).dump();
  }
}

TEST(TropicalCurve, CollinearSupport) {
  auto f = poly({{0, 0, 0}, {1, 2, 1}, {2, 4, 0}, {3, 6, 5}});
  auto c = tropical_curve(f);
  EXPECT_TRUE(c.vertices.empty());
  EXPECT_EQ(c.lines.size(), 2u);
  for (const auto& l : c.lines) EXPECT_EQ(l.direction, (Direction{2, -1}));
}

TEST(PlaneJson, Parsing) {
  EXPECT_EQ(coefficient_valuation("t^(3/2)"), Rational(3, 2));
  EXPECT_EQ(coefficient_valuation("-t"), 1);
  EXPECT_EQ(coefficient_valuation("5*t^2"), 2);
  EXPECT_EQ(coefficient_valuation("1"), 0);
  EXPECT_THROW(coefficient_valuation("0"), ParseError);
  EXPECT_THROW(coefficient_valuation("x"), ParseError);
  auto f = polynomial_from_json(PlaneJson::parse(
      R"({"terms":[{"i":1,"j":0,"coeff":"1"},{"i":0,"j":1,"val":"0"},{"i":0,"j":0,"coeff":"-1"}]})"));
  EXPECT_TRUE(tropical_curve(f) == tropical_curve(line_poly()));
  EXPECT_THROW(polynomial_from_json(PlaneJson::parse(R"({"terms":[]})")), ParseError);
  EXPECT_THROW(polynomial_from_json(PlaneJson::parse(
                   R"({"terms":[{"i":1,"j":0,"val":"0"},{"i":1,"j":0,"val":"2"}]})")),
               ParseError);
}

TEST(PlaneJson, CurveSerialization) {
  auto j = to_json(tropical_curve(poly({{1, 0, 0}, {0, 1, 0}, {0, 0, Rational(1, 2)}})));
  EXPECT_EQ(j["vertices"][0], PlaneJson::array({"1/2", "1/2"}));
  EXPECT_EQ(j["rays"].size(), 3u);
}

TEST(PlaneSvg, RendersEveryCell) {
  auto c = tropical_curve(line_poly());
  auto svg = to_svg(c, default_viewport(c));
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n') > 3, true);
}
