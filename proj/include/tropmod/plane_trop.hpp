#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "tropmod/error.hpp"
#include "tropmod/rational.hpp"

namespace tropmod {

using PlaneJson = nlohmann::ordered_json;

/// Exponent (i, j) of the monomial x^i y^j.
using Exponent = std::pair<std::int64_t, std::int64_t>;

struct Point {
  Rational z;
  Rational w;

  friend bool operator==(const Point& a, const Point& b) { return a.z == b.z && a.w == b.w; }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.z != b.z) return a.z < b.z;
    return a.w < b.w;
  }
};

/// Primitive integer direction (gcd of the coordinates is 1).
struct Direction {
  std::int64_t dz = 0;
  std::int64_t dw = 0;

  static Direction primitive(std::int64_t a, std::int64_t b) {
    std::int64_t g = std::gcd(a, b);
    if (g == 0) throw ConsistencyError("zero direction");
    return {a / g, b / g};
  }
  Direction operator-() const { return {-dz, -dw}; }
  friend auto operator<=>(const Direction&, const Direction&) = default;
};

/// Tropical polynomial: valuation v(c_ij) of each coefficient of a Laurent
/// polynomial sum c_ij x^i y^j. Min convention throughout.
class TropicalPolynomial {
 public:
  TropicalPolynomial() = default;
  explicit TropicalPolynomial(std::map<Exponent, Rational> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw ParseError("tropical polynomial needs at least one term");
  }

  void add_term(Exponent e, Rational valuation) {
    if (!terms_.emplace(e, std::move(valuation)).second)
      throw ParseError("duplicate monomial x^" + std::to_string(e.first) + " y^" + std::to_string(e.second));
  }

  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::map<Exponent, Rational> terms_;
};

struct TropEvaluation {
  Rational minimum;
  std::vector<Exponent> achievers;  // sorted
};

/// min over terms of v(c_ij) + i z + j w, with every term attaining it.
inline TropEvaluation trop_eval(const TropicalPolynomial& f, const Point& p) {
  TropEvaluation out;
  bool first = true;
  for (const auto& [e, v] : f.terms()) {
    Rational value = v + e.first * p.z + e.second * p.w;
    if (first || value < out.minimum) {
      out.minimum = value;
      out.achievers.assign(1, e);
      first = false;
    } else if (value == out.minimum) {
      out.achievers.push_back(e);
    }
  }
  return out;
}

/// Kapranov membership: the minimum is attained at least twice.
inline bool contains(const TropicalPolynomial& f, const Point& p) { return trop_eval(f, p).achievers.size() >= 2; }

/// Corner locus of a tropical polynomial as a 1-dimensional polyhedral
/// complex. Bounded edges are vertex index pairs, unbounded edges are rays
/// from a vertex, and a support lying on one line yields full lines with no
/// vertices. All lists are sorted, so equal curves compare equal.
struct TropicalPlaneCurve {
  struct Ray {
    std::size_t base = 0;
    Direction direction;
    friend auto operator<=>(const Ray&, const Ray&) = default;
  };
  struct Line {
    Point point;  // foot of the perpendicular from the origin
    Direction direction;
    friend bool operator==(const Line& a, const Line& b) { return a.point == b.point && a.direction == b.direction; }
    friend bool operator<(const Line& a, const Line& b) {
      if (!(a.point == b.point)) return a.point < b.point;
      return a.direction < b.direction;
    }
  };

  std::vector<Point> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> segments;  // first < second
  std::vector<Ray> rays;
  std::vector<Line> lines;

  bool empty() const { return vertices.empty() && lines.empty(); }

  /// Indices into segments and rays touching vertex v.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> incident(std::size_t v) const {
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < segments.size(); ++s)
      if (segments[s].first == v || segments[s].second == v) out.first.push_back(s);
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (rays[r].base == v) out.second.push_back(r);
    return out;
  }

  /// Whether p lies on some cell.
  bool passes_through(const Point& p) const {
    auto on_param = [&](const Point& base, const Direction& d, bool ray) {
      // p = base + t d for some t (t >= 0 for rays)
      Rational dz(static_cast<long>(d.dz)), dw(static_cast<long>(d.dw));
      Rational cross = (p.z - base.z) * dw - (p.w - base.w) * dz;
      if (cross != 0) return false;
      if (!ray) return true;
      Rational dot = (p.z - base.z) * dz + (p.w - base.w) * dw;
      return dot >= 0;
    };
    for (const auto& [a, b] : segments) {
      const Point& pa = vertices[a];
      const Point& pb = vertices[b];
      Rational cross = (p.z - pa.z) * (pb.w - pa.w) - (p.w - pa.w) * (pb.z - pa.z);
      if (cross != 0) continue;
      Rational dot = (p.z - pa.z) * (pb.z - pa.z) + (p.w - pa.w) * (pb.w - pa.w);
      Rational len2 = (pb.z - pa.z) * (pb.z - pa.z) + (pb.w - pa.w) * (pb.w - pa.w);
      if (dot >= 0 && dot <= len2) return true;
    }
    for (const auto& r : rays)
      if (on_param(vertices[r.base], r.direction, true)) return true;
    for (const auto& l : lines)
      if (on_param(l.point, l.direction, false)) return true;
    return false;
  }

  friend bool operator==(const TropicalPlaneCurve& a, const TropicalPlaneCurve& b) {
    return a.vertices == b.vertices && a.segments == b.segments && a.rays == b.rays && a.lines == b.lines;
  }
};

namespace detail {

/// Collects cells by coordinates, then assigns vertex indices in sorted order.
struct CurveBuilder {
  std::set<Point> vertices;
  std::set<std::pair<Point, Point>> segments;
  std::set<std::pair<Point, Direction>> rays;
  std::set<TropicalPlaneCurve::Line> lines;

  void add_segment(Point a, Point b) {
    if (b < a) std::swap(a, b);
    vertices.insert(a);
    vertices.insert(b);
    segments.emplace(std::move(a), std::move(b));
  }
  void add_ray(Point base, Direction d) {
    vertices.insert(base);
    rays.emplace(std::move(base), d);
  }
  void add_line(const Point& through, Direction d) {
    if (d.dz < 0 || (d.dz == 0 && d.dw < 0)) d = -d;
    Rational dz(static_cast<long>(d.dz)), dw(static_cast<long>(d.dw));
    Rational t = (through.z * dz + through.w * dw) / (dz * dz + dw * dw);
    lines.insert({Point{through.z - t * dz, through.w - t * dw}, d});
  }

  TropicalPlaneCurve finish() const {
    TropicalPlaneCurve c;
    c.vertices.assign(vertices.begin(), vertices.end());
    auto index = [&](const Point& p) {
      return static_cast<std::size_t>(std::lower_bound(c.vertices.begin(), c.vertices.end(), p) - c.vertices.begin());
    };
    for (const auto& [a, b] : segments) c.segments.emplace_back(index(a), index(b));
    for (const auto& [p, d] : rays) c.rays.push_back({index(p), d});
    c.lines.assign(lines.begin(), lines.end());
    std::sort(c.segments.begin(), c.segments.end());
    std::sort(c.rays.begin(), c.rays.end());
    return c;
  }
};

inline Rational to_q(std::int64_t x) { return Rational(static_cast<long>(x)); }

}  // namespace detail

/// Corner locus by the pairwise bisector arrangement: for each pair of
/// terms, the set on their tie line where both attain the minimum is an
/// interval; every interval of positive length is a cell and every finite
/// endpoint a vertex.
inline TropicalPlaneCurve tropical_curve_bisector(const TropicalPolynomial& f) {
  std::vector<std::pair<Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  detail::CurveBuilder builder;
  using detail::to_q;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      const auto& [ea, va] = terms[a];
      const auto& [eb, vb] = terms[b];
      const std::int64_t nz = ea.first - eb.first, nw = ea.second - eb.second;
      // Tie line: (ea - eb) . p = vb - va, parametrised as p0 + t d.
      const Rational nn = to_q(nz * nz + nw * nw);
      const Rational c = vb - va;
      const Point p0{c * to_q(nz) / nn, c * to_q(nw) / nn};
      const Direction d = Direction::primitive(-nw, nz);
      std::optional<Rational> lo, hi;
      bool feasible = true;
      for (std::size_t k = 0; k < terms.size() && feasible; ++k) {
        if (k == a || k == b) continue;
        const auto& [ek, vk] = terms[k];
        const std::int64_t dz = ek.first - ea.first, dw = ek.second - ea.second;
        // term_k >= term_a along the line  <=>  alpha t >= beta
        const Rational alpha = to_q(dz * d.dz + dw * d.dw);
        const Rational beta = va - vk - (to_q(dz) * p0.z + to_q(dw) * p0.w);
        if (alpha == 0) {
          if (beta > 0) feasible = false;
        } else if (alpha > 0) {
          Rational bound = beta / alpha;
          if (!lo || bound > *lo) lo = bound;
        } else {
          Rational bound = beta / alpha;
          if (!hi || bound < *hi) hi = bound;
        }
      }
      if (!feasible) continue;
      if (lo && hi && *lo >= *hi) continue;
      auto at = [&](const Rational& t) { return Point{p0.z + t * to_q(d.dz), p0.w + t * to_q(d.dw)}; };
      if (lo && hi)
        builder.add_segment(at(*lo), at(*hi));
      else if (lo)
        builder.add_ray(at(*lo), d);
      else if (hi)
        builder.add_ray(at(*hi), -d);
      else
        builder.add_line(p0, d);
    }
  }
  return builder.finish();
}

/// Regular subdivision of the Newton polygon induced by the valuations.
struct NewtonSubdivision {
  struct LiftedPoint {
    Exponent exponent;
    Rational height;
  };
  struct Cell {
    std::vector<Exponent> points;    // every support point lying on the cell
    std::vector<Exponent> vertices;  // convex hull, counter-clockwise (2-cells) or endpoints (1-cells)
  };

  int dimension = 0;  // of the Newton polygon
  std::vector<LiftedPoint> lifted;
  /// Maximal cells: polygons when dimension == 2, segments when dimension == 1.
  std::vector<Cell> cells;
  /// For dimension 2: edges of the subdivision with the cells they bound.
  struct EdgeUse {
    Exponent a, b;  // a < b
    std::vector<std::size_t> cells;
    bool on_boundary() const { return cells.size() == 1; }
  };
  std::vector<EdgeUse> edges;
};

namespace detail {

inline std::int64_t cross(const Exponent& o, const Exponent& a, const Exponent& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// Strict convex hull (collinear points dropped), counter-clockwise.
inline std::vector<Exponent> convex_hull(std::vector<Exponent> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Exponent> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

/// Common direction of the support if it lies on one line.
inline std::optional<Direction> support_direction(const std::vector<Exponent>& pts) {
  if (pts.size() < 2) return std::nullopt;
  Direction u = Direction::primitive(pts[1].first - pts[0].first, pts[1].second - pts[0].second);
  for (const auto& p : pts)
    if ((p.first - pts[0].first) * u.dw - (p.second - pts[0].second) * u.dz != 0) return std::nullopt;
  return u;
}

}  // namespace detail

/// Lower faces of the lifted support {(i, j, v(c_ij))}, found by testing
/// every plane through three affinely independent lifted points.
inline NewtonSubdivision newton_subdivision(const TropicalPolynomial& f) {
  using detail::to_q;
  NewtonSubdivision sub;
  std::vector<Exponent> pts;
  std::vector<Rational> hts;
  for (const auto& [e, v] : f.terms()) {
    sub.lifted.push_back({e, v});
    pts.push_back(e);
    hts.push_back(v);
  }
  const std::size_t n = pts.size();
  if (n == 1) {
    sub.dimension = 0;
    sub.cells.push_back({pts, pts});
    return sub;
  }
  if (auto u = detail::support_direction(pts)) {
    sub.dimension = 1;
    // Coordinate along the line, then the lower hull of (s, height).
    std::vector<std::tuple<std::int64_t, Rational, std::size_t>> line;
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t s = (pts[k].first - pts[0].first) * u->dz + (pts[k].second - pts[0].second) * u->dw;
      line.emplace_back(s, hts[k], k);
    }
    std::sort(line.begin(), line.end(), [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    std::vector<std::size_t> lower;  // indices into line
    for (std::size_t k = 0; k < line.size(); ++k) {
      while (lower.size() >= 2) {
        const auto& [s1, h1, i1] = line[lower[lower.size() - 2]];
        const auto& [s2, h2, i2] = line[lower.back()];
        const auto& [s3, h3, i3] = line[k];
        // drop the middle point unless it lies strictly below the chord
        if ((h2 - h1) * to_q(s3 - s1) >= (h3 - h1) * to_q(s2 - s1))
          lower.pop_back();
        else
          break;
      }
      lower.push_back(k);
    }
    for (std::size_t k = 0; k + 1 < lower.size(); ++k) {
      const auto& [s1, h1, i1] = line[lower[k]];
      const auto& [s2, h2, i2] = line[lower[k + 1]];
      NewtonSubdivision::Cell cell;
      cell.vertices = {pts[i1], pts[i2]};
      for (const auto& [s, h, i] : line) {
        if (s < s1 || s > s2) continue;
        if ((h - h1) * to_q(s2 - s1) == (h2 - h1) * to_q(s - s1)) cell.points.push_back(pts[i]);
      }
      sub.cells.push_back(std::move(cell));
    }
    return sub;
  }

  sub.dimension = 2;
  std::map<Point, std::vector<Exponent>> faces;  // keyed by the dual point (z, w)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (detail::cross(pts[i], pts[j], pts[k]) == 0) continue;
        // z (x_j - x_i) + w (y_j - y_i) = h_i - h_j, same with k.
        const Rational a11 = to_q(pts[j].first - pts[i].first), a12 = to_q(pts[j].second - pts[i].second);
        const Rational a21 = to_q(pts[k].first - pts[i].first), a22 = to_q(pts[k].second - pts[i].second);
        const Rational b1 = hts[i] - hts[j], b2 = hts[i] - hts[k];
        const Rational det = a11 * a22 - a12 * a21;
        Point dual{(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
        if (faces.count(dual)) continue;
        const Rational level = hts[i] + to_q(pts[i].first) * dual.z + to_q(pts[i].second) * dual.w;
        std::vector<Exponent> on_face;
        bool lower = true;
        for (std::size_t l = 0; l < n && lower; ++l) {
          const Rational value = hts[l] + to_q(pts[l].first) * dual.z + to_q(pts[l].second) * dual.w;
          if (value < level) lower = false;
          if (value == level) on_face.push_back(pts[l]);
        }
        if (lower) faces.emplace(std::move(dual), std::move(on_face));
      }

  std::map<std::pair<Exponent, Exponent>, std::vector<std::size_t>> edge_cells;
  for (const auto& [dual, on_face] : faces) {
    NewtonSubdivision::Cell cell;
    cell.points = on_face;
    cell.vertices = detail::convex_hull(on_face);
    const std::size_t id = sub.cells.size();
    for (std::size_t v = 0; v < cell.vertices.size(); ++v) {
      Exponent a = cell.vertices[v], b = cell.vertices[(v + 1) % cell.vertices.size()];
      if (b < a) std::swap(a, b);
      edge_cells[{a, b}].push_back(id);
    }
    sub.cells.push_back(std::move(cell));
  }
  for (auto& [ab, cells] : edge_cells) sub.edges.push_back({ab.first, ab.second, cells});
  return sub;
}

/// Curve dual to the subdivision: a vertex per 2-cell, a segment per interior
/// edge, a ray per boundary edge along its inward normal, and for a
/// one-dimensional polygon a line per subdivision segment.
inline TropicalPlaneCurve curve_from_subdivision(const TropicalPolynomial& f, const NewtonSubdivision& sub) {
  using detail::to_q;
  detail::CurveBuilder builder;
  auto height = [&](const Exponent& e) { return f.terms().at(e); };
  // Point where the affine function through a cell's lifted points is the
  // minimum of the terms.
  auto dual_point = [&](const NewtonSubdivision::Cell& cell) {
    const auto& p = cell.vertices;
    const Rational a11 = to_q(p[1].first - p[0].first), a12 = to_q(p[1].second - p[0].second);
    const Rational a21 = to_q(p[2].first - p[0].first), a22 = to_q(p[2].second - p[0].second);
    const Rational b1 = height(p[0]) - height(p[1]), b2 = height(p[0]) - height(p[2]);
    const Rational det = a11 * a22 - a12 * a21;
    return Point{(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
  };

  if (sub.dimension == 1) {
    for (const auto& cell : sub.cells) {
      const Exponent& a = cell.vertices[0];
      const Exponent& b = cell.vertices[1];
      const std::int64_t nz = a.first - b.first, nw = a.second - b.second;
      const Rational nn = to_q(nz * nz + nw * nw);
      const Rational c = height(b) - height(a);
      builder.add_line(Point{c * to_q(nz) / nn, c * to_q(nw) / nn}, Direction::primitive(-nw, nz));
    }
    return builder.finish();
  }
  if (sub.dimension == 2) {
    std::vector<Point> duals;
    for (const auto& cell : sub.cells) duals.push_back(dual_point(cell));
    for (const auto& e : sub.edges) {
      if (e.cells.size() == 2) {
        builder.add_segment(duals[e.cells[0]], duals[e.cells[1]]);
      } else if (e.cells.size() == 1) {
        const auto& cell = sub.cells[e.cells[0]];
        Direction d = Direction::primitive(-(e.b.second - e.a.second), e.b.first - e.a.first);
        for (const auto& q : cell.vertices) {
          const std::int64_t side = (q.first - e.a.first) * d.dz + (q.second - e.a.second) * d.dw;
          if (side != 0) {
            if (side < 0) d = -d;
            break;
          }
        }
        builder.add_ray(duals[e.cells[0]], d);
      } else {
        throw ConsistencyError("subdivision edge bounds more than two cells");
      }
    }
  }
  return builder.finish();
}

/// Corner locus of f, computed by the bisector arrangement and checked
/// cell-for-cell against the Newton subdivision dual.
inline TropicalPlaneCurve tropical_curve(const TropicalPolynomial& f) {
  auto direct = tropical_curve_bisector(f);
  auto dual = curve_from_subdivision(f, newton_subdivision(f));
  if (!(direct == dual)) throw ConsistencyError("bisector and Newton-dual tropical curves disagree");
  return direct;
}

// --- serialization -------------------------------------------------------

/// Valuation of a coefficient written as a monomial in the uniformizer:
/// "t^(3/2)", "-t", "5*t^2", "1". Nonzero constants have valuation 0.
inline Rational coefficient_valuation(const std::string& text) {
  static const std::regex re(R"(^\s*[+-]?\s*(?:(\d+)\s*\*?\s*)?(t(?:\s*\^.*)?)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re) || (!m[1].matched && !m[2].matched))
    throw ParseError("cannot read coefficient '" + text + "'");
  if (m[1].matched && BigInt(m[1].str()) == 0) throw ParseError("zero coefficient '" + text + "'");
  return m[2].matched ? parse_valuation(m[2].str()) : Rational(0);
}

/// {"terms":[{"i":1,"j":0,"val":"0"}, {"i":0,"j":0,"coeff":"t^(1/2)"}, ...]}
inline TropicalPolynomial polynomial_from_json(const PlaneJson& j) {
  try {
    TropicalPolynomial f;
    for (const auto& t : j.at("terms")) {
      Exponent e{t.at("i").get<std::int64_t>(), t.at("j").get<std::int64_t>()};
      Rational v;
      if (t.contains("val")) {
        const auto& x = t.at("val");
        v = x.is_string() ? parse_valuation(x.get<std::string>()) : Rational(x.get<long>());
      } else {
        v = coefficient_valuation(t.at("coeff").get<std::string>());
      }
      f.add_term(e, v);
    }
    if (f.size() == 0) throw ParseError("tropical polynomial needs at least one term");
    return f;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad polynomial JSON: ") + ex.what());
  }
}

inline PlaneJson to_json(const TropicalPolynomial& f) {
  PlaneJson terms = PlaneJson::array();
  for (const auto& [e, v] : f.terms()) terms.push_back({{"i", e.first}, {"j", e.second}, {"val", to_string(v)}});
  return {{"terms", std::move(terms)}};
}

inline PlaneJson to_json(const Point& p) { return PlaneJson::array({to_string(p.z), to_string(p.w)}); }

inline PlaneJson to_json(const TropicalPlaneCurve& c) {
  PlaneJson j;
  PlaneJson verts = PlaneJson::array();
  for (const auto& p : c.vertices) verts.push_back(to_json(p));
  j["vertices"] = std::move(verts);
  PlaneJson segs = PlaneJson::array();
  for (const auto& [a, b] : c.segments) segs.push_back(PlaneJson::array({a, b}));
  j["segments"] = std::move(segs);
  PlaneJson rays = PlaneJson::array();
  for (const auto& r : c.rays)
    rays.push_back({{"base", r.base}, {"direction", PlaneJson::array({r.direction.dz, r.direction.dw})}});
  j["rays"] = std::move(rays);
  PlaneJson lines = PlaneJson::array();
  for (const auto& l : c.lines)
    lines.push_back({{"point", to_json(l.point)}, {"direction", PlaneJson::array({l.direction.dz, l.direction.dw})}});
  j["lines"] = std::move(lines);
  return j;
}

inline PlaneJson to_json(const NewtonSubdivision& s) {
  PlaneJson j;
  j["dimension"] = s.dimension;
  PlaneJson lifted = PlaneJson::array();
  for (const auto& p : s.lifted) lifted.push_back(PlaneJson::array({p.exponent.first, p.exponent.second, to_string(p.height)}));
  j["lifted"] = std::move(lifted);
  auto pts = [](const std::vector<Exponent>& v) {
    PlaneJson a = PlaneJson::array();
    for (const auto& e : v) a.push_back(PlaneJson::array({e.first, e.second}));
    return a;
  };
  PlaneJson cells = PlaneJson::array();
  for (const auto& c : s.cells) cells.push_back({{"vertices", pts(c.vertices)}, {"points", pts(c.points)}});
  j["cells"] = std::move(cells);
  return j;
}

/// Viewport in curve coordinates for SVG output.
struct Viewport {
  double zmin = -1, wmin = -1, zmax = 1, wmax = 1;
};

/// Bounding box of the vertices (and line anchors) padded by a quarter of
/// its extent, never smaller than 2 x 2.
inline Viewport default_viewport(const TropicalPlaneCurve& c) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : c.vertices) pts.emplace_back(p.z.get_d(), p.w.get_d());
  for (const auto& l : c.lines) pts.emplace_back(l.point.z.get_d(), l.point.w.get_d());
  if (pts.empty()) return {};
  Viewport v{pts[0].first, pts[0].second, pts[0].first, pts[0].second};
  for (const auto& [z, w] : pts) {
    v.zmin = std::min(v.zmin, z);
    v.zmax = std::max(v.zmax, z);
    v.wmin = std::min(v.wmin, w);
    v.wmax = std::max(v.wmax, w);
  }
  const double pad = std::max({1.0, 0.25 * (v.zmax - v.zmin), 0.25 * (v.wmax - v.wmin)});
  return {v.zmin - pad, v.wmin - pad, v.zmax + pad, v.wmax + pad};
}

/// Renders bounded cells and rays/lines clipped to the viewport.
inline std::string to_svg(const TropicalPlaneCurve& c, const Viewport& view, int pixels = 400) {
  const double sx = pixels / (view.zmax - view.zmin);
  const double sy = pixels / (view.wmax - view.wmin);
  auto X = [&](double z) { return (z - view.zmin) * sx; };
  auto Y = [&](double w) { return (view.wmax - w) * sy; };
  // Largest t >= 0 keeping base + t d inside the viewport.
  auto exit_param = [&](double z, double w, double dz, double dw) {
    double t = 1e300;
    if (dz > 0) t = std::min(t, (view.zmax - z) / dz);
    if (dz < 0) t = std::min(t, (view.zmin - z) / dz);
    if (dw > 0) t = std::min(t, (view.wmax - w) / dw);
    if (dw < 0) t = std::min(t, (view.wmin - w) / dw);
    return std::max(0.0, t);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\"" << pixels << "\" viewBox=\"0 0 "
     << pixels << " " << pixels << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  auto line = [&](double z1, double w1, double z2, double w2) {
    os << "    <line x1=\"" << X(z1) << "\" y1=\"" << Y(w1) << "\" x2=\"" << X(z2) << "\" y2=\"" << Y(w2) << "\"/>\n";
  };
  for (const auto& [a, b] : c.segments)
    line(c.vertices[a].z.get_d(), c.vertices[a].w.get_d(), c.vertices[b].z.get_d(), c.vertices[b].w.get_d());
  for (const auto& r : c.rays) {
    const double z = c.vertices[r.base].z.get_d(), w = c.vertices[r.base].w.get_d();
    const double dz = static_cast<double>(r.direction.dz), dw = static_cast<double>(r.direction.dw);
    const double t = exit_param(z, w, dz, dw);
    line(z, w, z + t * dz, w + t * dw);
  }
  for (const auto& l : c.lines) {
    const double z = l.point.z.get_d(), w = l.point.w.get_d();
    const double dz = static_cast<double>(l.direction.dz), dw = static_cast<double>(l.direction.dw);
    const double t1 = exit_param(z, w, dz, dw), t2 = exit_param(z, w, -dz, -dw);
    line(z - t2 * dz, w - t2 * dw, z + t1 * dz, w + t1 * dw);
  }
  os << "  </g>\n  <g fill=\"black\">\n";
  for (const auto& p : c.vertices)
    os << "    <circle cx=\"" << X(p.z.get_d()) << "\" cy=\"" << Y(p.w.get_d()) << "\" r=\"3\"/>\n";
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace tropmod
