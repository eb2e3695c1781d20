#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "tropmod/graph.hpp"
#include "tropmod/rational.hpp"

namespace tropmod {

/// Special fiber of a stable model, as supplied by the user: irreducible
/// components with geometric genus, nodes with the valuation v(alpha) of
/// their local equation xy - alpha (infinite when alpha = 0), and the
/// component carrying each marked point.
struct StableModelDescription {
  struct Component {
    int id = 0;
    int genus = 0;
  };
  struct Node {
    int a = 0;
    int b = 0;
    ExtendedLength valuation;
  };

  std::vector<Component> components;
  std::vector<Node> nodes;
  std::vector<int> markings;  // component id of marked point k+1
};

/// Weighted marked graph with a length on every edge. Any infinite length
/// makes it an extended tropical curve.
struct MetricGraph {
  WeightedMarkedGraph type;
  std::vector<ExtendedLength> lengths;

  bool is_extended() const {
    return std::any_of(lengths.begin(), lengths.end(), [](const auto& l) { return l.is_infinite(); });
  }
};

/// Sum of the edge lengths.
inline Rational volume(const MetricGraph& curve) {
  Rational total = 0;
  for (const auto& l : curve.lengths) {
    if (l.is_infinite()) throw ExtendedCurveError("volume is undefined on an extended tropical curve");
    total += l.value();
  }
  return total;
}

/// Scales all lengths so the volume becomes 1, placing the curve on the
/// link of the moduli space.
inline MetricGraph rescale_to_volume_one(const MetricGraph& curve) {
  const Rational vol = volume(curve);
  if (vol == 0) throw ExtendedCurveError("cannot rescale a curve of volume 0");
  MetricGraph out = curve;
  for (auto& l : out.lengths) l = ExtendedLength(Rational(l.value() / vol));
  return out;
}

/// Dual graph of the special fiber: a vertex per component weighted by its
/// genus, an edge per node with length v(alpha), markings carried over.
inline MetricGraph tropicalize_model(const StableModelDescription& model) {
  if (model.components.empty()) throw ModelError("malformed model: no components");
  std::vector<int> ids;
  std::vector<int> weights;
  for (const auto& c : model.components) {
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end())
      throw ModelError("malformed model: duplicate component id " + std::to_string(c.id));
    if (c.genus < 0) throw ModelError("malformed model: negative genus on component " + std::to_string(c.id));
    ids.push_back(c.id);
    weights.push_back(c.genus);
  }
  auto vertex_of = [&](int id, const char* what) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end())
      throw ModelError(std::string("malformed model: ") + what + " refers to unknown component " +
                       std::to_string(id));
    return static_cast<int>(it - ids.begin());
  };

  MetricGraph out;
  std::vector<Edge> edges;
  for (const auto& node : model.nodes) {
    if (!node.valuation.is_infinite() && node.valuation.value() <= 0)
      throw ModelError("malformed model: node valuation must be positive, got " + to_string(node.valuation));
    edges.push_back({vertex_of(node.a, "node"), vertex_of(node.b, "node")});
    out.lengths.push_back(node.valuation);
  }
  std::vector<int> markings;
  for (int id : model.markings) markings.push_back(vertex_of(id, "marking"));

  out.type = WeightedMarkedGraph(std::move(weights), std::move(edges), std::move(markings));
  if (!out.type.is_connected()) throw ModelError("malformed model: special fiber is disconnected");
  for (int v = 0; v < out.type.num_vertices(); ++v) {
    if (stability_excess(out.type, v) <= 0)
      throw ModelError("rejected model: component " + std::to_string(ids[v]) +
                       " is unstable (2g - 2 + nodes + markings <= 0)");
  }
  return out;
}

// --- serialization -------------------------------------------------------

/// {"components":[{"id":..,"genus":..}],"nodes":[{"a":..,"b":..,"length":"5/2"|"inf"|"t^(5/2)"}],
///  "markings":[..]}
inline StableModelDescription model_from_json(const Json& j) {
  try {
    StableModelDescription m;
    for (const auto& c : j.at("components")) m.components.push_back({c.at("id").get<int>(), c.value("genus", 0)});
    if (j.contains("nodes")) {
      for (const auto& nd : j.at("nodes")) {
        const auto& len = nd.at("length");
        ExtendedLength l = len.is_string() ? parse_length(len.get<std::string>())
                                           : ExtendedLength(Rational(len.get<long>()));
        m.nodes.push_back({nd.at("a").get<int>(), nd.at("b").get<int>(), l});
      }
    }
    if (j.contains("markings"))
      for (const auto& k : j.at("markings")) m.markings.push_back(k.get<int>());
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw ModelError(std::string("malformed model JSON: ") + ex.what());
  }
}

inline Json to_json(const MetricGraph& curve) {
  Json j = to_json(curve.type);
  Json lengths = Json::array();
  for (const auto& l : curve.lengths) lengths.push_back(to_string(l));
  j["lengths"] = std::move(lengths);
  j["genus"] = genus(curve.type);
  j["extended"] = curve.is_extended();
  j["volume"] = curve.is_extended() ? Json(nullptr) : Json(to_string(volume(curve)));
  return j;
}

inline std::string to_dot(const MetricGraph& curve) {
  std::ostringstream os;
  os << "graph tropical_curve {\n  node [shape=circle];\n";
  const auto& g = curve.type;
  for (int v = 0; v < g.num_vertices(); ++v)
    os << "  v" << v << " [label=\"" << (g.weight(v) ? std::to_string(g.weight(v)) : "") << "\"];\n";
  for (int e = 0; e < g.num_edges(); ++e)
    os << "  v" << g.edge(e).u << " -- v" << g.edge(e).v << " [label=\"" << to_string(curve.lengths[e]) << "\"];\n";
  for (int k = 0; k < g.num_markings(); ++k) {
    os << "  m" << (k + 1) << " [shape=plaintext,label=\"" << (k + 1) << "\"];\n";
    os << "  v" << g.markings()[k] << " -- m" << (k + 1) << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tropmod
