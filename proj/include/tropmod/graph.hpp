#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tropmod/error.hpp"

namespace tropmod {

using Json = nlohmann::ordered_json;

/// Unordered vertex pair; stored with u <= v. A loop has u == v. Edge e owns
/// half-edges 2e (at u) and 2e+1 (at v).
struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Combinatorial type (G, m, w) of a marked tropical curve: a connected
/// multigraph with nonnegative vertex weights and a marking function
/// {1..n} -> V(G). Marking k+1 sits at `markings()[k]`.
///
/// Loops and parallel edges are allowed. Edge order is significant: it is the
/// orientation data used by the chain complex, and contraction keeps the
/// relative order of the surviving edges.
class WeightedMarkedGraph {
 public:
  WeightedMarkedGraph() = default;

  /// Validates vertex ids and weights. Connectivity is not enforced here; see
  /// is_connected() and validate().
  WeightedMarkedGraph(std::vector<int> weights, std::vector<Edge> edges, std::vector<int> markings)
      : weights_(std::move(weights)), edges_(std::move(edges)), markings_(std::move(markings)) {
    const int nv = num_vertices();
    for (int w : weights_)
      if (w < 0) throw MalformedGraphError("vertex weight must be nonnegative");
    for (auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= nv || e.v >= nv)
        throw MalformedGraphError("edge endpoint is not a vertex");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    for (int m : markings_)
      if (m < 0 || m >= nv) throw MalformedGraphError("marking refers to a missing vertex");
  }

  /// The cone point: one vertex of weight g carrying all n markings.
  static WeightedMarkedGraph cone_point(int g, int n) {
    return WeightedMarkedGraph({g}, {}, std::vector<int>(static_cast<std::size_t>(n), 0));
  }

  int num_vertices() const noexcept { return static_cast<int>(weights_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  int num_markings() const noexcept { return static_cast<int>(markings_.size()); }

  const std::vector<int>& weights() const noexcept { return weights_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& markings() const noexcept { return markings_; }

  int weight(int v) const { return weights_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Number of half-edges at v; a loop counts twice.
  int valence(int v) const {
    int val = 0;
    for (const auto& e : edges_) val += (e.u == v) + (e.v == v);
    return val;
  }

  int marking_count(int v) const {
    return static_cast<int>(std::count(markings_.begin(), markings_.end(), v));
  }

  int total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

  bool is_connected() const {
    const int nv = num_vertices();
    if (nv == 0) return false;
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = nv;
    for (const auto& e : edges_) {
      int a = find(e.u), b = find(e.v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components == 1;
  }

  void validate() const {
    if (!is_connected()) throw MalformedGraphError("graph is empty or disconnected");
  }

  friend bool operator==(const WeightedMarkedGraph&, const WeightedMarkedGraph&) = default;

 private:
  std::vector<int> weights_;
  std::vector<Edge> edges_;
  std::vector<int> markings_;
};

/// First Betti number plus total vertex weight.
inline int genus(const WeightedMarkedGraph& g) {
  g.validate();
  return g.num_edges() - g.num_vertices() + 1 + g.total_weight();
}

/// 2w(v) - 2 + val(v) + |m^{-1}(v)|; stability asks for this to be positive.
inline int stability_excess(const WeightedMarkedGraph& g, int v) {
  return 2 * g.weight(v) - 2 + g.valence(v) + g.marking_count(v);
}

inline bool is_stable(const WeightedMarkedGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (stability_excess(g, v) <= 0) return false;
  return true;
}

/// Contracts edge e. A loop is deleted and its base weight incremented; a
/// bridge-or-cycle edge merges its endpoints (the larger index is removed
/// and later vertices shift down by one). Surviving edges keep their order.
inline WeightedMarkedGraph contract_edge(const WeightedMarkedGraph& g, int e) {
  if (e < 0 || e >= g.num_edges())
    throw UnknownEdgeError("edge " + std::to_string(e) + " is not an edge of the graph");
  const Edge target = g.edge(e);
  std::vector<int> weights = g.weights();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.num_edges() - 1));
  std::vector<int> markings = g.markings();

  if (target.is_loop()) {
    weights[static_cast<std::size_t>(target.u)] += 1;
    for (int i = 0; i < g.num_edges(); ++i)
      if (i != e) edges.push_back(g.edge(i));
    return WeightedMarkedGraph(std::move(weights), std::move(edges), std::move(markings));
  }

  const int keep = target.u;
  const int gone = target.v;
  auto relabel = [&](int x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  weights[static_cast<std::size_t>(keep)] += weights[static_cast<std::size_t>(gone)];
  weights.erase(weights.begin() + gone);
  for (int i = 0; i < g.num_edges(); ++i) {
    if (i == e) continue;
    const Edge& old = g.edge(i);
    Edge ne{relabel(old.u), relabel(old.v)};
    if (ne.u > ne.v) std::swap(ne.u, ne.v);
    edges.push_back(ne);
  }
  for (auto& m : markings) m = relabel(m);
  return WeightedMarkedGraph(std::move(weights), std::move(edges), std::move(markings));
}

// --- serialization -------------------------------------------------------

/// {"vertices":[{"id":..,"weight":..}], "edges":[[a,b],..], "markings":[..]}
inline Json to_json(const WeightedMarkedGraph& g) {
  Json j;
  Json verts = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) verts.push_back({{"id", v}, {"weight", g.weight(v)}});
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  j["markings"] = g.markings();
  return j;
}

/// Vertex ids in the JSON may be arbitrary integers; they are renumbered in
/// order of appearance.
inline WeightedMarkedGraph graph_from_json(const Json& j) {
  try {
    std::vector<int> ids;
    std::vector<int> weights;
    for (const auto& v : j.at("vertices")) {
      ids.push_back(v.at("id").get<int>());
      weights.push_back(v.value("weight", 0));
    }
    auto index_of = [&](int id) {
      auto it = std::find(ids.begin(), ids.end(), id);
      if (it == ids.end()) throw MalformedGraphError("unknown vertex id " + std::to_string(id));
      return static_cast<int>(it - ids.begin());
    };
    {
      auto sorted = ids;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw MalformedGraphError("duplicate vertex id");
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw MalformedGraphError("edge must be a pair of ids");
      edges.push_back({index_of(e[0].get<int>()), index_of(e[1].get<int>())});
    }
    std::vector<int> markings;
    if (j.contains("markings"))
      for (const auto& m : j.at("markings")) markings.push_back(index_of(m.get<int>()));
    WeightedMarkedGraph g(std::move(weights), std::move(edges), std::move(markings));
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw MalformedGraphError(std::string("bad graph JSON: ") + ex.what());
  }
}

/// Graphviz rendering: weights label vertices, markings are drawn as short
/// labelled rays ending at point-shaped nodes.
inline std::string to_dot(const WeightedMarkedGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    os << "  v" << v << " [label=\"" << (g.weight(v) ? std::to_string(g.weight(v)) : "") << "\"];\n";
  for (const auto& e : g.edges()) os << "  v" << e.u << " -- v" << e.v << ";\n";
  for (int k = 0; k < g.num_markings(); ++k) {
    os << "  m" << (k + 1) << " [shape=plaintext,label=\"" << (k + 1) << "\"];\n";
    os << "  v" << g.markings()[static_cast<std::size_t>(k)] << " -- m" << (k + 1)
       << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tropmod
