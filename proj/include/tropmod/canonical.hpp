#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "tropmod/graph.hpp"

namespace tropmod {

/// Canonical labelling of a weighted marked graph.
///
/// `encoding` depends only on the isomorphism class (markings matched
/// pointwise, weights preserved). `vertex_map[v]` and `edge_map[e]` give the
/// position of vertex v / edge e in `canonical`, the representative rebuilt
/// from the encoding whose edges are sorted by endpoint pair.
struct GraphIsoCertificate {
  std::string encoding;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  WeightedMarkedGraph canonical;
};

namespace detail {

/// Dense view used by the refinement search. `mult[u][v]` counts non-loop
/// edges, `loops[v]` counts loops.
struct DenseGraph {
  int n = 0;
  std::vector<std::vector<int>> mult;
  std::vector<int> loops;
  std::vector<std::vector<int>> marks;  // sorted marking indices per vertex

  explicit DenseGraph(const WeightedMarkedGraph& g) : n(g.num_vertices()) {
    mult.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    loops.assign(static_cast<std::size_t>(n), 0);
    marks.assign(static_cast<std::size_t>(n), {});
    for (const auto& e : g.edges()) {
      if (e.is_loop()) {
        ++loops[e.u];
      } else {
        ++mult[e.u][e.v];
        ++mult[e.v][e.u];
      }
    }
    for (int k = 0; k < g.num_markings(); ++k) marks[g.markings()[k]].push_back(k);
  }
};

template <typename Key>
std::vector<int> rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return out;
}

inline int count_colors(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

/// Equitable refinement of an ordered partition given as dense color ranks.
inline std::vector<int> refine(const DenseGraph& d, std::vector<int> colors) {
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  int ncolors = count_colors(colors);
  for (;;) {
    std::vector<Signature> sig(static_cast<std::size_t>(d.n));
    for (int v = 0; v < d.n; ++v) {
      sig[v].first = colors[v];
      for (int u = 0; u < d.n; ++u)
        if (u != v && d.mult[v][u] > 0) sig[v].second.emplace_back(colors[u], d.mult[v][u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto next = rank_keys(sig);
    int next_count = count_colors(next);
    if (next_count == ncolors) return colors;
    colors = std::move(next);
    ncolors = next_count;
  }
}

inline std::string encode(const WeightedMarkedGraph& g, const DenseGraph& d, const std::vector<int>& pos) {
  auto byte = [](int x) {
    if (x < 0 || x > 255) throw MalformedGraphError("graph too large for canonical encoding");
    return static_cast<char>(static_cast<unsigned char>(x));
  };
  const int n = d.n;
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) at[pos[v]] = v;
  std::string out;
  out.reserve(static_cast<std::size_t>(3 + 2 * n + g.num_markings() + n * (n - 1) / 2));
  out.push_back(byte(n));
  out.push_back(byte(g.num_edges()));
  out.push_back(byte(g.num_markings()));
  for (int p = 0; p < n; ++p) {
    out.push_back(byte(g.weight(at[p])));
    out.push_back(byte(d.loops[at[p]]));
  }
  for (int m : g.markings()) out.push_back(byte(pos[m]));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) out.push_back(byte(d.mult[at[p]][at[q]]));
  return out;
}

struct SearchResult {
  std::string best;
  std::vector<int> best_pos;
  /// Every leaf labelling that reproduces `best`; collected on request.
  std::vector<std::vector<int>> best_leaves;
};

/// Individualisation-refinement over the first non-singleton cell, keeping
/// the lexicographically least leaf encoding.
inline void search(const WeightedMarkedGraph& g, const DenseGraph& d, std::vector<int> colors,
                   bool collect, SearchResult& result) {
  colors = refine(d, std::move(colors));
  const int ncolors = count_colors(colors);
  if (ncolors == d.n) {
    std::string enc = encode(g, d, colors);
    if (result.best_pos.empty() || enc < result.best) {
      result.best = std::move(enc);
      result.best_pos = colors;
      result.best_leaves.clear();
      if (collect) result.best_leaves.push_back(colors);
    } else if (collect && enc == result.best) {
      result.best_leaves.push_back(colors);
    }
    return;
  }
  std::vector<int> cell_size(static_cast<std::size_t>(ncolors), 0);
  for (int c : colors) ++cell_size[c];
  int target = 0;
  while (cell_size[target] == 1) ++target;
  for (int x = 0; x < d.n; ++x) {
    if (colors[x] != target) continue;
    std::vector<int> split(colors.size());
    for (int v = 0; v < d.n; ++v) split[v] = 2 * colors[v] + ((colors[v] == target && v != x) ? 1 : 0);
    search(g, d, rank_keys(split), collect, result);
  }
}

inline std::vector<int> initial_colors(const WeightedMarkedGraph& g, const DenseGraph& d) {
  using Key = std::tuple<int, std::vector<int>, int, int>;
  std::vector<Key> keys;
  keys.reserve(static_cast<std::size_t>(d.n));
  for (int v = 0; v < d.n; ++v) keys.emplace_back(g.weight(v), d.marks[v], d.loops[v], g.valence(v));
  return rank_keys(keys);
}

inline SearchResult run_search(const WeightedMarkedGraph& g, bool collect) {
  DenseGraph d(g);
  SearchResult result;
  search(g, d, initial_colors(g, d), collect, result);
  return result;
}

}  // namespace detail

/// Canonical form via colour refinement on (weight, markings, loops,
/// valence) and backtracking over the first non-trivial cell.
inline GraphIsoCertificate canonical_form(const WeightedMarkedGraph& g) {
  if (g.num_vertices() == 0) throw MalformedGraphError("empty graph");
  auto res = detail::run_search(g, false);
  GraphIsoCertificate cert;
  cert.encoding = std::move(res.best);
  cert.vertex_map = std::move(res.best_pos);

  const int ne = g.num_edges();
  std::vector<std::pair<std::pair<int, int>, int>> images;
  images.reserve(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) {
    int a = cert.vertex_map[g.edge(e).u], b = cert.vertex_map[g.edge(e).v];
    if (a > b) std::swap(a, b);
    images.push_back({{a, b}, e});
  }
  std::sort(images.begin(), images.end());
  cert.edge_map.assign(static_cast<std::size_t>(ne), 0);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(ne));
  for (int i = 0; i < ne; ++i) {
    cert.edge_map[images[i].second] = i;
    edges.push_back({images[i].first.first, images[i].first.second});
  }
  std::vector<int> weights(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) weights[cert.vertex_map[v]] = g.weight(v);
  std::vector<int> markings;
  markings.reserve(static_cast<std::size_t>(g.num_markings()));
  for (int m : g.markings()) markings.push_back(cert.vertex_map[m]);
  cert.canonical = WeightedMarkedGraph(std::move(weights), std::move(edges), std::move(markings));
  return cert;
}

/// All vertex permutations sigma (sigma[v] = image of v) preserving weights,
/// markings pointwise, loop counts and edge multiplicities.
inline std::vector<std::vector<int>> vertex_automorphisms(const WeightedMarkedGraph& g) {
  auto res = detail::run_search(g, true);
  const int n = g.num_vertices();
  std::vector<int> inv_best(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) inv_best[res.best_pos[v]] = v;
  std::vector<std::vector<int>> out;
  out.reserve(res.best_leaves.size());
  for (const auto& leaf : res.best_leaves) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) sigma[v] = inv_best[leaf[v]];
    out.push_back(std::move(sigma));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool isomorphic(const WeightedMarkedGraph& a, const WeightedMarkedGraph& b) {
  return canonical_form(a).encoding == canonical_form(b).encoding;
}

}  // namespace tropmod
