#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropmod/canonical.hpp"
#include "tropmod/error.hpp"
#include "tropmod/parallel.hpp"

namespace tropmod {

struct EnumerationOptions {
  unsigned threads = 1;
  /// Abort with ResourceLimitError once the catalog exceeds this many types.
  /// Zero disables the check.
  std::size_t max_types = 0;
};

/// All stable combinatorial types of genus g with n markings, up to
/// isomorphism. Types are stored in canonical form, ordered by edge count
/// and then by canonical encoding.
class TypeCatalog {
 public:
  TypeCatalog(int g, int n, std::vector<WeightedMarkedGraph> types, std::vector<std::string> encodings)
      : g_(g), n_(n), types_(std::move(types)), encodings_(std::move(encodings)) {
    f_vector_.assign(static_cast<std::size_t>(max_edges() + 1), 0);
    for (std::size_t i = 0; i < types_.size(); ++i) {
      ++f_vector_.at(static_cast<std::size_t>(types_[i].num_edges()));
      index_.emplace(encodings_[i], i);
    }
  }

  int genus() const noexcept { return g_; }
  int markings() const noexcept { return n_; }
  /// 3g - 3 + n, the dimension of the moduli space.
  int max_edges() const noexcept { return 3 * g_ - 3 + n_; }

  std::size_t size() const noexcept { return types_.size(); }
  const std::vector<WeightedMarkedGraph>& types() const noexcept { return types_; }
  const WeightedMarkedGraph& type(std::size_t i) const { return types_.at(i); }
  const std::string& encoding(std::size_t i) const { return encodings_.at(i); }

  /// Number of types with k edges, for k = 0..3g-3+n.
  const std::vector<std::size_t>& f_vector() const noexcept { return f_vector_; }

  std::optional<std::size_t> find(const std::string& encoding) const {
    auto it = index_.find(encoding);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> find(const WeightedMarkedGraph& g) const { return find(canonical_form(g).encoding); }

 private:
  int g_;
  int n_;
  std::vector<WeightedMarkedGraph> types_;
  std::vector<std::string> encodings_;
  std::vector<std::size_t> f_vector_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Every stable graph with one more edge that contracts back to `parent`:
/// a loop traded for one unit of weight, or a vertex split in two along a
/// new edge.
inline std::vector<WeightedMarkedGraph> uncontractions(const WeightedMarkedGraph& parent) {
  std::vector<WeightedMarkedGraph> out;
  const int nv = parent.num_vertices();
  for (int v = 0; v < nv; ++v) {
    const int w = parent.weight(v);
    if (w >= 1) {
      auto weights = parent.weights();
      --weights[v];
      auto edges = parent.edges();
      edges.push_back({v, v});
      out.emplace_back(std::move(weights), std::move(edges), parent.markings());
    }

    // Split v into v and a new vertex `fresh` joined by a new edge.
    std::vector<std::pair<int, int>> half_edges;  // (edge, side) with side 0 = u, 1 = v
    for (int e = 0; e < parent.num_edges(); ++e) {
      if (parent.edge(e).u == v) half_edges.emplace_back(e, 0);
      if (parent.edge(e).v == v) half_edges.emplace_back(e, 1);
    }
    std::vector<int> marks;
    for (int k = 0; k < parent.num_markings(); ++k)
      if (parent.markings()[k] == v) marks.push_back(k);
    const int d = static_cast<int>(half_edges.size());
    const int m = static_cast<int>(marks.size());
    const int fresh = nv;
    for (unsigned hmask = 0; hmask < (1u << d); ++hmask) {
      // Splits come in swapped pairs; keep the half where half-edge 0 stays.
      if (d > 0 && (hmask & 1u)) continue;
      const int moved = __builtin_popcount(hmask);
      for (unsigned mmask = 0; mmask < (1u << m); ++mmask) {
        if (d == 0 && m > 0 && (mmask & 1u)) continue;
        const int mmoved = __builtin_popcount(mmask);
        for (int w1 = 0; w1 <= w; ++w1) {
          const int w2 = w - w1;
          if (d == 0 && m == 0 && w1 < w2) continue;
          if (2 * w1 - 2 + (d - moved) + 1 + (m - mmoved) <= 0) continue;
          if (2 * w2 - 2 + moved + 1 + mmoved <= 0) continue;
          auto weights = parent.weights();
          weights[v] = w1;
          weights.push_back(w2);
          auto edges = parent.edges();
          for (int h = 0; h < d; ++h) {
            if (!(hmask >> h & 1u)) continue;
            auto& e = edges[half_edges[h].first];
            (half_edges[h].second == 0 ? e.u : e.v) = fresh;
          }
          edges.push_back({v, fresh});
          auto markings = parent.markings();
          for (int k = 0; k < m; ++k)
            if (mmask >> k & 1u) markings[marks[k]] = fresh;
          out.emplace_back(std::move(weights), std::move(edges), std::move(markings));
        }
      }
    }
  }
  return out;
}

/// Builds the catalog level by level from the cone point, deduplicating by
/// canonical encoding. Output is independent of the thread count.
inline TypeCatalog enumerate_types(int g, int n, const EnumerationOptions& opts = {}) {
  require_stable_type(g, n);
  const int top = 3 * g - 3 + n;
  std::vector<WeightedMarkedGraph> types;
  std::vector<std::string> encodings;

  std::vector<WeightedMarkedGraph> level;
  {
    auto cert = canonical_form(WeightedMarkedGraph::cone_point(g, n));
    types.push_back(cert.canonical);
    encodings.push_back(cert.encoding);
    level.push_back(std::move(cert.canonical));
  }
  std::vector<std::size_t> partial{1};

  for (int k = 1; k <= top && !level.empty(); ++k) {
    std::vector<std::map<std::string, WeightedMarkedGraph>> found(level.size());
    parallel_for(level.size(), opts.threads, [&](std::size_t i) {
      for (auto& child : uncontractions(level[i])) {
        auto cert = canonical_form(child);
        found[i].try_emplace(std::move(cert.encoding), std::move(cert.canonical));
      }
    });
    std::map<std::string, WeightedMarkedGraph> merged;
    for (auto& f : found) merged.merge(f);
    level.clear();
    for (auto& [enc, graph] : merged) {
      encodings.push_back(enc);
      types.push_back(graph);
      level.push_back(std::move(graph));
    }
    partial.push_back(merged.size());
    if (opts.max_types && types.size() > opts.max_types)
      throw ResourceLimitError("catalog for (g,n) = (" + std::to_string(g) + "," + std::to_string(n) +
                                   ") exceeds " + std::to_string(opts.max_types) + " types at " +
                                   std::to_string(k) + " edges",
                               partial);
  }
  return TypeCatalog(g, n, std::move(types), std::move(encodings));
}

inline std::vector<std::size_t> count_types(int g, int n, const EnumerationOptions& opts = {}) {
  return enumerate_types(g, n, opts).f_vector();
}

}  // namespace tropmod
