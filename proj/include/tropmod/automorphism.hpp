#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "tropmod/canonical.hpp"

namespace tropmod {

using Permutation = std::vector<int>;

/// Sign of a permutation in one-line notation: +1 or -1.
inline int permutation_sign(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Image of Aut(G, m, w) in the symmetric group on E(G).
struct EdgeAutomorphismGroup {
  std::vector<Permutation> generators;  // perm[e] = image of edge e; identity omitted
  std::uint64_t order = 1;
  bool has_odd_element = false;
};

namespace detail {

/// Edge permutation induced by a vertex automorphism, matching parallel
/// edges within a bundle in index order.
inline Permutation induced_edge_permutation(const WeightedMarkedGraph& g, const std::vector<int>& sigma) {
  std::map<std::pair<int, int>, std::vector<int>> bundles;
  for (int e = 0; e < g.num_edges(); ++e) bundles[{g.edge(e).u, g.edge(e).v}].push_back(e);
  Permutation perm(static_cast<std::size_t>(g.num_edges()));
  for (const auto& [ends, members] : bundles) {
    int a = sigma[ends.first], b = sigma[ends.second];
    if (a > b) std::swap(a, b);
    const auto& targets = bundles.at({a, b});
    for (std::size_t i = 0; i < members.size(); ++i) perm[members[i]] = targets[i];
  }
  return perm;
}

}  // namespace detail

/// Automorphisms fix every marking pointwise. A loop flip induces the
/// identity on edges, so it never contributes parity.
inline EdgeAutomorphismGroup automorphisms(const WeightedMarkedGraph& g) {
  EdgeAutomorphismGroup out;
  const int ne = g.num_edges();
  std::map<std::pair<int, int>, std::vector<int>> bundles;
  for (int e = 0; e < ne; ++e) bundles[{g.edge(e).u, g.edge(e).v}].push_back(e);

  std::set<Permutation> induced;
  std::uint64_t vertex_group = 0;
  std::uint64_t edge_trivial = 0;  // vertex automorphisms fixing every edge's endpoint set
  for (const auto& sigma : vertex_automorphisms(g)) {
    ++vertex_group;
    bool fixes_all = true;
    for (const auto& [ends, members] : bundles) {
      int a = sigma[ends.first], b = sigma[ends.second];
      if (a > b) std::swap(a, b);
      if (std::pair{a, b} != ends) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) ++edge_trivial;
    auto perm = detail::induced_edge_permutation(g, sigma);
    if (permutation_sign(perm) < 0) out.has_odd_element = true;
    induced.insert(std::move(perm));
  }

  std::uint64_t bundle_factor = 1;
  Permutation identity(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) identity[e] = e;
  for (const auto& [ends, members] : bundles) {
    for (std::size_t i = 1; i < members.size(); ++i) {
      bundle_factor *= (i + 1);
      Permutation swap = identity;
      std::swap(swap[members[i - 1]], swap[members[i]]);
      out.generators.push_back(std::move(swap));
      out.has_odd_element = true;
    }
  }
  induced.erase(identity);
  for (auto& p : induced) out.generators.push_back(p);
  std::sort(out.generators.begin(), out.generators.end());
  out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
  out.order = vertex_group / edge_trivial * bundle_factor;
  return out;
}

/// Rational chains on a cell vanish exactly when some symmetry reverses
/// its edge orientation.
inline bool is_orientable(const WeightedMarkedGraph& g) { return !automorphisms(g).has_odd_element; }

/// Cheaper test used on hot paths: any parallel or repeated-loop bundle
/// already yields an odd transposition.
inline bool has_odd_edge_symmetry(const WeightedMarkedGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges())
    if (!seen.insert({e.u, e.v}).second) return true;
  for (const auto& sigma : vertex_automorphisms(g))
    if (permutation_sign(detail::induced_edge_permutation(g, sigma)) < 0) return true;
  return false;
}

}  // namespace tropmod
