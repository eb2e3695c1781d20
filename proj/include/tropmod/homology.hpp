#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropmod/moduli_complex.hpp"
#include "tropmod/sparse_rank.hpp"

namespace tropmod {

struct HomologyOptions {
  unsigned threads = 1;
  /// Cap on the number of combinatorial types (and hence chain generators).
  /// Zero disables the cap.
  std::size_t max_generators = 50000;
};

/// Rational cellular chains of the link as a symmetric Delta-complex.
///
/// Degree p holds one generator per (p+1)-edge type without an
/// orientation-reversing symmetry, oriented by its canonical edge order.
/// Degree -1 is the augmentation, so the homology computed is reduced.
class ChainComplex {
 public:
  int min_degree() const noexcept { return -1; }
  int max_degree() const noexcept { return top_; }

  /// Link cells generating C_p, in catalog order (empty for p = -1).
  const std::vector<std::size_t>& generators(int p) const { return generators_.at(slot(p)); }
  std::size_t rank(int p) const { return p == -1 ? 1 : generators(p).size(); }

  /// d_p : C_p -> C_{p-1}, for p = 0..max_degree().
  const SparseIntMatrix& boundary(int p) const { return boundaries_.at(static_cast<std::size_t>(p)); }

  /// Throws ConsistencyError unless d_{p-1} d_p = 0 for every p.
  void check_boundary_squared() const {
    for (int p = 1; p <= top_; ++p) {
      auto prod = multiply(boundary(p - 1), boundary(p));
      for (int c = 0; c < prod.cols; ++c)
        if (!prod.columns[c].empty())
          throw ConsistencyError("boundary squared is nonzero in degree " + std::to_string(p));
    }
  }

 private:
  friend ChainComplex build_chain_complex(const LinkComplex&, unsigned);
  std::size_t slot(int p) const {
    if (p < -1 || p > top_) throw std::out_of_range("chain degree out of range");
    return static_cast<std::size_t>(p + 1);
  }

  int top_ = -1;
  std::vector<std::vector<std::size_t>> generators_;
  std::vector<SparseIntMatrix> boundaries_;
};

/// d(G, e_0 < ... < e_p) = sum_i (-1)^i (G/e_i, induced order), each term
/// rewritten to its canonical representative with the sign of the edge
/// reordering. Terms on non-orientable cells vanish.
inline ChainComplex build_chain_complex(const LinkComplex& link, unsigned threads = 1) {
  ChainComplex cc;
  cc.top_ = link.dimension();
  const auto& cells = link.cells();
  const auto& poset = link.poset();
  cc.generators_.assign(static_cast<std::size_t>(cc.top_ + 2), {});
  std::vector<long> position(cells.size(), -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].cone.edge_group.has_odd_element) continue;
    auto& bucket = cc.generators_[static_cast<std::size_t>(cells[c].dimension + 1)];
    position[c] = static_cast<long>(bucket.size());
    bucket.push_back(c);
  }

  cc.boundaries_.resize(static_cast<std::size_t>(cc.top_ + 1));
  for (int p = 0; p <= cc.top_; ++p) {
    const auto& gens = cc.generators(p);
    SparseIntMatrix d(static_cast<int>(cc.rank(p - 1)), static_cast<int>(gens.size()));
    if (p == 0) {
      for (auto& col : d.columns) col.push_back({0, 1});
    } else {
      parallel_for(gens.size(), threads, [&](std::size_t j) {
        const auto& cell = cells[gens[j]];
        const auto& faces = poset.covers_of(cell.type);
        for (std::size_t i = 0; i < faces.size(); ++i) {
          const auto& cover = poset.covers()[faces[i]];
          auto face_cell = link.cell_of_type(cover.child);
          if (!face_cell || position[*face_cell] < 0) continue;
          const int sign = ((i % 2) ? -1 : 1) * permutation_sign(cover.edge_map);
          d.columns[j].push_back({static_cast<int>(position[*face_cell]), sign});
        }
      });
      normalize_columns(d);
    }
    cc.boundaries_[static_cast<std::size_t>(p)] = std::move(d);
  }
  return cc;
}

/// Reduced rational homology of the link.
struct HomologyProfile {
  int g = 0;
  int n = 0;
  int min_degree = -1;
  std::vector<std::size_t> chain_ranks;     // dim C_p, p = -1..top
  std::vector<std::size_t> boundary_ranks;  // rank d_p, p = -1..top (d_{-1} = 0)
  std::vector<std::size_t> reduced_betti;   // p = -1..top
  long euler_reduced = 0;

  int max_degree() const noexcept { return min_degree + static_cast<int>(reduced_betti.size()) - 1; }
  std::size_t betti(int p) const {
    if (p < min_degree || p > max_degree()) return 0;
    return reduced_betti[static_cast<std::size_t>(p - min_degree)];
  }
  std::size_t chain_rank(int p) const {
    if (p < min_degree || p > max_degree()) return 0;
    return chain_ranks[static_cast<std::size_t>(p - min_degree)];
  }
};

inline HomologyProfile homology_of(const ChainComplex& cc, int g, int n) {
  HomologyProfile h;
  h.g = g;
  h.n = n;
  const int top = cc.max_degree();
  for (int p = -1; p <= top; ++p) {
    h.chain_ranks.push_back(cc.rank(p));
    h.boundary_ranks.push_back(p == -1 ? 0 : rank_over_q(cc.boundary(p)));
  }
  long chain_euler = 0, betti_euler = 0;
  for (int p = -1; p <= top; ++p) {
    const auto i = static_cast<std::size_t>(p + 1);
    const std::size_t next = p == top ? 0 : h.boundary_ranks[i + 1];
    if (h.boundary_ranks[i] + next > h.chain_ranks[i]) throw ConsistencyError("rank exceeds chain dimension");
    h.reduced_betti.push_back(h.chain_ranks[i] - h.boundary_ranks[i] - next);
    const long sign = (p % 2 == 0) ? 1 : -1;
    chain_euler += sign * static_cast<long>(h.chain_ranks[i]);
    betti_euler += sign * static_cast<long>(h.reduced_betti.back());
  }
  if (chain_euler != betti_euler) throw ConsistencyError("Euler characteristic audit failed");
  h.euler_reduced = betti_euler;
  return h;
}

/// Builds the catalog, link and chain complex for (g, n) and returns exact
/// reduced Betti numbers. Aborts with ResourceLimitError once the catalog
/// outgrows opts.max_generators.
inline HomologyProfile reduced_homology(int g, int n, const HomologyOptions& opts = {}) {
  require_stable_type(g, n);
  auto catalog = enumerate_types(g, n, {opts.threads, opts.max_generators});
  auto link = link_cells(build_poset(std::move(catalog), opts.threads), opts.threads);
  auto cc = build_chain_complex(link, opts.threads);
  cc.check_boundary_squared();
  return homology_of(cc, g, n);
}

/// Gr^W_{2d} H^k(M_{g,n}; Q) with d = 3g-3+n, read off as the reduced Betti
/// number of the link in degree 2d-k-1. Keys cover every k for which that
/// degree lies in [-1, 3g-4+n].
inline std::map<int, std::size_t> top_weight_cohomology(const HomologyProfile& h) {
  const int d = 3 * h.g - 3 + h.n;
  std::map<int, std::size_t> out;
  for (int p = h.min_degree; p <= h.max_degree(); ++p) out[2 * d - p - 1] = h.betti(p);
  return out;
}

inline std::map<int, std::size_t> top_weight_cohomology(int g, int n, const HomologyOptions& opts = {}) {
  return top_weight_cohomology(reduced_homology(g, n, opts));
}

/// Reduced Euler characteristic, from chain ranks and from Betti numbers;
/// the two must agree.
inline long euler_characteristic(const HomologyProfile& h) {
  long from_chains = 0, from_betti = 0;
  for (int p = h.min_degree; p <= h.max_degree(); ++p) {
    const long sign = (p % 2 == 0) ? 1 : -1;
    from_chains += sign * static_cast<long>(h.chain_rank(p));
    from_betti += sign * static_cast<long>(h.betti(p));
  }
  if (from_chains != from_betti) throw ConsistencyError("reduced Euler characteristic mismatch");
  return from_betti;
}

inline long euler_characteristic(int g, int n, const HomologyOptions& opts = {}) {
  return euler_characteristic(reduced_homology(g, n, opts));
}

}  // namespace tropmod
