#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tropmod/automorphism.hpp"
#include "tropmod/enumeration.hpp"

namespace tropmod {

/// Quotient cone R_{>=0}^{E(G)} / Aut(G, m, w) for one combinatorial type.
struct Cone {
  std::size_t type = 0;  // index into the catalog
  int dimension = 0;     // |E(G)|
  EdgeAutomorphismGroup edge_group;
};

/// child is obtained from parent by contracting the edges in `witness`.
/// For single-edge covers, `edge_map[j]` sends the j-th surviving parent edge
/// (parent order, witness skipped) to its position in the child's canonical
/// edge order.
struct PosetRelation {
  std::size_t parent = 0;
  std::size_t child = 0;
  std::vector<int> witness;
  std::vector<int> edge_map;
};

/// Contraction order on a type catalog. Only covering relations (single
/// edge contractions) are stored, one per parent edge, so isomorphic
/// children reached through different edges appear once per edge.
class FacePoset {
 public:
  FacePoset(TypeCatalog catalog, std::vector<PosetRelation> covers)
      : catalog_(std::move(catalog)), covers_(std::move(covers)) {
    by_parent_.assign(catalog_.size(), {});
    is_child_.assign(catalog_.size(), false);
    for (std::size_t r = 0; r < covers_.size(); ++r) {
      by_parent_[covers_[r].parent].push_back(r);
      is_child_[covers_[r].child] = true;
    }
  }

  const TypeCatalog& catalog() const noexcept { return catalog_; }
  const std::vector<PosetRelation>& covers() const noexcept { return covers_; }

  /// Indices into covers() for the single-edge contractions of `parent`, in
  /// edge order.
  const std::vector<std::size_t>& covers_of(std::size_t parent) const { return by_parent_.at(parent); }

  /// The cone point sits first in catalog order.
  std::size_t minimum() const noexcept { return 0; }

  /// Types that are not a contraction of anything.
  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < catalog_.size(); ++i)
      if (!is_child_[i]) out.push_back(i);
    return out;
  }

  /// Every (parent, child, witness) with witness a nonempty edge subset.
  /// Exponential in edge count; intended for small catalogs.
  std::vector<PosetRelation> all_relations() const {
    std::vector<PosetRelation> out;
    for (std::size_t p = 0; p < catalog_.size(); ++p) {
      const auto& g = catalog_.type(p);
      const int ne = g.num_edges();
      for (unsigned mask = 1; mask < (1u << ne); ++mask) {
        WeightedMarkedGraph h = g;
        std::vector<int> witness;
        for (int e = ne - 1; e >= 0; --e)
          if (mask >> e & 1u) {
            h = contract_edge(h, e);
            witness.push_back(e);
          }
        std::reverse(witness.begin(), witness.end());
        auto child = catalog_.find(h);
        if (!child) throw ConsistencyError("contraction left the catalog");
        out.push_back({p, *child, std::move(witness), {}});
      }
    }
    return out;
  }

  /// a <= b in the contraction order (a is a contraction of b, or equal).
  bool leq(std::size_t a, std::size_t b) const {
    if (a == b) return true;
    std::vector<char> seen(catalog_.size(), 0);
    std::vector<std::size_t> stack{b};
    seen[b] = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto r : by_parent_[x]) {
        auto c = covers_[r].child;
        if (c == a) return true;
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
      }
    }
    return false;
  }

 private:
  TypeCatalog catalog_;
  std::vector<PosetRelation> covers_;
  std::vector<std::vector<std::size_t>> by_parent_;
  std::vector<bool> is_child_;
};

inline FacePoset build_poset(TypeCatalog catalog, unsigned threads = 1) {
  std::vector<std::vector<PosetRelation>> per_type(catalog.size());
  parallel_for(catalog.size(), threads, [&](std::size_t p) {
    const auto& g = catalog.type(p);
    for (int e = 0; e < g.num_edges(); ++e) {
      auto cert = canonical_form(contract_edge(g, e));
      auto child = catalog.find(cert.encoding);
      if (!child) throw ConsistencyError("contraction of a catalog type is missing from the catalog");
      per_type[p].push_back({p, *child, {e}, std::move(cert.edge_map)});
    }
  });
  std::vector<PosetRelation> covers;
  for (auto& v : per_type)
    for (auto& r : v) covers.push_back(std::move(r));
  return FacePoset(std::move(catalog), std::move(covers));
}

inline FacePoset build_poset(int g, int n, const EnumerationOptions& opts = {}) {
  return build_poset(enumerate_types(g, n, opts), opts.threads);
}

/// A cell of the link: a type with at least one edge, shifted down one
/// dimension.
struct LinkCell {
  std::size_t type = 0;
  int dimension = 0;  // edges - 1
  Cone cone;
  /// faces[i] is the cell reached by contracting edge i; empty when the
  /// contraction lands on the cone point (only for 0-cells).
  std::vector<std::optional<std::size_t>> faces;
};

/// Link of the moduli space at the cone point: one cell per type with
/// >= 1 edge, in catalog order. Symmetries are carried by each cell's edge
/// group instead of a geometric self-gluing.
class LinkComplex {
 public:
  LinkComplex(FacePoset poset, std::vector<LinkCell> cells)
      : poset_(std::move(poset)), cells_(std::move(cells)) {
    cell_of_type_.assign(poset_.catalog().size(), std::nullopt);
    for (std::size_t c = 0; c < cells_.size(); ++c) cell_of_type_[cells_[c].type] = c;
  }

  const FacePoset& poset() const noexcept { return poset_; }
  const TypeCatalog& catalog() const noexcept { return poset_.catalog(); }
  const std::vector<LinkCell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  std::optional<std::size_t> cell_of_type(std::size_t type) const { return cell_of_type_.at(type); }

  /// 3g - 4 + n.
  int dimension() const noexcept { return catalog().max_edges() - 1; }

 private:
  FacePoset poset_;
  std::vector<LinkCell> cells_;
  std::vector<std::optional<std::size_t>> cell_of_type_;
};

inline LinkComplex link_cells(FacePoset poset, unsigned threads = 1) {
  const auto& cat = poset.catalog();
  std::vector<std::size_t> cell_types;
  std::vector<std::optional<std::size_t>> cell_index(cat.size());
  for (std::size_t t = 0; t < cat.size(); ++t)
    if (cat.type(t).num_edges() >= 1) {
      cell_index[t] = cell_types.size();
      cell_types.push_back(t);
    }
  std::vector<LinkCell> cells(cell_types.size());
  parallel_for(cell_types.size(), threads, [&](std::size_t c) {
    const std::size_t t = cell_types[c];
    LinkCell& cell = cells[c];
    cell.type = t;
    cell.dimension = cat.type(t).num_edges() - 1;
    cell.cone = {t, cat.type(t).num_edges(), automorphisms(cat.type(t))};
    for (auto r : poset.covers_of(t)) cell.faces.push_back(cell_index[poset.covers()[r].child]);
  });
  return LinkComplex(std::move(poset), std::move(cells));
}

inline LinkComplex link_cells(int g, int n, const EnumerationOptions& opts = {}) {
  return link_cells(build_poset(g, n, opts), opts.threads);
}

/// Checks every contraction-maximal type has 3g-3+n edges and returns the
/// link dimension 3g-4+n.
inline int complex_dimension(const FacePoset& poset) {
  const auto& cat = poset.catalog();
  for (auto m : poset.maximal()) {
    if (cat.type(m).num_edges() != cat.max_edges()) {
      throw ConsistencyError("purity violated: maximal type " + to_json(cat.type(m)).dump() + " has " +
                             std::to_string(cat.type(m).num_edges()) + " edges, expected " +
                             std::to_string(cat.max_edges()));
    }
  }
  return cat.max_edges() - 1;
}

inline int complex_dimension(int g, int n, const EnumerationOptions& opts = {}) {
  return complex_dimension(build_poset(g, n, opts));
}

/// Hasse diagram of the face poset; parallel covers are drawn once with a
/// multiplicity label.
inline std::string hasse_dot(const FacePoset& poset) {
  const auto& cat = poset.catalog();
  std::ostringstream os;
  os << "digraph poset_" << cat.genus() << "_" << cat.markings() << " {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t t = 0; t < cat.size(); ++t) {
    const auto& g = cat.type(t);
    os << "  t" << t << " [label=\"" << t << "\\nE=" << g.num_edges() << " V=" << g.num_vertices() << "\"];\n";
  }
  std::map<std::pair<std::size_t, std::size_t>, int> multiplicity;
  for (const auto& r : poset.covers()) ++multiplicity[{r.child, r.parent}];
  for (const auto& [edge, count] : multiplicity) {
    os << "  t" << edge.first << " -> t" << edge.second;
    if (count > 1) os << " [label=\"" << count << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tropmod
