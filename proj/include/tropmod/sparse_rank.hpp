#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tropmod/rational.hpp"

namespace tropmod {

/// Column-major sparse integer matrix. Each column is a list of
/// (row, coefficient) pairs sorted by row with no zero coefficients.
struct SparseIntMatrix {
  using Entry = std::pair<int, std::int64_t>;
  using Column = std::vector<Entry>;

  int rows = 0;
  int cols = 0;
  std::vector<Column> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

  std::size_t nonzeros() const {
    std::size_t nz = 0;
    for (const auto& c : columns) nz += c.size();
    return nz;
  }
};

/// Sorts each column, merges duplicate rows and drops zeros.
inline void normalize_columns(SparseIntMatrix& m) {
  for (auto& col : m.columns) {
    std::sort(col.begin(), col.end());
    SparseIntMatrix::Column merged;
    for (const auto& [r, x] : col) {
      if (!merged.empty() && merged.back().first == r)
        merged.back().second += x;
      else
        merged.push_back({r, x});
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    col = std::move(merged);
  }
}

/// A * B for compatible sparse matrices; used for the d^2 = 0 audit.
inline SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows) throw ConsistencyError("matrix dimension mismatch");
  SparseIntMatrix out(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) {
    std::unordered_map<int, std::int64_t> acc;
    for (const auto& [k, x] : b.columns[j])
      for (const auto& [i, y] : a.columns[k]) acc[i] += x * y;
    for (const auto& [i, v] : acc)
      if (v != 0) out.columns[j].push_back({i, v});
    std::sort(out.columns[j].begin(), out.columns[j].end());
  }
  return out;
}

namespace detail {

using BigVec = std::vector<std::pair<int, BigInt>>;

/// v <- a*v - b*p where a, b are chosen to cancel the common leading row.
/// Afterwards v is divided by the gcd of its entries.
inline void eliminate_lead(BigVec& v, const BigVec& p) {
  const BigInt& pv = p.back().second;
  const BigInt& vv = v.back().second;
  BigInt a, b;
  if (pv == 1 || pv == -1) {
    a = 1;
    b = vv * pv;
  } else {
    BigInt gcd_ab;
    mpz_gcd(gcd_ab.get_mpz_t(), pv.get_mpz_t(), vv.get_mpz_t());
    a = pv / gcd_ab;
    b = vv / gcd_ab;
  }
  BigVec out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
      out.push_back({v[i].first, a * v[i].second});
      ++i;
    } else if (i == v.size() || p[j].first < v[i].first) {
      out.push_back({p[j].first, -b * p[j].second});
      ++j;
    } else {
      BigInt x = a * v[i].second - b * p[j].second;
      if (x != 0) out.push_back({v[i].first, std::move(x)});
      ++i;
      ++j;
    }
  }
  BigInt content = 0;
  for (const auto& e : out) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.second.get_mpz_t());
    if (content == 1) break;
  }
  if (content > 1)
    for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
  v = std::move(out);
}

}  // namespace detail

/// Exact rank over Q by fraction-free column reduction on the lowest
/// nonzero row (the standard boundary-matrix reduction order). Entries are
/// arbitrary precision integers throughout.
inline std::size_t rank_over_q(const SparseIntMatrix& m) {
  std::unordered_map<int, detail::BigVec> pivots;
  pivots.reserve(static_cast<std::size_t>(m.cols));
  std::size_t rank = 0;
  for (const auto& col : m.columns) {
    detail::BigVec v;
    v.reserve(col.size());
    for (const auto& [r, x] : col) v.push_back({r, BigInt(static_cast<long>(x))});
    while (!v.empty()) {
      auto it = pivots.find(v.back().first);
      if (it == pivots.end()) break;
      detail::eliminate_lead(v, it->second);
    }
    if (!v.empty()) {
      const int lead = v.back().first;
      pivots.emplace(lead, std::move(v));
      ++rank;
    }
  }
  return rank;
}

/// Rank over F_p. Never larger than the rank over Q; used as an
/// independent cross-check.
inline std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p = 2147483629u) {
  using Vec = std::vector<std::pair<int, std::uint64_t>>;
  auto mod = [p](std::int64_t x) {
    auto r = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  };
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  std::unordered_map<int, Vec> pivots;  // lead coefficient normalised to 1
  std::size_t rank = 0;
  for (const auto& col : m.columns) {
    Vec v;
    for (const auto& [r, x] : col)
      if (auto y = mod(x)) v.push_back({r, y});
    while (!v.empty()) {
      auto it = pivots.find(v.back().first);
      if (it == pivots.end()) break;
      const auto& pv = it->second;
      const std::uint64_t factor = v.back().second;
      Vec out;
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < pv.size()) {
        if (j == pv.size() || (i < v.size() && v[i].first < pv[j].first)) {
          out.push_back(v[i++]);
        } else if (i == v.size() || pv[j].first < v[i].first) {
          out.push_back({pv[j].first, (p - factor * pv[j].second % p) % p});
          ++j;
        } else {
          auto x = (v[i].second + p - factor * pv[j].second % p) % p;
          if (x) out.push_back({v[i].first, x});
          ++i;
          ++j;
        }
      }
      v = std::move(out);
    }
    if (!v.empty()) {
      auto inv = inverse(v.back().second);
      for (auto& e : v) e.second = e.second * inv % p;
      pivots.emplace(v.back().first, std::move(v));
      ++rank;
    }
  }
  return rank;
}

}  // namespace tropmod
