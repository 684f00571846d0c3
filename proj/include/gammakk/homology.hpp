#pragma once

// Reduced Betti numbers over Q and the homology-sphere predicate.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gammakk/complex.hpp"

namespace gammakk {

/// Reduced Betti numbers in degrees -1..dim.
using BettiVector = std::vector<std::int64_t>;

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
  return a * b;
}
inline boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
  return a - b;
}

inline std::int64_t abs_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline boost::multiprecision::cpp_int abs_gcd(const boost::multiprecision::cpp_int& a,
                                              const boost::multiprecision::cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Sparse column: (row, value) sorted by row, no zero values.
template <class Z>
using SparseColumn = std::vector<std::pair<std::size_t, Z>>;

/// Rank over Q by low-pivot column reduction. Each column is kept primitive
/// (content divided out) so entries stay small on boundary matrices.
template <class Z>
std::size_t rational_rank(std::vector<SparseColumn<Z>> cols) {
  std::map<std::size_t, std::size_t> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      auto it = pivot_of_row.find(col.back().first);
      if (it == pivot_of_row.end()) break;
      const auto& piv = cols[it->second];
      const Z a = col.back().second, b = piv.back().second;
      SparseColumn<Z> merged;
      merged.reserve(col.size() + piv.size());
      std::size_t p = 0, q = 0;
      while (p < col.size() || q < piv.size()) {
        if (q == piv.size() || (p < col.size() && col[p].first < piv[q].first)) {
          merged.emplace_back(col[p].first, checked_mul(col[p].second, b));
          ++p;
        } else if (p == col.size() || piv[q].first < col[p].first) {
          merged.emplace_back(piv[q].first, checked_sub(Z(0), checked_mul(piv[q].second, a)));
          ++q;
        } else {
          Z v = checked_sub(checked_mul(col[p].second, b), checked_mul(piv[q].second, a));
          if (v != 0) merged.emplace_back(col[p].first, v);
          ++p;
          ++q;
        }
      }
      Z g(0);
      for (const auto& e : merged) g = abs_gcd(g, e.second);
      if (g > 1)
        for (auto& e : merged) e.second /= g;
      col = std::move(merged);
    }
    if (!col.empty()) {
      pivot_of_row[col.back().first] = j;
      ++rank;
    }
  }
  return rank;
}

/// Boundary map from faces of cardinality k to cardinality k-1 (k ≥ 1).
template <class Z>
std::vector<SparseColumn<Z>> boundary_columns(const Complex& c, std::size_t k) {
  std::vector<SparseColumn<Z>> cols;
  auto lower = c.faces_of_size(k - 1);
  Face sub;
  for (const Face& f : c.faces_of_size(k)) {
    SparseColumn<Z> col;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      sub.clear();
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != skip) sub.push_back(f[t]);
      auto row = static_cast<std::size_t>(
          std::lower_bound(lower.begin(), lower.end(), sub) - lower.begin());
      col.emplace_back(row, Z(skip % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    cols.push_back(std::move(col));
  }
  return cols;
}

inline std::size_t boundary_rank(const Complex& c, std::size_t k) {
  try {
    return rational_rank(boundary_columns<std::int64_t>(c, k));
  } catch (const Overflow&) {
    return rational_rank(boundary_columns<boost::multiprecision::cpp_int>(c, k));
  }
}

}  // namespace detail

inline BettiVector betti(const Complex& c, std::size_t budget = kDefaultFaceBudget) {
  detail::require_budget(c.num_faces() <= budget, "betti: complex exceeds the face budget");
  const auto f = c.f_vector();
  const std::size_t levels = f.size();  // cardinalities 0..dim+1
  std::vector<std::size_t> rank(levels + 1, 0);  // rank[k] = rank of ∂ on size-k faces
  for (std::size_t k = 1; k < levels; ++k) rank[k] = detail::boundary_rank(c, k);
  BettiVector b(levels);
  for (std::size_t k = 0; k < levels; ++k)
    b[k] = f[k] - static_cast<std::int64_t>(rank[k] + rank[k + 1]);
  return b;
}

/// Betti vector of a homology sphere of dimension d ≥ -1.
inline BettiVector sphere_betti(int d) {
  BettiVector b(static_cast<std::size_t>(d + 2), 0);
  b.back() = 1;
  return b;
}

/// Every link lk(F), F ∈ Δ including ∅, has the rational homology of a
/// (dim Δ − |F|)-sphere. Faces are visited by decreasing dimension.
inline bool is_homology_sphere(const Complex& c, std::size_t budget = kDefaultFaceBudget) {
  detail::require_budget(c.num_faces() <= budget,
                         "is_homology_sphere: complex exceeds the face budget");
  const int d = c.dim();
  const auto& faces = c.faces();
  for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
    const int expect = d - static_cast<int>(it->size());
    if (betti(link(c, *it)) != sphere_betti(expect)) return false;
  }
  return true;
}

}  // namespace gammakk
