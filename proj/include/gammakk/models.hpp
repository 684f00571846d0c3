#pragma once

// Independent models: Coxeter complexes of types A and B as order complexes,
// the polygon-diagonal associahedron, tabulated exceptional γ-vectors, an
// exhaustive enumerator of small flag 2-spheres and a catalog of flag spheres.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "gammakk/complex.hpp"
#include "gammakk/errors.hpp"
#include "gammakk/homology.hpp"
#include "gammakk/permstats.hpp"
#include "gammakk/polynomial.hpp"

namespace gammakk {

/// A: order complex of the proper nonempty subsets of [n] (type A_{n-1}).
/// B: order complex of the nonempty faces of the boundary of the
/// n-cross-polytope (type B_n).
inline Complex coxeter_complex(CoxeterType type, int n) {
  if (type == CoxeterType::A) {
    detail::require_n(n, 1, 6, "coxeter_complex A");
    std::vector<unsigned> sets;
    for (unsigned m = 1; m + 1 < (1U << n); ++m) sets.push_back(m);
    auto chain = [](unsigned a, unsigned b) { return (a & b) == a || (a & b) == b; };
    return flag_complex(std::move(sets), chain).complex;
  }
  if (type == CoxeterType::B) {
    detail::require_n(n, 1, 4, "coxeter_complex B");
    // A face picks, for each coordinate, nothing, +e_i or -e_i.
    std::vector<std::pair<unsigned, unsigned>> faces;  // (support, negative part)
    for (unsigned supp = 1; supp < (1U << n); ++supp)
      for (unsigned neg = 0; neg < (1U << n); ++neg)
        if ((neg & ~supp) == 0) faces.emplace_back(supp, neg);
    auto below = [](const std::pair<unsigned, unsigned>& a, const std::pair<unsigned, unsigned>& b) {
      return (a.first & b.first) == a.first && (b.second & a.first) == a.second;
    };
    auto chain = [&](const auto& a, const auto& b) { return below(a, b) || below(b, a); };
    return flag_complex(std::move(faces), chain).complex;
  }
  throw DomainError("coxeter_complex: only types A and B have a model");
}

/// Diagonals of a convex (n+2)-gon, faces = pairwise noncrossing sets.
inline Complex associahedron_complex(int n) {
  detail::require_n(n, 1, 8, "associahedron_complex");
  const int m = n + 2;
  std::vector<std::pair<int, int>> diagonals;
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j)
      if (!(i == 0 && j == m - 1)) diagonals.emplace_back(i, j);
  auto compatible = [](const std::pair<int, int>& p, const std::pair<int, int>& q) {
    auto [a, b] = p;
    auto [c, d] = q;
    return !((a < c && c < b && b < d) || (c < a && a < d && d < b));
  };
  return flag_complex(std::move(diagonals), compatible).complex;
}

/// Narayana row n: N(n,k) = C(n,k) C(n,k-1) / n for k = 1..n.
inline IntVector narayana(int n) {
  IntVector row;
  for (int k = 1; k <= n; ++k) {
    std::int64_t c1 = 1, c2 = 1;
    for (int i = 0; i < k; ++i) c1 = c1 * (n - i) / (i + 1);
    for (int i = 0; i < k - 1; ++i) c2 = c2 * (n - i) / (i + 1);
    row.push_back(c1 * c2 / n);
  }
  return row;
}

/// Tabulated γ-vectors of the exceptional Coxeter complexes; "I2(m)" with
/// m ≥ 3 gives (1, 2m - 4).
inline IntVector exceptional_gamma(const std::string& group) {
  static const std::map<std::string, IntVector> table = {
      {"E6", {1, 1266, 7104, 3104}},
      {"E7", {1, 17628, 221808, 282176}},
      {"E8", {1, 881744, 23045856, 63613184, 17111296}},
      {"F4", {1, 232, 208}},
      {"G2", {1, 8}},
      {"H3", {1, 56}},
      {"H4", {1, 2632, 3856}},
  };
  if (auto it = table.find(group); it != table.end()) return it->second;
  static const std::regex dihedral(R"(I2\((\d{1,9})\))");
  std::smatch m;
  if (std::regex_match(group, m, dihedral)) {
    const std::int64_t k = std::stoll(m[1].str());
    if (k < 3) throw DomainError("exceptional_gamma: I2(m) needs m >= 3");
    return {1, 2 * k - 4};
  }
  throw DomainError("exceptional_gamma: unknown group \"" + group + "\"");
}

inline std::vector<std::string> exceptional_groups() { return {"E6", "E7", "E8", "F4", "G2", "H3", "H4"}; }

// ---------------------------------------------------------------------------
// Flag 2-spheres on few vertices

namespace detail {

/// Adjacency rows as bitmasks.
using AdjRows = std::vector<unsigned>;

inline std::uint64_t adjacency_code(const AdjRows& adj, const std::vector<int>& perm) {
  // Upper triangle of the relabelled matrix, row-major.
  const int n = static_cast<int>(adj.size());
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int a = inv[static_cast<std::size_t>(i)], b = inv[static_cast<std::size_t>(j)];
      code = code << 1 | (adj[static_cast<std::size_t>(a)] >> b & 1U);
    }
  return code;
}

/// Lexicographically minimal adjacency code over permutations that place
/// vertices in order of nondecreasing degree; perm[v] is v's new label.
inline std::pair<std::uint64_t, std::vector<int>> canonical_form(const AdjRows& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return std::popcount(adj[static_cast<std::size_t>(v)]); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) < deg(b) || (deg(a) == deg(b) && a < b); });
  // Permute within equal-degree classes only.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[static_cast<std::size_t>(j)]) == deg(order[static_cast<std::size_t>(i)])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_perm;
  std::vector<int> cur = order;
  std::vector<int> perm(static_cast<std::size_t>(n));
  auto visit = [&](auto&& self, std::size_t cls) -> void {
    if (cls == classes.size()) {
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)])] = i;
      const std::uint64_t code = adjacency_code(adj, perm);
      if (code < best) {
        best = code;
        best_perm = perm;
      }
      return;
    }
    auto [lo, hi] = classes[cls];
    std::sort(cur.begin() + lo, cur.begin() + hi);
    do self(self, cls + 1);
    while (std::next_permutation(cur.begin() + lo, cur.begin() + hi));
  };
  visit(visit, 0);
  return {best, best_perm};
}

}  // namespace detail

/// Every flag homology 2-sphere on at most `max_vertices` vertices, up to
/// isomorphism, ordered by vertex count then canonical code.
inline std::vector<Complex> enumerate_flag_2spheres(int max_vertices) {
  detail::require_n(max_vertices, 1, 8, "enumerate_flag_2spheres");
  std::vector<Complex> out;
  for (int n = 4; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const int m = static_cast<int>(pairs.size());
    const int want = 3 * n - 6;
    if (want > m) continue;
    std::vector<std::uint64_t> incident(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < m; ++e) {
      incident[static_cast<std::size_t>(pairs[static_cast<std::size_t>(e)].first)] |= std::uint64_t{1} << e;
      incident[static_cast<std::size_t>(pairs[static_cast<std::size_t>(e)].second)] |= std::uint64_t{1} << e;
    }
    std::map<std::uint64_t, Complex> found;
    // Gosper's hack over edge subsets of size 3n - 6.
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t mask = (std::uint64_t{1} << want) - 1; mask < limit;) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) ok = std::popcount(mask & incident[static_cast<std::size_t>(v)]) >= 4;
      if (ok) {
        detail::AdjRows adj(static_cast<std::size_t>(n), 0);
        for (int e = 0; e < m; ++e)
          if (mask >> e & 1U) {
            auto [a, b] = pairs[static_cast<std::size_t>(e)];
            adj[static_cast<std::size_t>(a)] |= 1U << b;
            adj[static_cast<std::size_t>(b)] |= 1U << a;
          }
        // Each edge link is two non-adjacent vertices.
        for (int e = 0; e < m && ok; ++e) {
          if (!(mask >> e & 1U)) continue;
          auto [a, b] = pairs[static_cast<std::size_t>(e)];
          unsigned common = adj[static_cast<std::size_t>(a)] & adj[static_cast<std::size_t>(b)];
          if (std::popcount(common) != 2) {
            ok = false;
            break;
          }
          int x = std::countr_zero(common);
          unsigned rest = common & (common - 1);
          int y = std::countr_zero(rest);
          ok = !(adj[static_cast<std::size_t>(x)] >> y & 1U);
        }
        if (ok) {
          unsigned seen = 1, frontier = 1;
          while (frontier) {
            unsigned next = 0;
            for (int v = 0; v < n; ++v)
              if (frontier >> v & 1U) next |= adj[static_cast<std::size_t>(v)];
            frontier = next & ~seen;
            seen |= next;
          }
          ok = seen == (1U << n) - 1;
        }
        if (ok) {
          auto [code, perm] = detail::canonical_form(adj);
          if (!found.count(code)) {
            Graph g;
            for (int v = 0; v < n; ++v) g.vertices.push_back(v);
            for (int a = 0; a < n; ++a)
              for (int b = a + 1; b < n; ++b)
                if (adj[static_cast<std::size_t>(a)] >> b & 1U)
                  g.edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
            Complex c = clique_complex(g);
            if (c.dim() == 2 && is_homology_sphere(c)) found.emplace(code, std::move(c));
          }
        }
      }
      const std::uint64_t t = mask | (mask - 1);
      mask = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(mask) + 1));
    }
    for (auto& [code, c] : found) out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

struct NamedComplex {
  std::string name;
  Complex complex;
};

/// Flag spheres built from polygons, suspensions, joins, octahedral spheres,
/// the Coxeter and associahedron models and the enumerated 2-spheres, each
/// on at most `max_vertices` vertices.
inline std::vector<NamedComplex> sphere_catalog(int max_vertices = 12) {
  std::vector<NamedComplex> out;
  auto add = [&](std::string name, Complex c) {
    if (static_cast<int>(c.vertices().size()) <= max_vertices) out.push_back({std::move(name), std::move(c)});
  };
  for (int n = 4; n <= max_vertices; ++n) add("polygon(" + std::to_string(n) + ")", polygon(n));
  for (int n = 4; n + 2 <= max_vertices; ++n)
    add("susp(polygon(" + std::to_string(n) + "))", suspension(polygon(n)).complex);
  for (int n = 4; n + 4 <= max_vertices; ++n)
    add("susp(susp(polygon(" + std::to_string(n) + ")))", suspension(suspension(polygon(n)).complex).complex);
  for (int a = 4; a <= max_vertices; ++a)
    for (int b = a; a + b <= max_vertices; ++b)
      add("polygon(" + std::to_string(a) + ")*polygon(" + std::to_string(b) + ")",
          join(polygon(a), polygon(b)).complex);
  for (int d = 2; 2 * d <= max_vertices && d <= 5; ++d)
    add("octahedral(" + std::to_string(d) + ")", octahedral_sphere(d));
  for (int n = 3; n <= 4; ++n) add("coxeter(A," + std::to_string(n) + ")", coxeter_complex(CoxeterType::A, n));
  add("coxeter(B,2)", coxeter_complex(CoxeterType::B, 2));
  for (int n = 3; n <= 5; ++n) add("associahedron(" + std::to_string(n) + ")", associahedron_complex(n));
  const auto small = enumerate_flag_2spheres(std::min(max_vertices, 8));
  for (std::size_t i = 0; i < small.size(); ++i) {
    const auto nv = std::to_string(small[i].vertices().size());
    add("sphere2(" + nv + "v#" + std::to_string(i) + ")", small[i]);
    add("susp(sphere2(" + nv + "v#" + std::to_string(i) + "))", suspension(small[i]).complex);
  }
  return out;
}

}  // namespace gammakk
