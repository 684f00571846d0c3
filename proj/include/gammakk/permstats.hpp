#pragma once

// Descents, peaks, the families Pk_n, Pk_n(312) and P_n, and Eulerian
// descent polynomials of types A, B and D.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gammakk/errors.hpp"
#include "gammakk/polynomial.hpp"

namespace gammakk {

/// One-line word w_1..w_n of a permutation of [n]; positions are 1-based in
/// every statistic below.
using Perm = std::vector<int>;

inline bool is_permutation_of_n(const Perm& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

inline Perm identity_perm(int n) {
  Perm w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline std::string render_perm(const Perm& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && w.size() > 9) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

/// {i ∈ [n-1] : w_i > w_{i+1}}
inline std::vector<int> descent_set(const Perm& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i + 1));
  return d;
}

inline int des(const Perm& w) { return static_cast<int>(descent_set(w).size()); }

/// {i ∈ [2, n-1] : w_{i-1} < w_i > w_{i+1}}
inline std::vector<int> peak_set(const Perm& w) {
  std::vector<int> p;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) p.push_back(static_cast<int>(i + 1));
  return p;
}

/// Peaks of the word 0w, i.e. positions in [1, n-1].
inline std::vector<int> peak_set_0(const Perm& w) {
  std::vector<int> p;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int before = i == 0 ? 0 : w[i - 1];
    if (before < w[i] && w[i] > w[i + 1]) p.push_back(static_cast<int>(i + 1));
  }
  return p;
}

/// No double descent w_{i-1} > w_i > w_{i+1} and no final descent.
inline bool is_pk(const Perm& w) {
  const std::size_t n = w.size();
  if (n >= 2 && w[n - 2] > w[n - 1]) return false;
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (w[i - 1] > w[i] && w[i] > w[i + 1]) return false;
  return true;
}

/// No i < j < k with w_j < w_k < w_i.
inline bool is_312_avoiding(const Perm& w) {
  const std::size_t n = w.size();
  // For each j, compare the largest earlier letter with later letters.
  for (std::size_t j = 1; j + 1 < n; ++j) {
    int big = *std::max_element(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
    if (big < w[j]) continue;
    for (std::size_t k = j + 1; k < n; ++k)
      if (w[j] < w[k] && w[k] < big) return false;
  }
  return true;
}

namespace detail {

inline void require_n(int n, int lo, int hi, const char* what) {
  if (n < lo) throw DomainError(std::string(what) + ": n must be at least " + std::to_string(lo));
  if (n > hi)
    throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the budget " +
                         std::to_string(hi));
}

template <class Pred>
std::vector<Perm> permutations_where(int n, Pred&& keep) {
  std::vector<Perm> out;
  Perm w = identity_perm(n);
  do {
    if (keep(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace detail

/// Pk_n in lexicographic order.
inline std::vector<Perm> enumerate_pk(int n) {
  detail::require_n(n, 1, 9, "enumerate_pk");
  return detail::permutations_where(n, [](const Perm& w) { return is_pk(w); });
}

/// Pk_n(312) in lexicographic order.
inline std::vector<Perm> enumerate_pk312(int n) {
  detail::require_n(n, 1, 10, "enumerate_pk312");
  return detail::permutations_where(n, [](const Perm& w) { return is_pk(w) && is_312_avoiding(w); });
}

/// Counts by descent number, trailing zeros removed.
inline IntVector count_by_des(const std::vector<Perm>& ws) {
  IntVector c{0};
  for (const Perm& w : ws) {
    auto d = static_cast<std::size_t>(des(w));
    if (c.size() <= d) c.resize(d + 1, 0);
    ++c[d];
  }
  return trimmed(c);
}

/// Σ_w t^{stat(w)} (1+t)^{n-2 stat(w)} for total degree `degree`.
inline Polynomial gamma_expansion(const IntVector& counts, int degree) {
  Polynomial h(static_cast<std::size_t>(std::max(degree, 0) + 1), 0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    const int rest = degree - 2 * static_cast<int>(i);
    if (rest < 0) throw DomainError("gamma_expansion: statistic exceeds half the degree");
    h = poly_add(h, poly_scale(poly_shift(one_plus_t_pow(rest), i), counts[i]));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Signed permutations and Eulerian polynomials

/// Word of nonzero values whose absolute values form a permutation of [n].
struct SignedPerm {
  std::vector<int> w;

  int negatives() const {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
  }
  bool in_type_d() const { return negatives() % 2 == 0; }
};

/// Descents at i ∈ {0..n-1} with w(0) = 0.
inline int des_b(const SignedPerm& s) {
  int d = 0, prev = 0;
  for (int x : s.w) {
    d += prev > x;
    prev = x;
  }
  return d;
}

/// Descent at 0 iff w(1) + w(2) < 0; at i ≥ 1 iff w(i) > w(i+1).
inline int des_d(const SignedPerm& s) {
  int d = s.w.size() >= 2 && s.w[0] + s.w[1] < 0;
  for (std::size_t i = 0; i + 1 < s.w.size(); ++i) d += s.w[i] > s.w[i + 1];
  return d;
}

enum class CoxeterType { A, B, D };

namespace detail {

template <class F>
void for_each_signed(int n, F&& f) {
  Perm w = identity_perm(n);
  SignedPerm s{std::vector<int>(static_cast<std::size_t>(n))};
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      for (int i = 0; i < n; ++i) s.w[static_cast<std::size_t>(i)] = (mask >> i & 1U) ? -w[static_cast<std::size_t>(i)] : w[static_cast<std::size_t>(i)];
      f(s);
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace detail

/// A: Σ_{w∈S_n} t^{des(w)} (degree n-1). B, D: signed descent polynomials of
/// degree n over the hyperoctahedral group and its even-sign subgroup.
inline Polynomial eulerian(CoxeterType type, int n) {
  switch (type) {
    case CoxeterType::A: {
      detail::require_n(n, 1, 8, "eulerian A");
      Polynomial h(static_cast<std::size_t>(n), 0);
      Perm w = identity_perm(n);
      do ++h[static_cast<std::size_t>(des(w))];
      while (std::next_permutation(w.begin(), w.end()));
      return h;
    }
    case CoxeterType::B: {
      detail::require_n(n, 1, 7, "eulerian B");
      Polynomial h(static_cast<std::size_t>(n + 1), 0);
      detail::for_each_signed(n, [&](const SignedPerm& s) { ++h[static_cast<std::size_t>(des_b(s))]; });
      return h;
    }
    case CoxeterType::D: {
      detail::require_n(n, 2, 7, "eulerian D");
      Polynomial h(static_cast<std::size_t>(n + 1), 0);
      detail::for_each_signed(n, [&](const SignedPerm& s) {
        if (s.in_type_d()) ++h[static_cast<std::size_t>(des_d(s))];
      });
      return h;
    }
  }
  throw DomainError("eulerian: unknown type");
}

// ---------------------------------------------------------------------------
// 312-avoiding peak permutations

/// Pairs (w_{i+1}, w_i) over the descents i of w ∈ Pk_n(312), as (i_s, j_s).
inline std::vector<std::pair<int, int>> descent_pairs(const Perm& w) {
  if (!is_permutation_of_n(w) || !is_pk(w) || !is_312_avoiding(w))
    throw PreconditionError("descent_pairs: " + render_perm(w) + " is not in Pk_n(312)");
  std::vector<std::pair<int, int>> out;
  for (int i : descent_set(w))
    out.emplace_back(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i - 1)]);
  return out;
}

// ---------------------------------------------------------------------------
// Pair tableaux

/// (L, R): disjoint, equal-size, each sorted ascending. Row s is (L[s], R[s]).
struct PairTableau {
  std::vector<int> L;
  std::vector<int> R;

  int rho() const { return static_cast<int>(L.size()); }
  friend bool operator==(const PairTableau&, const PairTableau&) = default;
  friend auto operator<=>(const PairTableau&, const PairTableau&) = default;
};

/// All of P_n, ordered by ρ then (L, R).
inline std::vector<PairTableau> enumerate_pairs(int n) {
  detail::require_n(n, 0, 9, "enumerate_pairs");
  std::vector<PairTableau> out;
  auto members = [n](unsigned m) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1U) s.push_back(i + 1);
    return s;
  };
  for (unsigned l = 0; l < (1U << n); ++l)
    for (unsigned r = 0; r < (1U << n); ++r)
      if ((l & r) == 0 && std::popcount(l) == std::popcount(r)) out.push_back({members(l), members(r)});
  std::sort(out.begin(), out.end(), [](const PairTableau& a, const PairTableau& b) {
    if (a.rho() != b.rho()) return a.rho() < b.rho();
    return a < b;
  });
  return out;
}

}  // namespace gammakk
