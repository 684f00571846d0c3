#pragma once

// f/h/γ transforms and the Kruskal-Katona, Frankl-Füredi-Kalai and
// dimension-3/4 γ inequalities, with brute-force realizability oracles.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gammakk/complex.hpp"
#include "gammakk/errors.hpp"
#include "gammakk/polynomial.hpp"

namespace gammakk {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

inline std::int64_t to_int64(const BigInt& x, const char* what) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw DomainError(std::string(what) + ": result does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

inline IntVector strip_trailing_zeros(IntVector v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Transforms

/// h_k = Σ_{i≤k} (-1)^{k-i} C(d-i, k-i) f_i with d = |f| - 1.
inline IntVector f_to_h(const IntVector& f) {
  if (f.empty()) return {};
  const auto d = static_cast<std::int64_t>(f.size()) - 1;
  IntVector h(f.size());
  for (std::int64_t k = 0; k <= d; ++k) {
    BigInt s = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
      BigInt term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
      s += (k - i) % 2 == 0 ? term : BigInt(-term);
    }
    h[static_cast<std::size_t>(k)] = detail::to_int64(s, "f_to_h");
  }
  return h;
}

/// f_i = Σ_{k≤i} C(d-k, i-k) h_k; h is zero-padded to length d + 1.
inline IntVector h_to_f(IntVector h, int d) {
  if (d < 0) throw DomainError("h_to_f: d must be nonnegative");
  if (h.size() > static_cast<std::size_t>(d + 1)) throw DomainError("h_to_f: h longer than d + 1");
  h.resize(static_cast<std::size_t>(d + 1), 0);
  IntVector f(h.size());
  for (std::int64_t i = 0; i <= d; ++i) {
    BigInt s = 0;
    for (std::int64_t k = 0; k <= i; ++k) s += binomial(d - k, i - k) * h[static_cast<std::size_t>(k)];
    f[static_cast<std::size_t>(i)] = detail::to_int64(s, "h_to_f");
  }
  return f;
}

inline bool is_symmetric(const IntVector& h) {
  return std::equal(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(h.size() / 2), h.rbegin());
}

/// Coefficients of h in the basis t^i (1+t)^{d-2i}, d = |h| - 1.
inline IntVector h_to_gamma(const IntVector& h) {
  if (h.empty()) throw DomainError("h_to_gamma: empty h-vector");
  if (!is_symmetric(h))
    throw PreconditionError("h_to_gamma: h-vector " + to_string(h) +
                            " is not symmetric (Dehn-Sommerville h_i = h_{d-i} fails)");
  const int d = static_cast<int>(h.size()) - 1;
  std::vector<BigInt> rest(h.begin(), h.end());
  IntVector g;
  for (int i = 0; 2 * i <= d; ++i) {
    BigInt gi = rest[static_cast<std::size_t>(i)];
    g.push_back(detail::to_int64(gi, "h_to_gamma"));
    for (int j = 0; j <= d - 2 * i; ++j) rest[static_cast<std::size_t>(i + j)] -= gi * binomial(d - 2 * i, j);
  }
  return g;
}

/// Σ γ_i t^i (1+t)^{d-2i}.
inline IntVector gamma_to_h(const IntVector& g, int d) {
  if (d < 0) throw DomainError("gamma_to_h: d must be nonnegative");
  if (g.size() > static_cast<std::size_t>(d / 2 + 1))
    throw DomainError("gamma_to_h: gamma longer than floor(d/2) + 1");
  std::vector<BigInt> h(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    for (int j = 0; j <= d - 2 * i; ++j)
      h[static_cast<std::size_t>(i + j)] += binomial(d - 2 * i, j) * g[static_cast<std::size_t>(i)];
  IntVector out;
  for (const auto& x : h) out.push_back(detail::to_int64(x, "gamma_to_h"));
  return out;
}

// ---------------------------------------------------------------------------
// Kruskal-Katona

struct CascadeTerm {
  std::int64_t top;
  int level;
  friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

struct Cascade {
  int level = 1;
  /// Terms (a_s, s) with s decreasing from `level`.
  std::vector<CascadeTerm> terms;
};

namespace detail {

/// Largest x in [lo, hi] with value(x) ≤ m, assuming value is nondecreasing
/// and value(lo) ≤ m.
template <class F>
std::int64_t max_at_most(std::int64_t lo, std::int64_t hi, const BigInt& m, F&& value) {
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (value(mid) <= m)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace detail

/// Greedy expansion a = C(a_i, i) + C(a_{i-1}, i-1) + … + C(a_j, j).
inline Cascade cascade(std::int64_t a, int i) {
  if (a < 0) throw DomainError("cascade: a must be nonnegative");
  if (i < 1) throw DomainError("cascade: level must be at least 1");
  Cascade c{i, {}};
  BigInt rest = a;
  for (int s = i; s >= 1 && rest > 0; --s) {
    std::int64_t top = detail::max_at_most(s - 1, static_cast<std::int64_t>(rest) + s, rest,
                                           [&](std::int64_t x) { return binomial(x, s); });
    c.terms.push_back({top, s});
    rest -= binomial(top, s);
  }
  return c;
}

/// Minimum number of (k-1)-sets covered by m distinct k-sets.
inline std::int64_t kk_shadow_bound(std::int64_t m, int k) {
  BigInt s = 0;
  for (const auto& t : cascade(m, k).terms) s += binomial(t.top, t.level - 1);
  return detail::to_int64(s, "kk_shadow_bound");
}

/// First index i ≥ 1 with kk_shadow_bound(v_{i+1}, i+1) > v_i, or 0 when
/// v_0 ≠ 1 or some entry is negative. Empty when v passes.
inline std::optional<std::size_t> kk_first_violation(const IntVector& v) {
  if (v.empty() || v[0] != 1) return 0;
  for (auto x : v)
    if (x < 0) return 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (kk_shadow_bound(v[i + 1], static_cast<int>(i + 1)) > v[i]) return i;
  return std::nullopt;
}

inline bool kk_check(const IntVector& v) { return !kk_first_violation(v).has_value(); }

/// First v_i i-subsets of {0,1,…} in colex order for each i, if that family
/// is downward closed.
inline std::optional<Complex> kk_realize_compressed(const IntVector& v,
                                                    std::size_t budget = kDefaultFaceBudget) {
  if (v.empty() || v[0] != 1) return std::nullopt;
  std::int64_t total = 0;
  for (auto x : v) {
    if (x < 0) return std::nullopt;
    total += x;
  }
  detail::require_budget(static_cast<std::size_t>(total) <= budget,
                         "kk_realize_compressed: vector exceeds the face budget");
  FaceList faces;
  for (std::size_t k = 1; k < v.size(); ++k) {
    Face cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    for (std::int64_t c = 0; c < v[k]; ++c) {
      faces.push_back(cur);
      // Next subset in colex order.
      std::size_t j = 0;
      while (j + 1 < k && cur[j] + 1 == cur[j + 1]) ++j;
      ++cur[j];
      for (std::size_t t = 0; t < j; ++t) cur[t] = static_cast<Vertex>(t);
    }
  }
  try {
    return Complex::from_closed_faces(std::move(faces), budget);
  } catch (const MalformedInput&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Frankl-Füredi-Kalai

/// Number of s-faces of the complete q-partite complex on a vertices with
/// near-equal parts: e_s of the Turán part sizes.
inline BigInt turan_faces(int q, std::int64_t a, int s) {
  if (s < 0) return 0;
  if (q < 1) return s == 0 ? 1 : 0;
  std::vector<BigInt> e(static_cast<std::size_t>(s + 1), 0);
  e[0] = 1;
  for (int p = 0; p < q; ++p) {
    std::int64_t size = a / q + (p < a % q ? 1 : 0);
    for (int j = s; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * size;
  }
  return e[static_cast<std::size_t>(s)];
}

/// Colored cascade of m at level i with r colors: at level s the greedy top
/// uses q = r - i + s colors.
inline Cascade ffk_cascade(std::int64_t m, int i, int r) {
  if (m < 0) throw DomainError("ffk_cascade: m must be nonnegative");
  if (i < 1) throw DomainError("ffk_cascade: level must be at least 1");
  if (r < i) throw PreconditionError("ffk_cascade: fewer colors than the level");
  Cascade c{i, {}};
  BigInt rest = m;
  for (int s = i; s >= 1 && rest > 0; --s) {
    const int q = r - i + s;
    std::int64_t top = detail::max_at_most(s - 1, static_cast<std::int64_t>(rest) + s, rest,
                                           [&](std::int64_t x) { return turan_faces(q, x, s); });
    c.terms.push_back({top, s});
    rest -= turan_faces(q, top, s);
  }
  return c;
}

/// Minimum number of (i-1)-sets covered by m rainbow i-sets of an
/// r-colored complex.
inline std::int64_t ffk_shadow_bound(std::int64_t m, int i, int r) {
  Cascade c = ffk_cascade(m, i, r);
  BigInt s = 0;
  for (const auto& t : c.terms) s += turan_faces(r - i + t.level, t.top, t.level - 1);
  return detail::to_int64(s, "ffk_shadow_bound");
}

/// Largest index with a positive entry.
inline int default_colors(const IntVector& v) {
  int r = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) r = static_cast<int>(i);
  return r;
}

inline bool ffk_check(const IntVector& v, int r) {
  if (r < default_colors(v))
    throw PreconditionError("ffk_check: " + std::to_string(r) +
                            " colors cannot carry faces of cardinality " +
                            std::to_string(default_colors(v)));
  if (v.empty() || v[0] != 1) return false;
  for (auto x : v)
    if (x < 0) return false;
  const IntVector w = detail::strip_trailing_zeros(v);
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (ffk_shadow_bound(w[i + 1], static_cast<int>(i + 1), r) > w[i]) return false;
  return true;
}

inline bool ffk_check(const IntVector& v) { return ffk_check(v, default_colors(v)); }

namespace detail {

/// Exhaustive search for a complex on exactly v_1 vertices with f-vector v
/// whose faces are rainbow for some r-coloring.
inline bool colored_fvector_exists(IntVector v, int r, int nmax, std::uint64_t node_budget,
                                   bool distinct_colors = false) {
  if (nmax > 12) throw BudgetExceeded("realizability search supports at most 12 vertices");
  if (v.empty() || v[0] != 1) return false;
  for (auto x : v)
    if (x < 0) return false;
  v = strip_trailing_zeros(v);
  const int n = v.size() > 1 ? static_cast<int>(v[1]) : 0;
  if (n > nmax) throw BudgetExceeded("v_1 exceeds the vertex budget");
  const int top = static_cast<int>(v.size()) - 1;
  if (top <= 1) return true;
  if (r < 1) return false;

  using Set = std::bitset<4096>;
  std::vector<std::vector<unsigned>> subsets(static_cast<std::size_t>(top + 1));
  for (unsigned m = 0; m < (1U << n); ++m) {
    int k = std::popcount(m);
    if (k <= top) subsets[static_cast<std::size_t>(k)].push_back(m);
  }
  std::uint64_t nodes = 0;
  std::vector<int> color(static_cast<std::size_t>(n), 0);

  auto rainbow = [&](unsigned m) {
    unsigned used = 0;
    for (int x = 0; x < n; ++x)
      if (m >> x & 1U) {
        unsigned bit = 1U << color[static_cast<std::size_t>(x)];
        if (used & bit) return false;
        used |= bit;
      }
    return true;
  };

  std::function<bool(int, const Set&)> level = [&](int k, const Set& below) {
    std::vector<unsigned> cand;
    for (unsigned m : subsets[static_cast<std::size_t>(k)]) {
      if (!rainbow(m)) continue;
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        if (m >> x & 1U) ok = below[m & ~(1U << x)];
      if (ok) cand.push_back(m);
    }
    const auto need = static_cast<std::size_t>(v[static_cast<std::size_t>(k)]);
    if (cand.size() < need) return false;
    if (k == top) return true;
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> choose = [&](std::size_t from) {
      if (++nodes > node_budget) throw BudgetExceeded("realizability search exceeded its node budget");
      if (pick.size() == need) {
        Set chosen;
        for (auto p : pick) chosen.set(cand[p]);
        return level(k + 1, chosen);
      }
      for (std::size_t p = from; p + (need - pick.size()) <= cand.size(); ++p) {
        pick.push_back(p);
        if (choose(p + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    return choose(0);
  };

  Set singletons;
  for (int x = 0; x < n; ++x) singletons.set(1U << x);
  if (distinct_colors) {
    std::iota(color.begin(), color.end(), 0);
    return level(2, singletons);
  }
  // Colorings up to permuting vertices: nondecreasing color sequences.
  std::function<bool(int, int)> colorings = [&](int x, int from) {
    if (x == n) return level(2, singletons);
    for (int c = from; c < r; ++c) {
      color[static_cast<std::size_t>(x)] = c;
      if (colorings(x + 1, c)) return true;
    }
    return false;
  };
  return colorings(0, 0);
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Exhaustive: is v the f-vector of a complex on ≤ nmax vertices with a
/// proper r-coloring (every face rainbow)?
inline bool balanced_fvector_exists(const IntVector& v, int r, int nmax,
                                    std::uint64_t node_budget = kDefaultSearchBudget) {
  return detail::colored_fvector_exists(v, r, nmax, node_budget);
}

/// Exhaustive: is v the f-vector of any complex on ≤ nmax vertices?
inline bool fvector_exists(const IntVector& v, int nmax,
                           std::uint64_t node_budget = kDefaultSearchBudget) {
  // Giving every vertex its own color makes every face rainbow.
  return detail::colored_fvector_exists(v, nmax, nmax, node_budget, true);
}

/// 0 ≤ γ_2 ≤ γ_1²/4, with γ zero-padded to length 3. Negative entries fail.
inline bool gal_34_check(IntVector g) {
  g.resize(std::max<std::size_t>(g.size(), 3), 0);
  for (auto x : g)
    if (x < 0) return false;
  return BigInt(4) * g[2] <= BigInt(g[1]) * g[1];
}

}  // namespace gammakk
