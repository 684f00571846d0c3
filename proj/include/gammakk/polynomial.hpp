#pragma once

// Exact integer coefficient sequences. Index i holds the coefficient of t^i.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace gammakk {

using IntVector = std::vector<std::int64_t>;
using Polynomial = IntVector;

inline Polynomial trimmed(Polynomial p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Polynomial poly_scale(Polynomial p, std::int64_t c) {
  for (auto& x : p) x *= c;
  return p;
}

/// t^shift * p(t)
inline Polynomial poly_shift(const Polynomial& p, std::size_t shift) {
  Polynomial r(shift, 0);
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

/// (1+t)^k as a coefficient vector (binomial row k).
inline Polynomial one_plus_t_pow(int k) {
  Polynomial r{1};
  for (int i = 0; i < k; ++i) r = poly_mul(r, {1, 1});
  return r;
}

/// Polynomial equality up to trailing zeros.
inline bool poly_equal(const Polynomial& a, const Polynomial& b) {
  return trimmed(a) == trimmed(b);
}

inline std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ')';
}

}  // namespace gammakk
