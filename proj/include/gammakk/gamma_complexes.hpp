#pragma once

// Flag complexes whose f-vectors are the γ-vectors of Coxeter complexes of
// types A, B, D, the associahedron and the cyclohedron, together with the
// maps φ, π and ψ that identify their faces with decorated permutations,
// 312-avoiding peak permutations and pair tableaux.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gammakk/complex.hpp"
#include "gammakk/decorated.hpp"
#include "gammakk/errors.hpp"
#include "gammakk/permstats.hpp"

namespace gammakk {

// ---------------------------------------------------------------------------
// One-bar vertices of Γ(Des_n)

/// ŭ₁ |ᶜ ŭd₂ ŭu₂ for a decorated permutation with one bar.
struct BarParts {
  Perm prefix;
  int color;
  int position;
  Perm decreasing;
  Perm increasing;
};

inline BarParts bar_parts(const DecPerm& v) {
  if (v.pk() != 1) throw DomainError("bar_parts: " + render(v) + " does not have exactly one bar");
  const int p = v.bars[0].position;
  Perm tail(v.word.begin() + p, v.word.end());
  auto split = split_block(tail, true);
  return {Perm(v.word.begin(), v.word.begin() + p), v.bars[0].color, p, std::move(split.decreasing),
          std::move(split.increasing)};
}

/// Word ŭ₁ |ᶜ ŭd₂ á |ᵈ v̌d₂ v̌u₂ with á = ŭu₂ ∩ v̆u₁ ascending; u must have the
/// smaller bar position.
inline DecPerm assemble(const DecPerm& u, const DecPerm& v) {
  BarParts a = bar_parts(u), b = bar_parts(v);
  Perm common;
  Perm vprefix = b.prefix;
  std::sort(vprefix.begin(), vprefix.end());
  for (int x : a.increasing)
    if (std::binary_search(vprefix.begin(), vprefix.end(), x)) common.push_back(x);
  std::sort(common.begin(), common.end());
  DecPerm w;
  w.word = a.prefix;
  w.word.insert(w.word.end(), a.decreasing.begin(), a.decreasing.end());
  w.word.insert(w.word.end(), common.begin(), common.end());
  const int second = static_cast<int>(w.word.size());
  w.word.insert(w.word.end(), b.decreasing.begin(), b.decreasing.end());
  w.word.insert(w.word.end(), b.increasing.begin(), b.increasing.end());
  w.bars = {{a.position, a.color}, {second, b.color}};
  return w;
}

/// One vertex per bar: bar and color kept, the decreasing part after the bar
/// kept, all other letters sorted on their side of the bar. Returned in
/// canonical order.
inline std::vector<DecPerm> phi(const DecPerm& d) {
  const auto bs = blocks(d);
  std::vector<DecPerm> out;
  for (std::size_t k = 0; k < d.bars.size(); ++k) {
    const int p = d.bars[k].position;
    const Perm dec = split_block(bs[k + 1], k + 2 == bs.size()).decreasing;
    Perm left(d.word.begin(), d.word.begin() + p);
    std::sort(left.begin(), left.end());
    Perm right;
    for (auto it = d.word.begin() + p; it != d.word.end(); ++it)
      if (std::find(dec.begin(), dec.end(), *it) == dec.end()) right.push_back(*it);
    std::sort(right.begin(), right.end());
    DecPerm v{left, {{p, d.bars[k].color}}};
    v.word.insert(v.word.end(), dec.begin(), dec.end());
    v.word.insert(v.word.end(), right.begin(), right.end());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace detail {

inline const DecPerm& first_by_position(const DecPerm& u, const DecPerm& v) {
  return u.bars[0].position <= v.bars[0].position ? u : v;
}

inline void require_same_n(const DecPerm& u, const DecPerm& v) {
  if (u.n() != v.n()) throw DomainError("adjacency between vertices from different n");
}

inline bool equal_as_sets(std::vector<DecPerm> a, std::vector<DecPerm> b) {
  std::sort(a.begin(), a.end(), canonical_less);
  std::sort(b.begin(), b.end(), canonical_less);
  return a == b;
}

}  // namespace detail

/// The three bulleted conditions: ŭ₁ ∪ ŭd₂ ⊆ v̆u₁ (the prefix of v), and with
/// á = ŭu₂ ∩ v̆u₁ nonempty, min á < min ŭd₂ and max á > max v̌d₂ whenever those
/// parts are nonempty.
inline bool adjacent_des_bullets(const DecPerm& x, const DecPerm& y) {
  detail::require_same_n(x, y);
  if (x.bars[0].position == y.bars[0].position) return false;
  const DecPerm& u = detail::first_by_position(x, y);
  const DecPerm& v = &u == &x ? y : x;
  BarParts a = bar_parts(u), b = bar_parts(v);
  std::set<int> vprefix(b.prefix.begin(), b.prefix.end());
  for (int z : a.prefix)
    if (!vprefix.count(z)) return false;
  for (int z : a.decreasing)
    if (!vprefix.count(z)) return false;
  std::vector<int> common;
  for (int z : a.increasing)
    if (vprefix.count(z)) common.push_back(z);
  if (common.empty()) return false;
  const auto [lo, hi] = std::minmax_element(common.begin(), common.end());
  if (!a.decreasing.empty() && !(*lo < *std::min_element(a.decreasing.begin(), a.decreasing.end())))
    return false;
  if (!b.decreasing.empty() && !(*hi > *std::max_element(b.decreasing.begin(), b.decreasing.end())))
    return false;
  return true;
}

/// Existence of a two-bar decorated permutation whose φ-image is {u, v}: the
/// assembled word must be valid and map back to exactly {u, v}. When both
/// decreasing parts are nonempty and at least two letters are shared, the
/// bullets decide directly.
inline bool adjacent_des(const DecPerm& x, const DecPerm& y) {
  detail::require_same_n(x, y);
  if (x.pk() != 1 || y.pk() != 1) throw DomainError("adjacent_des: vertices must have one bar");
  if (x.bars[0].position == y.bars[0].position) return false;
  const DecPerm& u = detail::first_by_position(x, y);
  const DecPerm& v = &u == &x ? y : x;
  BarParts a = bar_parts(u), b = bar_parts(v);
  if (!a.decreasing.empty() && !b.decreasing.empty()) {
    std::set<int> vprefix(b.prefix.begin(), b.prefix.end());
    int shared = 0;
    for (int z : a.increasing) shared += static_cast<int>(vprefix.count(z));
    if (shared >= 2) return adjacent_des_bullets(u, v);
  }
  const DecPerm w = assemble(u, v);
  return is_valid(w) && detail::equal_as_sets(phi(w), {u, v});
}

/// Assembled word validity alone, without the φ round trip.
inline bool adjacent_des_validity_only(const DecPerm& x, const DecPerm& y) {
  detail::require_same_n(x, y);
  if (x.bars[0].position == y.bars[0].position) return false;
  const DecPerm& u = detail::first_by_position(x, y);
  const DecPerm& v = &u == &x ? y : x;
  return is_valid(assemble(u, v));
}

/// Reassembles a face of Γ(Des_n) left to right by bar position.
inline DecPerm phi_inverse(std::vector<DecPerm> face, int n) {
  if (face.empty()) return {identity_perm(n), {}};
  for (const auto& v : face)
    if (v.n() != n || v.pk() != 1) throw PreconditionError("phi_inverse: vertices must be one-bar elements of Des_n");
  std::sort(face.begin(), face.end(), canonical_less);
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t j = i + 1; j < face.size(); ++j)
      if (!adjacent_des(face[i], face[j])) throw PreconditionError("phi_inverse: face is not a clique");
  DecPerm w = face[0];
  for (std::size_t k = 1; k < face.size(); ++k) {
    const int last = w.bars.back().position;
    Perm tail(w.word.begin() + last, w.word.end());
    BlockSplit s = split_block(tail, true);
    BarParts x = bar_parts(face[k]);
    std::sort(x.prefix.begin(), x.prefix.end());
    Perm common;
    for (int z : s.increasing)
      if (std::binary_search(x.prefix.begin(), x.prefix.end(), z)) common.push_back(z);
    std::sort(common.begin(), common.end());
    Perm word(w.word.begin(), w.word.begin() + last);
    word.insert(word.end(), s.decreasing.begin(), s.decreasing.end());
    word.insert(word.end(), common.begin(), common.end());
    const int pos = static_cast<int>(word.size());
    word.insert(word.end(), x.decreasing.begin(), x.decreasing.end());
    word.insert(word.end(), x.increasing.begin(), x.increasing.end());
    w.word = std::move(word);
    w.bars.push_back({pos, x.color});
  }
  if (!is_valid(w) || !detail::equal_as_sets(phi(w), face))
    throw PreconditionError("phi_inverse: clique is not the image of a decorated permutation");
  return w;
}

/// Removes bar `bar_index` (1-based); the merged block is the decreasing
/// part of the block left of the bar followed by the remaining letters of
/// both blocks in increasing order.
inline DecPerm coarsen(const DecPerm& d, int bar_index) {
  if (bar_index < 1 || bar_index > d.pk())
    throw DomainError("coarsen: bar index " + std::to_string(bar_index) + " out of range");
  const auto bs = blocks(d);
  const auto i = static_cast<std::size_t>(bar_index - 1);
  const Perm dec = split_block(bs[i], i + 1 == bs.size()).decreasing;
  Perm rest;
  for (std::size_t k = i; k <= i + 1; ++k)
    for (int z : bs[k])
      if (std::find(dec.begin(), dec.end(), z) == dec.end()) rest.push_back(z);
  std::sort(rest.begin(), rest.end());
  DecPerm out;
  for (std::size_t k = 0; k < bs.size(); ++k) {
    if (k == i) {
      out.word.insert(out.word.end(), dec.begin(), dec.end());
      out.word.insert(out.word.end(), rest.begin(), rest.end());
      ++k;
    } else {
      out.word.insert(out.word.end(), bs[k].begin(), bs[k].end());
    }
    if (k < d.bars.size()) out.bars.push_back(d.bars[k]);
  }
  return out;
}

/// ⌈position / 2⌉
inline int balanced_coloring(const DecPerm& v) {
  if (v.pk() != 1) throw DomainError("balanced_coloring: vertex must have one bar");
  return (v.bars[0].position + 1) / 2;
}

// ---------------------------------------------------------------------------
// Arc vertices (associahedron)

/// (a, b) with 1 ≤ a < b ≤ n - 1.
using Arc = std::pair<int, int>;

/// False iff a < c < b < d or c < a < d < b.
inline bool noncrossing(const Arc& p, const Arc& q) {
  auto [a, b] = p;
  auto [c, d] = q;
  return !((a < c && c < b && b < d) || (c < a && a < d && d < b));
}

inline bool arcs_adjacent(const Arc& p, const Arc& q) {
  return noncrossing(p, q) && p.first != q.first && p.first != q.second && p.second != q.first &&
         p.second != q.second;
}

/// {(w_{i+1}, w_i) : w_i > w_{i+1}}, sorted.
inline std::vector<Arc> pi(const Perm& w) {
  auto pairs = descent_pairs(w);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

/// Rebuilds w = á₁ j₁i₁ á₂ j₂i₂ ⋯ from pairs sorted by j: each unused letter
/// goes to the first run whose j exceeds it.
inline Perm pi_inverse(std::vector<Arc> face, int n) {
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  for (auto [i, j] : face) {
    if (!(1 <= i && i < j && j <= n)) throw PreconditionError("pi_inverse: arc out of range");
    if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)])
      throw PreconditionError("pi_inverse: arcs share an element");
    used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = 1;
  }
  std::sort(face.begin(), face.end(), [](const Arc& x, const Arc& y) { return x.second < y.second; });
  std::vector<Perm> runs(face.size() + 1);
  for (int x = 1; x <= n; ++x) {
    if (used[static_cast<std::size_t>(x)]) continue;
    std::size_t s = 0;
    while (s < face.size() && face[s].second < x) ++s;
    runs[s].push_back(x);
  }
  Perm w;
  for (std::size_t s = 0; s <= face.size(); ++s) {
    w.insert(w.end(), runs[s].begin(), runs[s].end());
    if (s < face.size()) {
      w.push_back(face[s].second);
      w.push_back(face[s].first);
    }
  }
  std::sort(face.begin(), face.end());
  if (!is_pk(w) || !is_312_avoiding(w) || pi(w) != face)
    throw PreconditionError("pi_inverse: arcs are not the descent pairs of a permutation in Pk_n(312)");
  return w;
}

inline std::string render(const Arc& a) {
  return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

// ---------------------------------------------------------------------------
// LR vertices (cyclohedron)

struct LRVertex {
  int l;
  int r;
  friend bool operator==(const LRVertex&, const LRVertex&) = default;
  friend auto operator<=>(const LRVertex&, const LRVertex&) = default;
};

/// All four coordinates distinct and l₁ < l₂ ⇔ r₁ < r₂.
inline bool lr_adjacent(const LRVertex& p, const LRVertex& q) {
  if (p.l == q.l || p.l == q.r || p.r == q.l || p.r == q.r) return false;
  return (p.l < q.l) == (p.r < q.r);
}

/// Rows of the column-sorted two-column array.
inline std::vector<LRVertex> psi(const PairTableau& s) {
  std::vector<LRVertex> out;
  for (std::size_t i = 0; i < s.L.size(); ++i) out.push_back({s.L[i], s.R[i]});
  return out;
}

inline PairTableau psi_inverse(std::vector<LRVertex> face) {
  std::sort(face.begin(), face.end());
  PairTableau s;
  for (const auto& v : face) {
    if (v.l == v.r) throw PreconditionError("psi_inverse: vertex with l = r");
    s.L.push_back(v.l);
    s.R.push_back(v.r);
  }
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t j = i + 1; j < face.size(); ++j)
      if (!lr_adjacent(face[i], face[j])) throw PreconditionError("psi_inverse: face is not a clique");
  return s;
}

inline std::string render(const LRVertex& v) {
  return "(" + std::to_string(v.l) + ";" + std::to_string(v.r) + ")";
}

// ---------------------------------------------------------------------------
// Builders

enum class Family { A, B, D, Assoc, Cyc };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::Assoc: return "assoc";
    case Family::Cyc: return "cyc";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  if (s == "assoc") return Family::Assoc;
  if (s == "cyc") return Family::Cyc;
  throw DomainError("unknown family \"" + s + "\" (expected A, B, D, assoc or cyc)");
}

inline int family_budget(Family f) {
  switch (f) {
    case Family::A:
    case Family::Assoc:
    case Family::Cyc: return 8;
    case Family::B:
    case Family::D: return 6;
  }
  return 0;
}

/// Zero-colored one-bar vertex with empty decreasing part.
inline bool is_pk_vertex(const DecPerm& v) {
  return v.bars[0].color == 0 && bar_parts(v).decreasing.empty();
}

/// Vertex set of Γ(Des_n), Γ(Pk_n) or Γ(Des_n^D) in canonical order.
inline std::vector<DecPerm> des_vertices(Family f, int n) {
  auto all = enumerate_one_bar(n);
  std::vector<DecPerm> out;
  for (auto& v : all) {
    bool keep = f == Family::B || (f == Family::A && is_pk_vertex(v)) || (f == Family::D && is_type_D(v));
    if (keep) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline LabeledComplex<DecPerm> gamma_des(Family f, int n, std::size_t budget = kDefaultFaceBudget) {
  if (f != Family::A && f != Family::B && f != Family::D) throw DomainError("gamma_des: family must be A, B or D");
  detail::require_n(n, f == Family::D ? 2 : 1, family_budget(f), "build_gamma_complex");
  return flag_complex(des_vertices(f, n), [](const DecPerm& u, const DecPerm& v) { return adjacent_des(u, v); },
                      budget);
}

inline LabeledComplex<Arc> gamma_assoc(int n, std::size_t budget = kDefaultFaceBudget) {
  detail::require_n(n, 1, family_budget(Family::Assoc), "build_gamma_complex");
  std::vector<Arc> vs;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b <= n - 1; ++b) vs.emplace_back(a, b);
  return flag_complex(std::move(vs), arcs_adjacent, budget);
}

inline LabeledComplex<LRVertex> gamma_cyc(int n, std::size_t budget = kDefaultFaceBudget) {
  detail::require_n(n, 1, family_budget(Family::Cyc), "build_gamma_complex");
  std::vector<LRVertex> vs;
  for (int l = 1; l <= n; ++l)
    for (int r = 1; r <= n; ++r)
      if (l != r) vs.push_back({l, r});
  return flag_complex(std::move(vs), lr_adjacent, budget);
}

namespace detail {

template <class Label>
LabeledComplex<std::string> rendered(const LabeledComplex<Label>& c) {
  LabeledComplex<std::string> out{{}, c.complex};
  for (const auto& l : c.labels) out.labels.push_back(render(l));
  return out;
}

}  // namespace detail

/// Any family, with vertex labels rendered as text.
inline LabeledComplex<std::string> build_gamma_complex(Family f, int n,
                                                       std::size_t budget = kDefaultFaceBudget) {
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::D: return detail::rendered(gamma_des(f, n, budget));
    case Family::Assoc: return detail::rendered(gamma_assoc(n, budget));
    case Family::Cyc: return detail::rendered(gamma_cyc(n, budget));
  }
  throw DomainError("unknown family");
}

// ---------------------------------------------------------------------------
// Poset structure of Des_n

/// φ is a bijection from Des_n onto the faces of Γ(Des_n), and removing bar i
/// corresponds to removing the i-th vertex of the image.
inline bool verify_poset_iso(int n) {
  detail::require_n(n, 1, 5, "verify_poset_iso");
  const auto all = enumerate_decorated(n);
  const auto gamma = gamma_des(Family::B, n);
  std::map<Face, std::size_t> preimage;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto image = phi(all[k]);
    if (static_cast<int>(image.size()) != all[k].pk()) return false;
    Face f;
    for (const auto& v : image) {
      auto it = std::lower_bound(gamma.labels.begin(), gamma.labels.end(), v, canonical_less);
      if (it == gamma.labels.end() || !(*it == v)) return false;
      f.push_back(static_cast<Vertex>(it - gamma.labels.begin()));
    }
    std::sort(f.begin(), f.end());
    if (!gamma.complex.contains(f)) return false;
    if (!preimage.emplace(f, k).second) return false;
  }
  if (preimage.size() != gamma.complex.num_faces()) return false;
  for (const auto& [face, k] : preimage) {
    const DecPerm& d = all[k];
    // Bars are in position order, and so are the image vertices.
    for (int i = 1; i <= d.pk(); ++i) {
      Face smaller = face;
      smaller.erase(smaller.begin() + (i - 1));
      const DecPerm c = coarsen(d, i);
      if (!is_valid(c) || !(all[preimage.at(smaller)] == c)) return false;
    }
  }
  return true;
}

}  // namespace gammakk
