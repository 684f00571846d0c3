#pragma once

// Decorated permutations: a permutation with a colored bar (colors 0..3)
// after every peak of 0w. Rendered as "4|0 238|1 76519".

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gammakk/errors.hpp"
#include "gammakk/permstats.hpp"
#include "gammakk/polynomial.hpp"

namespace gammakk {

inline constexpr int kBarColors = 4;

struct Bar {
  /// The bar follows w_position.
  int position;
  int color;
  friend bool operator==(const Bar&, const Bar&) = default;
  friend auto operator<=>(const Bar&, const Bar&) = default;
};

struct DecPerm {
  Perm word;
  /// Strictly increasing positions.
  std::vector<Bar> bars;

  int n() const { return static_cast<int>(word.size()); }
  int pk() const { return static_cast<int>(bars.size()); }
  friend bool operator==(const DecPerm&, const DecPerm&) = default;
};

/// Canonical order: bar positions, then word, then colors.
inline bool canonical_less(const DecPerm& a, const DecPerm& b) {
  auto positions = [](const DecPerm& d) {
    std::vector<int> p;
    for (const Bar& x : d.bars) p.push_back(x.position);
    return p;
  };
  auto colors = [](const DecPerm& d) {
    std::vector<int> c;
    for (const Bar& x : d.bars) c.push_back(x.color);
    return c;
  };
  auto pa = positions(a), pb = positions(b);
  if (pa != pb) return pa < pb;
  if (a.word != b.word) return a.word < b.word;
  return colors(a) < colors(b);
}

/// Bars exactly at the peaks of 0w, colors in 0..3.
inline bool is_valid(const DecPerm& d) {
  if (!is_permutation_of_n(d.word)) return false;
  const auto peaks = peak_set_0(d.word);
  if (peaks.size() != d.bars.size()) return false;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    if (d.bars[i].position != peaks[i]) return false;
    if (d.bars[i].color < 0 || d.bars[i].color >= kBarColors) return false;
  }
  return true;
}

inline std::string render(const DecPerm& d) {
  std::string s;
  std::size_t b = 0;
  const bool wide = d.word.size() > 9;
  for (std::size_t i = 0; i < d.word.size(); ++i) {
    if (wide && i > 0 && s.back() != ' ') s += ',';
    s += std::to_string(d.word[i]);
    if (b < d.bars.size() && d.bars[b].position == static_cast<int>(i + 1)) {
      s += '|';
      s += std::to_string(d.bars[b].color);
      if (i + 1 < d.word.size()) s += ' ';
      ++b;
    }
  }
  return s;
}

/// Inverse of render. Letters are single digits unless commas are used as
/// separators. The result is checked with is_valid.
inline DecPerm parse_decperm(const std::string& text) {
  DecPerm d;
  const bool wide = text.find(',') != std::string::npos;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw MalformedInput("decorated permutation \"" + text + "\": " + why);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ' || ch == ',') {
      ++i;
    } else if (ch == '|') {
      if (d.word.empty()) fail("bar before the first letter");
      if (i + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))
        fail("bar without a color");
      d.bars.push_back({static_cast<int>(d.word.size()), text[i + 1] - '0'});
      i += 2;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i + 1;
      if (wide)
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      d.word.push_back(std::stoi(text.substr(i, j - i)));
      i = j;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  if (!is_valid(d)) fail("bars must sit exactly at the peaks of 0w with colors 0..3");
  return d;
}

/// Blocks between consecutive bars (pk + 1 of them).
inline std::vector<Perm> blocks(const DecPerm& d) {
  std::vector<Perm> out;
  int start = 0;
  for (const Bar& b : d.bars) {
    out.emplace_back(d.word.begin() + start, d.word.begin() + b.position);
    start = b.position;
  }
  out.emplace_back(d.word.begin() + start, d.word.end());
  return out;
}

struct BlockSplit {
  Perm decreasing;
  Perm increasing;
};

/// Splits a down-up block at its minimum: the decreasing part is the prefix
/// before the minimum, except that a strictly decreasing final block is all
/// decreasing.
inline BlockSplit split_block(const Perm& block, bool last) {
  if (block.empty()) return {};
  auto m = static_cast<std::size_t>(std::min_element(block.begin(), block.end()) - block.begin());
  if (last && m + 1 == block.size()) return {block, {}};
  return {Perm(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(m)),
          Perm(block.begin() + static_cast<std::ptrdiff_t>(m), block.end())};
}

/// Every w ∈ S_n with every coloring of its bars, in lexicographic order of
/// the word then colors.
inline std::vector<DecPerm> enumerate_decorated(int n) {
  detail::require_n(n, 1, 7, "enumerate_decorated");
  std::vector<DecPerm> out;
  Perm w = identity_perm(n);
  do {
    const auto peaks = peak_set_0(w);
    std::size_t total = 1;
    for (std::size_t i = 0; i < peaks.size(); ++i) total *= kBarColors;
    for (std::size_t code = 0; code < total; ++code) {
      DecPerm d{w, {}};
      std::size_t c = code;
      std::vector<int> colors(peaks.size());
      for (std::size_t i = peaks.size(); i-- > 0;) {
        colors[i] = static_cast<int>(c % kBarColors);
        c /= kBarColors;
      }
      for (std::size_t i = 0; i < peaks.size(); ++i) d.bars.push_back({peaks[i], colors[i]});
      out.push_back(std::move(d));
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Decorated permutations with exactly one bar.
inline std::vector<DecPerm> enumerate_one_bar(int n) {
  auto all = enumerate_decorated(n);
  std::vector<DecPerm> out;
  for (auto& d : all)
    if (d.pk() == 1) out.push_back(std::move(d));
  return out;
}

/// Excludes w_2 < w_1 < w_3 (letters past position n count as +∞) and
/// restricts bars at positions 1 and 2 to colors 0 and 1.
inline bool is_type_D(const DecPerm& d) {
  const int inf = d.n() + 1;
  auto at = [&](std::size_t i) { return i < d.word.size() ? d.word[i] : inf; };
  if (at(1) < at(0) && at(0) < at(2)) return false;
  for (const Bar& b : d.bars)
    if (b.position <= 2 && b.color > 1) return false;
  return true;
}

/// Zero-colored decorated permutations on words of Pk_n.
inline bool is_pk_decorated(const DecPerm& d) {
  for (const Bar& b : d.bars)
    if (b.color != 0) return false;
  return is_pk(d.word);
}

/// Counts by pk, trailing zeros removed.
inline IntVector count_by_pk(const std::vector<DecPerm>& ds) {
  IntVector c{0};
  for (const DecPerm& d : ds) {
    auto k = static_cast<std::size_t>(d.pk());
    if (c.size() <= k) c.resize(k + 1, 0);
    ++c[k];
  }
  return trimmed(c);
}

}  // namespace gammakk
