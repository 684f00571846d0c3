#pragma once

// Finite simplicial complexes over small integer vertex ids, stored with their
// full face list, plus the standard constructions used on flag spheres:
// clique complexes, links, induced subcomplexes, suspension, join and edge
// contraction.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gammakk/errors.hpp"
#include "gammakk/polynomial.hpp"

namespace gammakk {

using Vertex = int;
/// Sorted ascending, no duplicates.
using Face = std::vector<Vertex>;
using FaceList = std::vector<Face>;

inline constexpr std::size_t kDefaultFaceBudget = 10'000'000;

/// Orders faces by cardinality, then lexicographically.
inline bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct Graph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

class Complex {
 public:
  /// The complex {∅}: no vertices, dimension -1.
  Complex() : faces_{Face{}}, level_start_{0, 1} { index(); }

  /// Downward closure of `facets`. Empty facets are allowed and contribute
  /// only the empty face.
  static Complex from_facets(const FaceList& facets,
                             std::size_t budget = kDefaultFaceBudget) {
    FaceList all;
    all.push_back({});
    for (const Face& raw : facets) {
      Face f = raw;
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw MalformedInput("facet lists a vertex twice");
      if (!f.empty() && f.front() < 0)
        throw MalformedInput("vertex ids must be nonnegative");
      if (f.size() >= 63 || (std::size_t{1} << f.size()) > budget)
        throw BudgetExceeded("facet of size " + std::to_string(f.size()) +
                             " exceeds the face budget");
      const std::size_t k = f.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        Face sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1U) sub.push_back(f[i]);
        all.push_back(std::move(sub));
      }
      if (all.size() > 4 * budget) compact(all, budget);
    }
    compact(all, budget);
    return Complex(std::move(all), /*sorted=*/true);
  }

  /// Builds a complex from a family that is already downward closed.
  /// Faces are sorted and deduplicated; closure is verified.
  static Complex from_closed_faces(FaceList faces,
                                   std::size_t budget = kDefaultFaceBudget) {
    for (auto& f : faces) {
      std::sort(f.begin(), f.end());
      if (!f.empty() && f.front() < 0) throw MalformedInput("vertex ids must be nonnegative");
    }
    faces.push_back({});
    compact(faces, budget);
    Complex c(std::move(faces), true);
    c.verify_closed();
    return c;
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const FaceList& faces() const { return faces_; }
  const FaceList& facets() const { return facets_; }
  std::size_t num_faces() const { return faces_.size(); }
  int dim() const { return static_cast<int>(level_start_.size()) - 3; }

  /// Faces of cardinality k (empty span when k > dim + 1).
  std::span<const Face> faces_of_size(std::size_t k) const {
    if (k + 1 >= level_start_.size()) return {};
    return {faces_.data() + level_start_[k], level_start_[k + 1] - level_start_[k]};
  }

  /// f_i = number of faces of cardinality i; f_0 = 1.
  IntVector f_vector() const {
    IntVector f;
    for (std::size_t k = 0; k + 1 < level_start_.size(); ++k)
      f.push_back(static_cast<std::int64_t>(level_start_[k + 1] - level_start_[k]));
    return f;
  }

  bool contains(std::span<const Vertex> face) const {
    Face f(face.begin(), face.end());
    std::sort(f.begin(), f.end());
    auto level = faces_of_size(f.size());
    return std::binary_search(level.begin(), level.end(), f);
  }

  /// Index of `face` in faces(), or npos.
  std::size_t index_of(const Face& sorted_face) const {
    auto level = faces_of_size(sorted_face.size());
    auto it = std::lower_bound(level.begin(), level.end(), sorted_face);
    if (it == level.end() || *it != sorted_face) return npos;
    return static_cast<std::size_t>(it - level.begin()) + level_start_[sorted_face.size()];
  }

  bool has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& n = nbrs_[static_cast<std::size_t>(u)];
    return std::binary_search(n.begin(), n.end(), v);
  }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    if (!has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
    return nbrs_[static_cast<std::size_t>(v)];
  }

  /// 1-skeleton as a graph.
  Graph skeleton() const {
    Graph g{vertices_, {}};
    for (const Face& e : faces_of_size(2)) g.edges.emplace_back(e[0], e[1]);
    return g;
  }

  Vertex max_vertex() const { return vertices_.empty() ? -1 : vertices_.back(); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.faces_ == b.faces_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Complex(FaceList faces, bool) : faces_(std::move(faces)) { index(); }

  static void compact(FaceList& faces, std::size_t budget) {
    std::sort(faces.begin(), faces.end(), face_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.size() > budget)
      throw BudgetExceeded("complex has more than " + std::to_string(budget) + " faces");
  }

  void index() {
    level_start_.assign(1, 0);
    for (std::size_t i = 0; i < faces_.size(); ++i)
      while (level_start_.size() <= faces_[i].size()) level_start_.push_back(i);
    level_start_.push_back(faces_.size());

    vertices_.clear();
    for (const Face& v : faces_of_size(1)) vertices_.push_back(v[0]);
    // Edges are scanned for ids too, so an unclosed family still indexes
    // safely before verify_closed rejects it.
    Vertex top = max_vertex();
    for (const Face& e : faces_of_size(2)) top = std::max(top, e[1]);
    nbrs_.assign(static_cast<std::size_t>(top + 1), {});
    for (const Face& e : faces_of_size(2)) {
      nbrs_[static_cast<std::size_t>(e[0])].push_back(e[1]);
      nbrs_[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (auto& n : nbrs_) std::sort(n.begin(), n.end());

    // A face is a facet iff it is not a codimension-one face of anything.
    std::vector<char> covered(faces_.size(), 0);
    Face sub;
    for (std::size_t i = level_start_[1]; i < faces_.size(); ++i) {
      const Face& f = faces_[i];
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        sub.clear();
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != skip) sub.push_back(f[j]);
        std::size_t idx = index_of(sub);
        if (idx != npos) covered[idx] = 1;
      }
    }
    facets_.clear();
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (!covered[i]) facets_.push_back(faces_[i]);
    std::sort(facets_.begin(), facets_.end());
  }

  void verify_closed() const {
    Face sub;
    for (std::size_t i = level_start_[1]; i < faces_.size(); ++i) {
      const Face& f = faces_[i];
      if (f.front() < 0) throw MalformedInput("vertex ids must be nonnegative");
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        sub.clear();
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != skip) sub.push_back(f[j]);
        if (index_of(sub) == npos) throw MalformedInput("face family is not downward closed");
      }
    }
  }

  FaceList faces_;
  std::vector<std::size_t> level_start_;
  std::vector<Vertex> vertices_;
  FaceList facets_;
  std::vector<std::vector<Vertex>> nbrs_;
};

// ---------------------------------------------------------------------------
// Clique complexes

namespace detail {

using Bits = boost::dynamic_bitset<>;

/// Calls `emit` for every nonempty clique (as increasing index lists) of the
/// graph given by `later`, where later[i] holds the neighbours j > i of i.
/// Stops early when `emit` returns false.
template <class Emit>
bool for_each_clique(const std::vector<Bits>& later, Emit&& emit) {
  const std::size_t n = later.size();
  std::vector<std::size_t> cur;
  std::function<bool(const Bits&)> extend = [&](const Bits& cand) {
    for (auto i = cand.find_first(); i != Bits::npos; i = cand.find_next(i)) {
      cur.push_back(i);
      if (!emit(std::as_const(cur))) return false;
      if (!extend(cand & later[i])) return false;
      cur.pop_back();
    }
    return true;
  };
  Bits all(n);
  all.set();
  return extend(all);
}

inline std::vector<Bits> later_neighbours(const Graph& g) {
  std::vector<Vertex> ids = g.vertices;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Bits> later(ids.size(), Bits(ids.size()));
  auto pos = [&](Vertex v) {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) throw DomainError("edge endpoint is not a vertex");
    return static_cast<std::size_t>(it - ids.begin());
  };
  for (auto [u, v] : g.edges) {
    if (u == v) throw MalformedInput("graph has a loop");
    auto a = pos(u), b = pos(v);
    if (a > b) std::swap(a, b);
    later[a].set(b);
  }
  return later;
}

}  // namespace detail

/// Complex of all cliques of `g`, including ∅ and the singletons.
inline Complex clique_complex(const Graph& g, std::size_t budget = kDefaultFaceBudget) {
  std::vector<Vertex> ids = g.vertices;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.front() < 0) throw MalformedInput("vertex ids must be nonnegative");
  auto later = detail::later_neighbours(g);
  FaceList faces;
  detail::for_each_clique(later, [&](const std::vector<std::size_t>& idx) {
    if (faces.size() >= budget)
      throw BudgetExceeded("clique complex has more than " + std::to_string(budget) + " faces");
    Face f;
    f.reserve(idx.size());
    for (auto i : idx) f.push_back(ids[i]);
    faces.push_back(std::move(f));
    return true;
  });
  return Complex::from_closed_faces(std::move(faces), budget);
}

/// A complex whose vertex ids index into `labels`.
template <class Label>
struct LabeledComplex {
  std::vector<Label> labels;
  Complex complex;

  std::vector<Label> face_labels(const Face& f) const {
    std::vector<Label> out;
    for (Vertex v : f) out.push_back(labels[static_cast<std::size_t>(v)]);
    return out;
  }
};

/// Flag complex on `labels` whose edges are the pairs accepted by `adjacent`.
/// Vertex i of the result is labels[i].
template <class Label, class Adjacent>
LabeledComplex<Label> flag_complex(std::vector<Label> labels, Adjacent&& adjacent,
                                   std::size_t budget = kDefaultFaceBudget) {
  Graph g;
  g.vertices.resize(labels.size());
  std::iota(g.vertices.begin(), g.vertices.end(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (adjacent(labels[i], labels[j]))
        g.edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  Complex c = clique_complex(g, budget);
  return {std::move(labels), std::move(c)};
}

/// True iff every clique of the 1-skeleton is a face.
inline bool is_flag(const Complex& c) {
  auto later = detail::later_neighbours(c.skeleton());
  std::size_t cliques = 1;  // the empty face
  bool within = detail::for_each_clique(later, [&](const std::vector<std::size_t>&) {
    return ++cliques <= c.num_faces();
  });
  return within && cliques == c.num_faces();
}

// ---------------------------------------------------------------------------
// Local constructions

/// lk(F) = { G : G ∪ F ∈ c, G ∩ F = ∅ }, on the inherited vertex ids.
inline Complex link(const Complex& c, const Face& face) {
  Face f = face;
  std::sort(f.begin(), f.end());
  if (!c.contains(f)) throw DomainError("link: not a face of the complex");
  FaceList out;
  for (std::size_t k = f.size(); k <= static_cast<std::size_t>(c.dim() + 1); ++k) {
    for (const Face& h : c.faces_of_size(k)) {
      if (!std::includes(h.begin(), h.end(), f.begin(), f.end())) continue;
      Face g;
      std::set_difference(h.begin(), h.end(), f.begin(), f.end(), std::back_inserter(g));
      out.push_back(std::move(g));
    }
  }
  return Complex::from_closed_faces(std::move(out));
}

/// Δ[A]: faces contained in `subset`.
inline Complex induced(const Complex& c, std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (Vertex v : subset)
    if (!c.has_vertex(v)) throw DomainError("induced: unknown vertex " + std::to_string(v));
  FaceList out;
  for (const Face& f : c.faces())
    if (std::includes(subset.begin(), subset.end(), f.begin(), f.end())) out.push_back(f);
  return Complex::from_closed_faces(std::move(out));
}

/// Δ[V − {v}].
inline Complex antistar(const Complex& c, Vertex v) {
  if (!c.has_vertex(v)) throw DomainError("antistar: unknown vertex " + std::to_string(v));
  std::vector<Vertex> rest;
  for (Vertex u : c.vertices())
    if (u != v) rest.push_back(u);
  return induced(c, rest);
}

/// Vertices u ≠ v with {u,v} not an edge; its size is i(v).
inline std::vector<Vertex> interior_antistar_vertices(const Complex& c, Vertex v) {
  if (!c.has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
  std::vector<Vertex> out;
  for (Vertex u : c.vertices())
    if (u != v && !c.adjacent(u, v)) out.push_back(u);
  return out;
}

struct Suspension {
  Complex complex;
  Vertex apex_a;
  Vertex apex_b;
};

/// Δ ∪ {a ∪ F} ∪ {b ∪ F} with fresh, non-adjacent apexes a < b.
inline Suspension suspension(const Complex& c) {
  const Vertex a = c.max_vertex() + 1, b = a + 1;
  FaceList out = c.faces();
  for (const Face& f : c.faces()) {
    Face fa = f, fb = f;
    fa.push_back(a);
    fb.push_back(b);
    out.push_back(std::move(fa));
    out.push_back(std::move(fb));
  }
  return {Complex::from_closed_faces(std::move(out)), a, b};
}

struct Join {
  Complex complex;
  /// Vertex x of the second factor is x + offset in the join.
  Vertex offset;
};

inline Join join(const Complex& c1, const Complex& c2,
                 std::size_t budget = kDefaultFaceBudget) {
  const Vertex offset = c1.max_vertex() + 1;
  if (c1.num_faces() * c2.num_faces() > budget)
    throw BudgetExceeded("join exceeds the face budget");
  FaceList out;
  out.reserve(c1.num_faces() * c2.num_faces());
  for (const Face& f1 : c1.faces()) {
    for (const Face& f2 : c2.faces()) {
      Face f = f1;
      for (Vertex x : f2) f.push_back(x + offset);
      out.push_back(std::move(f));
    }
  }
  return {Complex::from_closed_faces(std::move(out), budget), offset};
}

/// Identifies u with v: {F : u ∉ F} ∪ {(F − u) ∪ v : u ∈ F}. No admissibility
/// check is made.
inline Complex contract_edge(const Complex& c, Vertex u, Vertex v) {
  if (!c.adjacent(u, v)) throw DomainError("contract_edge: {u,v} is not an edge");
  FaceList out;
  for (const Face& f : c.faces()) {
    if (!std::binary_search(f.begin(), f.end(), u)) {
      out.push_back(f);
      continue;
    }
    Face g;
    for (Vertex x : f)
      if (x != u) g.push_back(x);
    if (!std::binary_search(g.begin(), g.end(), v)) g.insert(std::upper_bound(g.begin(), g.end(), v), v);
    out.push_back(std::move(g));
  }
  return Complex::from_closed_faces(std::move(out));
}

/// True iff some induced 4-cycle (v,u,v',u') passes through the edge {u,v}:
/// u' ~ v, v' ~ u, u' ~ v', while {u,u'} and {v,v'} are non-edges.
inline bool has_induced_4cycle_through(const Complex& c, Vertex u, Vertex v) {
  if (!c.adjacent(u, v)) throw DomainError("has_induced_4cycle_through: {u,v} is not an edge");
  for (Vertex up : interior_antistar_vertices(c, u)) {
    if (!c.adjacent(up, v)) continue;
    for (Vertex vp : interior_antistar_vertices(c, v))
      if (vp != up && c.adjacent(vp, u) && c.adjacent(up, vp)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Standard complexes (vertex ids start at 0)

/// Boundary of the d-dimensional cross-polytope: antipodal pairs {2i, 2i+1}.
inline Complex octahedral_sphere(int d) {
  if (d < 1) throw DomainError("octahedral_sphere: d must be at least 1");
  Graph g;
  for (Vertex v = 0; v < 2 * d; ++v) g.vertices.push_back(v);
  for (Vertex a = 0; a < 2 * d; ++a)
    for (Vertex b = a + 1; b < 2 * d; ++b)
      if (a / 2 != b / 2) g.edges.emplace_back(a, b);
  return clique_complex(g);
}

/// Boundary of an n-gon, vertices 0..n-1 in cyclic order.
inline Complex polygon(int n) {
  if (n < 3) throw DomainError("polygon: n must be at least 3");
  FaceList edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Complex::from_facets(edges);
}

/// All proper subsets of {0..n-1}; simplex_boundary(1) is {∅}.
inline Complex simplex_boundary(int n) {
  if (n < 1) throw DomainError("simplex_boundary: n must be at least 1");
  FaceList facets;
  for (Vertex skip = 0; skip < n; ++skip) {
    Face f;
    for (Vertex v = 0; v < n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(facets);
}

/// The full simplex on {0..n-1}.
inline Complex simplex(int n) {
  if (n < 0) throw DomainError("simplex: n must be nonnegative");
  Face f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  return Complex::from_facets({f});
}

}  // namespace gammakk
