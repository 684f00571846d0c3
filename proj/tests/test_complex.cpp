#include <random>

#include <catch_amalgamated.hpp>

#include "gammakk/gammakk.hpp"
#include "oracles.hpp"

using namespace gammakk;

namespace {

Graph cycle_graph(int n) {
  Graph g;
  for (Vertex v = 0; v < n; ++v) {
    g.vertices.push_back(v);
    g.edges.emplace_back(v, (v + 1) % n);
  }
  return g;
}

std::vector<oracle::Set> as_sets(const FaceList& fs) { return {fs.begin(), fs.end()}; }

bool downward_closed(const Complex& c) {
  for (const Face& f : c.faces())
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != skip) sub.push_back(f[i]);
      if (!c.contains(sub)) return false;
    }
  return c.contains(Face{});
}

bool facets_maximal(const Complex& c) {
  for (const Face& f : c.faces()) {
    bool contained = false;
    for (const Face& m : c.facets())
      contained = contained || std::includes(m.begin(), m.end(), f.begin(), f.end());
    if (!contained) return false;
  }
  for (const Face& a : c.facets())
    for (const Face& b : c.facets())
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
  return true;
}

}  // namespace

TEST_CASE("facets build their downward closure", "[complex]") {
  auto tri = Complex::from_facets({{1, 2}, {2, 3}, {3, 1}});
  CHECK(tri.f_vector() == IntVector{1, 3, 3});
  CHECK(Complex::from_facets({{1}}).f_vector() == IntVector{1, 1});
  auto full = Complex::from_facets({{1, 2, 3}});
  CHECK(full.f_vector() == IntVector{1, 3, 3, 1});
  CHECK(full.facets() == FaceList{{1, 2, 3}});
  CHECK(full.dim() == 2);
  CHECK(Complex().dim() == -1);
  CHECK(Complex().f_vector() == IntVector{1});
  CHECK(tri.vertices() == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("malformed facets are rejected", "[complex]") {
  CHECK_THROWS_AS(Complex::from_facets({{1, 1, 2}}), MalformedInput);
  CHECK_THROWS_AS(Complex::from_facets({{-1, 2}}), MalformedInput);
  CHECK_THROWS_AS(Complex::from_closed_faces({{1, 2}}), MalformedInput);
  CHECK_THROWS_AS(Complex::from_facets({{0, 1, 2, 3, 4, 5}}, 16), BudgetExceeded);
}

TEST_CASE("from_facets agrees with a set-based closure", "[complex]") {
  const std::vector<FaceList> inputs = {
      {{0, 1, 2}, {2, 3}, {4}},
      {{0, 1, 2, 3}, {1, 2, 4}, {5, 6}},
      {{3, 7}, {7, 9}, {3, 9, 11}},
  };
  for (const auto& facets : inputs) {
    auto c = Complex::from_facets(facets);
    CHECK(c.f_vector() == oracle::fvector_of_facets(as_sets(facets)));
    CHECK(downward_closed(c));
    CHECK(facets_maximal(c));
    for (Vertex v : c.vertices()) CHECK(c.contains(Face{v}));
  }
}

TEST_CASE("clique complexes", "[complex]") {
  CHECK(clique_complex(cycle_graph(4)).f_vector() == IntVector{1, 4, 4});
  Graph k3{{0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}};
  CHECK(clique_complex(k3).f_vector() == IntVector{1, 3, 3, 1});
  Graph oct;
  for (Vertex a = 0; a < 6; ++a) {
    oct.vertices.push_back(a);
    for (Vertex b = a + 1; b < 6; ++b)
      if (a / 2 != b / 2) oct.edges.emplace_back(a, b);
  }
  CHECK(clique_complex(oct).f_vector() == IntVector{1, 6, 12, 8});
}

TEST_CASE("clique complexes of random graphs match subset counting", "[complex]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 8;
    Graph g;
    std::vector<std::pair<int, int>> edges;
    for (Vertex v = 0; v < n; ++v) g.vertices.push_back(v);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng() % 100 < 55) {
          g.edges.emplace_back(a, b);
          edges.emplace_back(a, b);
        }
    auto c = clique_complex(g);
    CHECK(c.f_vector() == oracle::clique_counts(n, edges));
    CHECK(is_flag(c));
    CHECK(downward_closed(c));
    CHECK(facets_maximal(c));
  }
}

TEST_CASE("flagness", "[complex]") {
  // The hollow triangle has the minimal non-face {1,2,3}.
  CHECK_FALSE(is_flag(Complex::from_facets({{1, 2}, {2, 3}, {3, 1}})));
  CHECK(is_flag(Complex::from_closed_faces({{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}})));
  CHECK_FALSE(is_flag(simplex_boundary(4)));
  for (int d = 1; d <= 4; ++d) CHECK(is_flag(octahedral_sphere(d)));
  CHECK(is_flag(polygon(4)));
  CHECK(is_flag(Complex()));
}

TEST_CASE("links", "[complex]") {
  auto oct = octahedral_sphere(3);
  auto lk = link(oct, {0});
  CHECK(lk.f_vector() == IntVector{1, 4, 4});
  CHECK(lk.vertices() == std::vector<Vertex>{2, 3, 4, 5});
  auto hex = polygon(6);
  CHECK(link(hex, {0, 1}) == Complex());
  CHECK(link(hex, {}) == hex);
  CHECK_THROWS_AS(link(hex, {0, 2}), DomainError);
}

TEST_CASE("induced subcomplexes and antistars", "[complex]") {
  auto hex = polygon(6);
  CHECK(induced(hex, {0, 1, 2}) == Complex::from_facets({{0, 1}, {1, 2}}));
  auto pent = polygon(5);
  CHECK(antistar(pent, 0) == Complex::from_facets({{1, 2}, {2, 3}, {3, 4}}));
  CHECK(induced(pent, {}) == Complex());
  CHECK_THROWS_AS(induced(pent, {9}), DomainError);
}

TEST_CASE("interior of the antistar", "[complex]") {
  auto oct = octahedral_sphere(3);
  for (Vertex v : oct.vertices()) CHECK(interior_antistar_vertices(oct, v) == std::vector<Vertex>{v ^ 1});
  auto pent = polygon(5);
  CHECK(interior_antistar_vertices(pent, 0) == std::vector<Vertex>{2, 3});
  const Complex tri = simplex_boundary(3);
  for (Vertex v : tri.vertices()) CHECK(interior_antistar_vertices(tri, v).empty());
  CHECK_THROWS_AS(interior_antistar_vertices(pent, 7), DomainError);
}

TEST_CASE("suspension", "[complex]") {
  auto s = suspension(polygon(4));
  CHECK(s.complex.f_vector() == IntVector{1, 6, 12, 8});
  CHECK_FALSE(s.complex.adjacent(s.apex_a, s.apex_b));
  CHECK(suspension(Complex()).complex.f_vector() == IntVector{1, 2});
  auto sp = suspension(polygon(5)).complex;
  CHECK(sp.f_vector()[1] == 7);
  CHECK(is_flag(sp));
  CHECK(is_homology_sphere(sp));
}

TEST_CASE("join", "[complex]") {
  auto s0 = Complex::from_facets({{0}, {1}});
  CHECK(join(s0, s0).complex.f_vector() == IntVector{1, 4, 4});
  Complex oct = s0;
  for (int d = 2; d <= 4; ++d) {
    oct = join(oct, s0).complex;
    IntVector want;
    for (int k = 0; k <= d; ++k) want.push_back(oracle::choose(d, k) << k);
    CHECK(oct.f_vector() == want);
  }
  auto pp = join(polygon(5), polygon(5)).complex;
  CHECK(f_to_h(pp.f_vector()) == poly_mul(IntVector{1, 3, 1}, IntVector{1, 3, 1}));
  CHECK(h_to_gamma(f_to_h(pp.f_vector())) == IntVector{1, 2, 1});
  CHECK(is_flag(pp));
}

TEST_CASE("join multiplies f-polynomials", "[complex]") {
  const std::vector<Complex> parts = {polygon(3), polygon(5), simplex(2), Complex::from_facets({{0}, {1, 2}})};
  for (const auto& a : parts)
    for (const auto& b : parts) CHECK(join(a, b).complex.f_vector() == poly_mul(a.f_vector(), b.f_vector()));
}

TEST_CASE("edge contraction", "[complex]") {
  auto hex = polygon(6);
  auto c = contract_edge(hex, 0, 1);
  CHECK(c.f_vector() == IntVector{1, 5, 5});
  CHECK_FALSE(c.has_vertex(0));
  CHECK(is_homology_sphere(c));
  auto seg = contract_edge(polygon(3), 0, 1);
  CHECK(seg == Complex::from_facets({{1, 2}}));
  auto oct = octahedral_sphere(3);
  auto bad = contract_edge(oct, 0, 2);
  CHECK_FALSE(is_flag(bad));
  CHECK_THROWS_AS(contract_edge(oct, 0, 1), DomainError);
}

TEST_CASE("induced 4-cycles through an edge", "[complex]") {
  auto hex = polygon(6);
  for (Vertex v = 0; v < 6; ++v) CHECK_FALSE(has_induced_4cycle_through(hex, v, (v + 1) % 6));
  auto sq = polygon(4);
  for (Vertex v = 0; v < 4; ++v) CHECK(has_induced_4cycle_through(sq, v, (v + 1) % 4));
  auto oct = octahedral_sphere(3);
  for (const Face& e : oct.faces_of_size(2)) CHECK(has_induced_4cycle_through(oct, e[0], e[1]));
  CHECK_THROWS_AS(has_induced_4cycle_through(hex, 0, 3), DomainError);
}

TEST_CASE("standard complexes", "[complex]") {
  CHECK(octahedral_sphere(2).f_vector() == IntVector{1, 4, 4});
  CHECK(polygon(5).f_vector() == IntVector{1, 5, 5});
  CHECK(simplex_boundary(4).f_vector() == IntVector{1, 4, 6, 4});
  CHECK_THROWS_AS(octahedral_sphere(0), DomainError);
  CHECK_THROWS_AS(polygon(2), DomainError);
  CHECK_THROWS_AS(simplex_boundary(0), DomainError);
}

TEST_CASE("links in flag complexes are induced and flag", "[complex]") {
  for (const auto& nc : sphere_catalog(8)) {
    const Complex& c = nc.complex;
    if (!is_flag(c)) continue;
    for (const Face& f : c.faces()) {
      auto lk = link(c, f);
      CHECK(is_flag(lk));
      CHECK(lk == induced(c, lk.vertices()));
    }
  }
}

TEST_CASE("admissible contractions stay flag", "[complex]") {
  int admissible = 0;
  for (const auto& nc : sphere_catalog(10)) {
    const Complex& c = nc.complex;
    for (const Face& e : c.faces_of_size(2)) {
      if (has_induced_4cycle_through(c, e[0], e[1])) continue;
      ++admissible;
      CHECK(is_flag(contract_edge(c, e[0], e[1])));
    }
  }
  CHECK(admissible > 0);
}
