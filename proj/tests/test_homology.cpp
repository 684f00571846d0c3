#include <catch_amalgamated.hpp>

#include "gammakk/gammakk.hpp"

using namespace gammakk;

TEST_CASE("reduced betti numbers", "[homology]") {
  CHECK(betti(octahedral_sphere(3)) == BettiVector{0, 0, 0, 1});
  CHECK(betti(polygon(5)) == BettiVector{0, 0, 1});
  CHECK(betti(Complex::from_facets({{0}, {1}})) == BettiVector{0, 1});
  CHECK(betti(Complex()) == BettiVector{1});
  CHECK(betti(simplex(4)) == BettiVector{0, 0, 0, 0, 0});
  CHECK(betti(simplex_boundary(5)) == sphere_betti(3));
}

TEST_CASE("betti numbers of wedges and disjoint unions", "[homology]") {
  // Two triangles sharing a vertex: a wedge of two circles.
  auto wedge = Complex::from_facets({{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  CHECK(betti(wedge) == BettiVector{0, 0, 2});
  auto three = Complex::from_facets({{0}, {1, 2}, {3, 4, 5}});
  CHECK(betti(three) == BettiVector{0, 2, 0, 0});
}

TEST_CASE("homology spheres", "[homology]") {
  for (int n = 3; n <= 9; ++n) CHECK(is_homology_sphere(polygon(n)));
  CHECK_FALSE(is_homology_sphere(simplex(3)));
  CHECK(is_homology_sphere(join(polygon(5), polygon(5)).complex));
  CHECK(is_homology_sphere(Complex()));
  CHECK(is_homology_sphere(Complex::from_facets({{0}, {1}})));
  // A circle with a pendant edge has the right global homology but bad links.
  CHECK_FALSE(is_homology_sphere(Complex::from_facets({{0, 1}, {1, 2}, {2, 0}, {0, 3}})));
  // Two 2-spheres glued at a vertex.
  auto pinched = Complex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}});
  CHECK_FALSE(is_homology_sphere(pinched));
}

TEST_CASE("euler characteristic agrees with the f-vector", "[homology]") {
  for (const auto& nc : sphere_catalog(9)) {
    const auto f = nc.complex.f_vector();
    const auto b = betti(nc.complex);
    std::int64_t from_f = 0, from_b = 0;
    for (std::size_t i = 0; i < f.size(); ++i) from_f += (i % 2 ? 1 : -1) * f[i];
    for (std::size_t i = 0; i < b.size(); ++i) from_b += (i % 2 ? 1 : -1) * b[i];
    CHECK(from_f == from_b);
  }
}

TEST_CASE("joins of spheres are spheres of summed dimension", "[homology]") {
  const std::vector<Complex> spheres = {Complex::from_facets({{0}, {1}}), polygon(4), polygon(5), octahedral_sphere(3)};
  for (const auto& a : spheres)
    for (const auto& b : spheres) {
      auto j = join(a, b).complex;
      CHECK(betti(j) == sphere_betti(a.dim() + b.dim() + 1));
    }
}

TEST_CASE("catalog spheres have symmetric h-vectors", "[homology]") {
  for (const auto& nc : sphere_catalog(12)) {
    INFO(nc.name);
    CHECK(is_homology_sphere(nc.complex));
    const auto h = f_to_h(nc.complex.f_vector());
    CHECK(is_symmetric(h));
    CHECK(h_to_gamma(h)[0] == 1);
  }
}

TEST_CASE("homology respects the face budget", "[homology]") {
  CHECK_THROWS_AS(betti(octahedral_sphere(4), 10), BudgetExceeded);
}
