#include <catch_amalgamated.hpp>

#include "gammakk/gammakk.hpp"
#include "oracles.hpp"

using namespace gammakk;

TEST_CASE("type A Coxeter complexes", "[models]") {
  auto hex = coxeter_complex(CoxeterType::A, 3);
  CHECK(hex.f_vector() == IntVector{1, 6, 6});
  CHECK(f_to_h(hex.f_vector()) == IntVector{1, 4, 1});
  CHECK(f_to_h(coxeter_complex(CoxeterType::A, 4).f_vector()) == IntVector{1, 11, 11, 1});
  for (int n = 1; n <= 6; ++n) {
    auto c = coxeter_complex(CoxeterType::A, n);
    CHECK(f_to_h(c.f_vector()) == oracle::eulerian_A(n));
    CHECK(is_flag(c));
    CHECK(is_homology_sphere(c));
  }
  CHECK_THROWS_AS(coxeter_complex(CoxeterType::A, 7), BudgetExceeded);
  CHECK_THROWS_AS(coxeter_complex(CoxeterType::D, 3), DomainError);
}

TEST_CASE("type B Coxeter complexes", "[models]") {
  auto oct = coxeter_complex(CoxeterType::B, 2);
  CHECK(oct.f_vector() == IntVector{1, 8, 8});
  CHECK(f_to_h(oct.f_vector()) == IntVector{1, 6, 1});
  for (int n = 1; n <= 4; ++n) {
    auto c = coxeter_complex(CoxeterType::B, n);
    CHECK(f_to_h(c.f_vector()) == oracle::eulerian_B(n));
    CHECK(is_flag(c));
    CHECK(is_homology_sphere(c));
  }
}

TEST_CASE("polygon-diagonal associahedra", "[models]") {
  auto a4 = associahedron_complex(4);
  CHECK(a4.f_vector()[1] == 9);
  CHECK(a4.f_vector()[3] == 14);
  CHECK(f_to_h(a4.f_vector()) == IntVector{1, 6, 6, 1});
  CHECK(f_to_h(associahedron_complex(3).f_vector()) == IntVector{1, 3, 1});
  auto s0 = associahedron_complex(2);
  CHECK(s0.f_vector() == IntVector{1, 2});
  CHECK(f_to_h(s0.f_vector()) == IntVector{1, 1});
  for (int n = 1; n <= 7; ++n) {
    auto c = associahedron_complex(n);
    CHECK(f_to_h(c.f_vector()) == oracle::narayana(n));
    CHECK(narayana(n) == oracle::narayana(n));
    CHECK(f_to_h(c.f_vector()) == gamma_expansion(count_by_des(enumerate_pk312(n)), n - 1));
    CHECK(is_flag(c));
    CHECK(is_homology_sphere(c));
  }
}

TEST_CASE("exceptional gamma-vectors", "[models]") {
  CHECK(exceptional_gamma("H3") == IntVector{1, 56});
  CHECK(exceptional_gamma("E8") == IntVector{1, 881744, 23045856, 63613184, 17111296});
  CHECK(exceptional_gamma("I2(6)") == exceptional_gamma("G2"));
  CHECK(exceptional_gamma("I2(5)") == IntVector{1, 6});
  CHECK_THROWS_AS(exceptional_gamma("I2(2)"), DomainError);
  CHECK_THROWS_AS(exceptional_gamma("E9"), DomainError);
  CHECK(exceptional_groups().size() == 7);
  for (const auto& g : exceptional_groups()) {
    CHECK(kk_check(exceptional_gamma(g)));
    CHECK(ffk_check(exceptional_gamma(g)));
  }
}

TEST_CASE("flag 2-spheres on few vertices", "[models]") {
  auto spheres = enumerate_flag_2spheres(8);
  std::map<std::size_t, int> by_n;
  for (const auto& c : spheres) {
    const auto n = c.vertices().size();
    ++by_n[n];
    CHECK(is_flag(c));
    CHECK(is_homology_sphere(c));
    const auto g = h_to_gamma(f_to_h(c.f_vector()));
    CHECK(g[1] == static_cast<std::int64_t>(n) - 6);
    CHECK(g[1] >= 0);
  }
  CHECK(by_n[6] == 1);
  CHECK(spheres.front() == octahedral_sphere(3));
  CHECK(by_n[7] >= 1);
  CHECK(by_n[8] >= 1);
  CHECK_THROWS_AS(enumerate_flag_2spheres(9), BudgetExceeded);
}

TEST_CASE("sphere catalog", "[models]") {
  auto cat = sphere_catalog(12);
  CHECK(cat.size() > 30);
  std::set<std::string> names;
  for (const auto& nc : cat) {
    CHECK(names.insert(nc.name).second);
    CHECK(nc.complex.vertices().size() <= 12);
  }
  CHECK(names.count("polygon(5)*polygon(5)"));
}
