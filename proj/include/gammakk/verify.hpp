#pragma once

// Named verification checks grouped by acceptance criterion and suite.

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gammakk/complex.hpp"
#include "gammakk/decorated.hpp"
#include "gammakk/gamma_complexes.hpp"
#include "gammakk/homology.hpp"
#include "gammakk/models.hpp"
#include "gammakk/permstats.hpp"
#include "gammakk/vectors.hpp"

namespace gammakk {

inline IntVector gamma_of(const Complex& c) { return h_to_gamma(f_to_h(c.f_vector())); }

struct CheckResult {
  bool pass = true;
  std::string detail;
};

struct Check {
  int criterion;
  std::string id;
  std::set<std::string> suites;
  std::function<CheckResult()> run;
};

/// Wall-clock limit in seconds for each criterion (0 = none).
inline double criterion_time_limit(int criterion) {
  static const std::map<int, double> limits = {{1, 30}, {2, 60}, {3, 120}, {5, 1},
                                               {6, 300}, {8, 600}, {9, 300}};
  auto it = limits.find(criterion);
  return it == limits.end() ? 0.0 : it->second;
}

namespace detail {

/// Collects mismatches; the first few are kept in the detail text.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 6) notes_ << (failed_ > 1 ? "; " : "") << what;
  }
  void note(const std::string& s) { extra_ << (extra_.tellp() > 0 ? "; " : "") << s; }
  CheckResult result() const {
    std::ostringstream d;
    d << (total_ - failed_) << "/" << total_ << " ok";
    if (failed_) d << "; failures: " << notes_.str();
    if (!extra_.str().empty()) d << "; " << extra_.str();
    return {failed_ == 0, d.str()};
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::ostringstream notes_;
  std::ostringstream extra_;
};

inline std::string vs(const IntVector& got, const IntVector& want) {
  return to_string(got) + " vs " + to_string(want);
}

inline std::int64_t multinomial_iin(int n, int i) {
  std::int64_t f[21] = {1};
  for (int k = 1; k <= 20; ++k) f[k] = f[k - 1] * k;
  return f[n] / (f[i] * f[i] * f[n - 2 * i]);
}

inline CheckResult check_foata_schutzenberger() {
  Tally t;
  for (int n = 1; n <= 8; ++n) {
    auto lhs = gamma_expansion(count_by_des(enumerate_pk(n)), n - 1);
    auto rhs = eulerian(CoxeterType::A, n);
    t.expect(poly_equal(lhs, rhs), "n=" + std::to_string(n) + " " + vs(lhs, rhs));
  }
  return t.result();
}

inline CheckResult check_decorated_expansions() {
  Tally t;
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_decorated(n);
    auto lhs = gamma_expansion(count_by_pk(all), n);
    auto rhs = eulerian(CoxeterType::B, n);
    t.expect(poly_equal(lhs, rhs), "B n=" + std::to_string(n) + " " + vs(lhs, rhs));
    if (n < 2) continue;
    std::vector<DecPerm> d;
    for (auto& x : all)
      if (is_type_D(x)) d.push_back(x);
    auto lhs_d = gamma_expansion(count_by_pk(d), n);
    auto rhs_d = eulerian(CoxeterType::D, n);
    t.expect(poly_equal(lhs_d, rhs_d), "D n=" + std::to_string(n) + " " + vs(lhs_d, rhs_d));
  }
  return t.result();
}

inline CheckResult check_gamma_des(Family f, int lo, int hi) {
  Tally t;
  const CoxeterType type = f == Family::A ? CoxeterType::A : f == Family::B ? CoxeterType::B : CoxeterType::D;
  for (int n = lo; n <= hi; ++n) {
    auto got = gamma_des(f, n).complex.f_vector();
    auto want = h_to_gamma(eulerian(type, n));
    t.expect(poly_equal(got, want), family_name(f) + " n=" + std::to_string(n) + " " + vs(got, want));
  }
  return t.result();
}

inline CheckResult check_gamma_assoc() {
  Tally t;
  for (int n = 1; n <= 8; ++n) {
    auto got = gamma_assoc(n).complex.f_vector();
    auto want = count_by_des(enumerate_pk312(n));
    t.expect(poly_equal(got, want), "n=" + std::to_string(n) + " " + vs(got, want));
  }
  t.expect(poly_equal(gamma_assoc(5).complex.f_vector(), {1, 6, 2}), "spot gamma(Ass_5) = (1,6,2)");
  return t.result();
}

inline CheckResult check_gamma_cyc() {
  Tally t;
  for (int n = 1; n <= 8; ++n) {
    auto got = gamma_cyc(n).complex.f_vector();
    IntVector want;
    for (int i = 0; 2 * i <= n; ++i) want.push_back(multinomial_iin(n, i));
    t.expect(poly_equal(got, want), "n=" + std::to_string(n) + " " + vs(got, want));
  }
  t.expect(poly_equal(gamma_cyc(4).complex.f_vector(), {1, 12, 6}), "spot gamma(Cyc_4) = (1,12,6)");
  return t.result();
}

inline CheckResult check_phi_bijection() {
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    t.expect(verify_poset_iso(n), "poset isomorphism n=" + std::to_string(n));
    for (const auto& w : enumerate_decorated(n)) {
      bool ok = false;
      try {
        ok = phi_inverse(phi(w), n) == w;
      } catch (const Error&) {
      }
      t.expect(ok, "phi_inverse(phi(" + render(w) + "))");
    }
  }
  const DecPerm u = parse_decperm("3|0 124"), v = parse_decperm("13|0 24");
  t.expect(adjacent_des_bullets(u, v), "bullets accept 3|0 124, 13|0 24");
  t.expect(!is_valid(assemble(u, v)), "assembled " + render(assemble(u, v)) + " is invalid");
  t.expect(!adjacent_des(u, v), "normative adjacency rejects 3|0 124, 13|0 24");
  auto bullets = flag_complex(des_vertices(Family::B, 4), adjacent_des_bullets).complex.f_vector();
  auto want = h_to_gamma(eulerian(CoxeterType::B, 4));
  t.expect(!poly_equal(bullets, want), "bullets-only complex differs from gamma(B_4)");
  t.note("bullets-only n=4 f=" + to_string(bullets) + ", gamma(B_4)=" + to_string(want));
  return t.result();
}

inline CheckResult check_exceptional() {
  Tally t;
  std::vector<std::string> groups = exceptional_groups();
  for (int m = 3; m <= 12; ++m) groups.push_back("I2(" + std::to_string(m) + ")");
  for (const auto& g : groups) {
    auto v = exceptional_gamma(g);
    t.expect(kk_check(v), g + " kk");
    t.expect(ffk_check(v), g + " ffk");
  }
  return t.result();
}

inline CheckResult check_kk_grid() {
  Tally t;
  int vectors = 0;
  for (int f1 = 0; f1 <= 6; ++f1) {
    const auto c2 = static_cast<int>(binomial(f1, 2)), c3 = static_cast<int>(binomial(f1, 3));
    std::vector<IntVector> grid{{1}, {1, f1}};
    for (int f2 = 0; f2 <= c2 + 1; ++f2) {
      grid.push_back({1, f1, f2});
      for (int f3 = 0; f3 <= c3 + 1; ++f3) grid.push_back({1, f1, f2, f3});
    }
    for (const auto& v : grid) {
      ++vectors;
      const bool kk = kk_check(v);
      const bool compressed = kk_realize_compressed(v).has_value();
      const bool brute = fvector_exists(v, 6);
      t.expect(kk == compressed && kk == brute,
               "kk " + to_string(v) + " check=" + std::to_string(kk) + " compressed=" +
                   std::to_string(compressed) + " brute=" + std::to_string(brute));
    }
  }
  for (int f1 = 0; f1 <= 6; ++f1) {
    const auto c2 = static_cast<int>(binomial(f1, 2));
    std::vector<IntVector> grid{{1}, {1, f1}};
    for (int f2 = 0; f2 <= c2 + 1; ++f2) grid.push_back({1, f1, f2});
    for (const auto& v : grid) {
      for (int r = std::max(1, default_colors(v)); r <= 3; ++r) {
        ++vectors;
        const bool ffk = ffk_check(v, r);
        const bool brute = balanced_fvector_exists(v, r, 6);
        t.expect(ffk == brute, "ffk " + to_string(v) + " r=" + std::to_string(r) + " check=" +
                                   std::to_string(ffk) + " brute=" + std::to_string(brute));
        t.expect(!ffk || kk_check(v), "ffk implies kk " + to_string(v));
      }
    }
  }
  t.note(std::to_string(vectors) + " grid vectors");
  return t.result();
}

inline bool flag_sphere(const Complex& c) { return is_flag(c) && is_homology_sphere(c); }

inline CheckResult check_contraction() {
  Tally t;
  {
    Complex hex = polygon(6);
    Complex pent = contract_edge(hex, 0, 1);
    auto lhs = gamma_of(hex);
    auto rhs = poly_add(gamma_of(pent), poly_shift(gamma_of(link(hex, {0, 1})), 1));
    t.expect(flag_sphere(pent) && pent.f_vector() == IntVector{1, 5, 5} && poly_equal(lhs, rhs),
             "hexagon -> pentagon " + vs(lhs, rhs));
  }
  int edges = 0, suspensions = 0;
  for (const auto& entry : sphere_catalog(12)) {
    const Complex& c = entry.complex;
    if (!flag_sphere(c)) {
      t.expect(false, entry.name + " is not a flag sphere");
      continue;
    }
    const auto g = gamma_of(c);
    auto gs = gamma_of(suspension(c).complex);
    ++suspensions;
    t.expect(poly_equal(g, gs), "suspension " + entry.name + " " + vs(gs, g));
    if (entry.name.find("susp") == std::string::npos && entry.name.find('*') == std::string::npos) continue;
    for (const Face& e : c.faces_of_size(2)) {
      if (has_induced_4cycle_through(c, e[0], e[1])) continue;
      Complex d = contract_edge(c, e[0], e[1]);
      if (!is_homology_sphere(d)) continue;
      ++edges;
      auto rhs = poly_add(gamma_of(d), poly_shift(gamma_of(link(c, e)), 1));
      t.expect(is_flag(d), "contraction of " + entry.name + " is not flag");
      t.expect(poly_equal(g, rhs), "contraction " + entry.name + " " + vs(g, rhs));
    }
  }
  t.expect(edges >= 20, "at least 20 admissible edges (found " + std::to_string(edges) + ")");
  t.note(std::to_string(edges) + " admissible edges, " + std::to_string(suspensions) + " suspensions");
  return t.result();
}

inline CheckResult check_small_spheres() {
  Tally t;
  const auto spheres = enumerate_flag_2spheres(8);
  std::map<std::size_t, int> by_n;
  for (const auto& c : spheres) {
    const auto n = c.vertices().size();
    ++by_n[n];
    auto g = trimmed(gamma_of(c));
    t.expect(g == IntVector{1} || g == IntVector{1, 1} || g == IntVector{1, 2},
             std::to_string(n) + "-vertex sphere gamma " + to_string(g));
    t.expect(g.size() < 2 || g[1] == static_cast<std::int64_t>(n) - 6, "gamma_1 = f_0 - 6");
  }
  t.expect(by_n[6] == 1, "exactly one 6-vertex flag 2-sphere");
  for (const auto& c : spheres)
    if (c.vertices().size() == 6)
      t.expect(c.f_vector() == IntVector{1, 6, 12, 8} && is_flag(c) &&
                   std::all_of(c.vertices().begin(), c.vertices().end(),
                               [&](Vertex v) { return interior_antistar_vertices(c, v).size() == 1; }),
               "6-vertex sphere is the octahedron");
  const std::vector<std::pair<std::string, Complex>> witnesses = {
      {"octahedron", octahedral_sphere(3)},
      {"pentagon", polygon(5)},
      {"hexagon", polygon(6)},
      {"pentagon*pentagon", join(polygon(5), polygon(5)).complex}};
  const std::vector<IntVector> polys = {{1}, {1, 1}, {1, 2}, {1, 2, 1}};
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& [name, c] = witnesses[i];
    auto g = trimmed(gamma_of(c));
    t.expect(flag_sphere(c) && g == polys[i], name + " gamma " + to_string(g));
  }
  std::ostringstream counts;
  for (auto [n, k] : by_n) counts << (counts.tellp() > 0 ? " " : "") << n << "v:" << k;
  t.note("catalog " + counts.str());
  return t.result();
}

inline CheckResult check_coxeter_models() {
  Tally t;
  for (int n = 1; n <= 6; ++n) {
    Complex c = coxeter_complex(CoxeterType::A, n);
    auto h = f_to_h(c.f_vector()), want = eulerian(CoxeterType::A, n);
    t.expect(poly_equal(h, want), "A n=" + std::to_string(n) + " " + vs(h, want));
    t.expect(flag_sphere(c), "A n=" + std::to_string(n) + " flag sphere");
  }
  for (int n = 1; n <= 4; ++n) {
    Complex c = coxeter_complex(CoxeterType::B, n);
    auto h = f_to_h(c.f_vector()), want = eulerian(CoxeterType::B, n);
    t.expect(poly_equal(h, want), "B n=" + std::to_string(n) + " " + vs(h, want));
    t.expect(flag_sphere(c), "B n=" + std::to_string(n) + " flag sphere");
  }
  return t.result();
}

inline CheckResult check_associahedron_model() {
  Tally t;
  for (int n = 1; n <= 7; ++n) {
    Complex c = associahedron_complex(n);
    auto h = f_to_h(c.f_vector()), want = narayana(n);
    t.expect(poly_equal(h, want), "n=" + std::to_string(n) + " " + vs(h, want));
    auto via_pk = gamma_expansion(count_by_des(enumerate_pk312(n)), n - 1);
    t.expect(poly_equal(h, via_pk), "n=" + std::to_string(n) + " Pk312 expansion " + vs(h, via_pk));
    t.expect(flag_sphere(c), "n=" + std::to_string(n) + " flag sphere");
  }
  return t.result();
}

inline CheckResult check_gal34() {
  Tally t;
  int spheres3 = 0;
  for (const auto& entry : sphere_catalog(12)) {
    if (entry.complex.dim() != 3 || !flag_sphere(entry.complex)) continue;
    ++spheres3;
    auto g = gamma_of(entry.complex);
    t.expect(gal_34_check(g), entry.name + " gamma " + to_string(g));
  }
  t.expect(spheres3 > 0, "catalog has flag 3-spheres");
  for (int n = 4; n <= 8; ++n) {
    auto g = h_to_gamma(eulerian(CoxeterType::A, n));
    t.expect(gal_34_check(g), "gamma(A_" + std::to_string(n - 1) + ")");
  }
  for (int n = 2; n <= 6; ++n) {
    t.expect(gal_34_check(h_to_gamma(eulerian(CoxeterType::B, n))), "gamma(B_" + std::to_string(n) + ")");
    t.expect(gal_34_check(h_to_gamma(eulerian(CoxeterType::D, n))), "gamma(D_" + std::to_string(n) + ")");
  }
  for (int n = 1; n <= 8; ++n) {
    t.expect(gal_34_check(gamma_assoc(n).complex.f_vector()), "f(Gamma(Pk_" + std::to_string(n) + "(312)))");
    t.expect(gal_34_check(gamma_cyc(n).complex.f_vector()), "f(Gamma(P_" + std::to_string(n) + "))");
  }
  t.note(std::to_string(spheres3) + " flag 3-spheres");
  return t.result();
}

inline CheckResult check_gamma_inequalities() {
  Tally t;
  auto both = [&](const IntVector& v, const std::string& what) {
    t.expect(kk_check(v), what + " kk " + to_string(v));
    t.expect(ffk_check(v), what + " ffk " + to_string(v));
  };
  for (int n = 1; n <= 7; ++n) both(gamma_des(Family::A, n).complex.f_vector(), "Gamma A n=" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) both(gamma_des(Family::B, n).complex.f_vector(), "Gamma B n=" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) both(gamma_des(Family::D, n).complex.f_vector(), "Gamma D n=" + std::to_string(n));
  for (int n = 1; n <= 8; ++n) both(gamma_assoc(n).complex.f_vector(), "Gamma assoc n=" + std::to_string(n));
  for (int n = 1; n <= 8; ++n) both(gamma_cyc(n).complex.f_vector(), "Gamma cyc n=" + std::to_string(n));
  for (int n = 1; n <= 8; ++n) both(h_to_gamma(eulerian(CoxeterType::A, n)), "gamma(A) n=" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) both(h_to_gamma(eulerian(CoxeterType::B, n)), "gamma(B) n=" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) both(h_to_gamma(eulerian(CoxeterType::D, n)), "gamma(D) n=" + std::to_string(n));
  return t.result();
}

inline CheckResult check_pi_psi_roundtrips() {
  Tally t;
  for (int n = 1; n <= 8; ++n)
    for (const Perm& w : enumerate_pk312(n)) {
      bool ok = false;
      try {
        ok = pi_inverse(pi(w), n) == w;
      } catch (const Error&) {
      }
      t.expect(ok, "pi round trip " + render_perm(w));
    }
  for (int n = 0; n <= 8; ++n)
    for (const auto& s : enumerate_pairs(n)) t.expect(psi_inverse(psi(s)) == s, "psi round trip");
  return t.result();
}

}  // namespace detail

inline const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {1, "foata-schutzenberger", {"coxeter"}, detail::check_foata_schutzenberger},
      {2, "decorated-eulerian-B-D", {"coxeter"}, detail::check_decorated_expansions},
      {3, "gamma-complex-A", {}, [] { return detail::check_gamma_des(Family::A, 1, 7); }},
      {3, "gamma-complex-B", {}, [] { return detail::check_gamma_des(Family::B, 1, 6); }},
      {3, "gamma-complex-D", {}, [] { return detail::check_gamma_des(Family::D, 2, 6); }},
      {3, "gamma-complex-assoc", {"assoc"}, detail::check_gamma_assoc},
      {3, "gamma-complex-cyc", {"cyc"}, detail::check_gamma_cyc},
      {4, "phi-bijection-poset", {}, detail::check_phi_bijection},
      {5, "exceptional-kk-ffk", {"inequalities"}, detail::check_exceptional},
      {6, "kk-ffk-brute-force", {"inequalities"}, detail::check_kk_grid},
      {7, "contraction-suspension", {"small-spheres"}, detail::check_contraction},
      {8, "flag-2-spheres", {"small-spheres"}, detail::check_small_spheres},
      {9, "coxeter-models", {"coxeter"}, detail::check_coxeter_models},
      {9, "associahedron-model", {"assoc"}, detail::check_associahedron_model},
      {10, "gal-dimension-3-4", {"inequalities"}, detail::check_gal34},
      {0, "gamma-complex-inequalities", {"inequalities"}, detail::check_gamma_inequalities},
      {0, "pi-psi-roundtrips", {"assoc", "cyc"}, detail::check_pi_psi_roundtrips},
  };
  return checks;
}

inline std::vector<std::string> suite_names() {
  return {"all", "coxeter", "assoc", "cyc", "small-spheres", "inequalities"};
}

struct CheckOutcome {
  const Check* check;
  CheckResult result;
  double seconds;
};

/// Runs every check in `suite` ("all" selects everything). Errors thrown by a
/// check count as failures.
inline std::vector<CheckOutcome> run_checks(const std::string& suite,
                                            const std::function<void(const CheckOutcome&)>& on_done = {}) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw DomainError("unknown suite \"" + suite + "\"");
  std::vector<CheckOutcome> out;
  for (const Check& c : all_checks()) {
    if (suite != "all" && !c.suites.count(suite)) continue;
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back({&c, r, secs});
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace gammakk
