// Builds the gamma-complexes for small n and compares their f-vectors with
// the gamma-vectors of the matching Coxeter complexes and polytopes.

#include <iostream>

#include "gammakk/gammakk.hpp"

using namespace gammakk;

int main() {
  for (int n = 2; n <= 5; ++n) {
    std::cout << "n=" << n << "\n";
    std::cout << "  A: f=" << to_string(gamma_des(Family::A, n).complex.f_vector())
              << " gamma=" << to_string(h_to_gamma(eulerian(CoxeterType::A, n))) << "\n";
    std::cout << "  B: f=" << to_string(gamma_des(Family::B, n).complex.f_vector())
              << " gamma=" << to_string(h_to_gamma(eulerian(CoxeterType::B, n))) << "\n";
    std::cout << "  assoc: f=" << to_string(gamma_assoc(n).complex.f_vector())
              << " des counts=" << to_string(count_by_des(enumerate_pk312(n))) << "\n";
    std::cout << "  cyc: f=" << to_string(gamma_cyc(n).complex.f_vector()) << "\n";
  }

  // phi splits a decorated permutation into one vertex per bar.
  const DecPerm w = parse_decperm("4|0 238|1 76519");
  std::cout << render(w) << " ->";
  for (const DecPerm& v : phi(w)) std::cout << " " << render(v);
  std::cout << "\nback: " << render(phi_inverse(phi(w), w.n())) << "\n";
}
