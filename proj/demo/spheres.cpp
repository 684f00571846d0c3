// Vectors of a few flag spheres, a suspension and an edge contraction.
// Usage: gammakk_demo_spheres [facet-file]

#include <iostream>

#include "gammakk/gammakk.hpp"

using namespace gammakk;

static void show(const std::string& name, const Complex& c) {
  const auto h = f_to_h(c.f_vector());
  std::cout << name << ": f=" << to_string(c.f_vector()) << " h=" << to_string(h);
  if (is_symmetric(h)) std::cout << " gamma=" << to_string(h_to_gamma(h));
  std::cout << " flag=" << is_flag(c) << " sphere=" << is_homology_sphere(c) << "\n";
}

int main(int argc, char** argv) {
  try {
    if (argc > 1) {
      show(argv[1], read_complex(argv[1]));
      return 0;
    }
    const Complex pent = polygon(5);
    show("pentagon", pent);
    show("susp(pentagon)", suspension(pent).complex);
    show("pentagon * pentagon", join(pent, pent).complex);
    show("octahedral 3-sphere", octahedral_sphere(4));

    // Contracting an edge of the hexagon gives the pentagon; the link of the
    // edge is {∅}, so gamma drops by t.
    const Complex hex = polygon(6);
    show("hexagon", hex);
    show("hexagon / {0,1}", contract_edge(hex, 0, 1));

    for (const auto& g : exceptional_groups())
      std::cout << g << ": gamma=" << to_string(exceptional_gamma(g))
                << " kk=" << kk_check(exceptional_gamma(g)) << "\n";
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
