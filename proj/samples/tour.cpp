// Walks the four-element example through every representation.
#include <iostream>

#include "splitmerge/examples.hpp"
#include "splitmerge/splitmerge.hpp"

int main() {
  using namespace splitmerge;

  const MatLabeledGraph g = worked::k4_graph();
  const RegularVine v = graph_to_vine(g);
  const PreferenceDomain d = vine_to_domain(v);
  const SubsetLattice l = vine_to_lattice(v);

  std::cout << to_text(g) << "\n" << to_text(v) << "\n" << to_text(d) << "\n";
  std::cout << "lattice elements: " << l.count() << ", B(3)-free: " << std::boolalpha << is_b3_free(l) << "\n";

  const auto carried = transport<MatGraphSpecies, DomainSpecies>(g);
  std::cout << "transport agrees with the explicit map: " << (carried == d) << "\n";

  const auto c = canonicalize(v);
  std::cout << "automorphisms: " << c.automorphisms << ", richness: " << richness_via_vine(v)
            << ", D-vine: " << is_d_vine(v) << "\n";

  for (int n = 1; n <= 6; ++n)
    std::cout << "n=" << n << " labeled=" << labeled_count_formula(n) << " unlabeled=" << unlabeled_count_formula(n)
              << "\n";
}
