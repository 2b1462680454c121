// Tau table of k fibres over the (-5)-vertex of the (-5)-(-2) plumbing,
// whose boundary is L(9,2).
//
//   demo_lens_space_tau [k]

#include <cstdlib>
#include <iostream>

#include "plumbtau/plumbtau.hpp"

int main(int argc, char** argv) {
  using namespace plumbtau;
  const int k = argc > 1 ? std::atoi(argv[1]) : 3;
  PlumbingLattice lat(catalog::lens_9_2());
  LeafLink link = catalog::fibre_link_9_2(k);

  std::cout << "|H_1| = " << lat.h1_order() << ", link with " << link.components() << " components\n";
  for (const auto& row : tau_table(lat, link)) {
    std::cout << "  class " << format_vector(row.cls.representative) << "  d = " << to_string(row.d)
              << "  tau = " << to_string(row.tau.value) << "\n";
  }
  auto subset = d0_classes(lat);
  auto profile = make_profile(lat, link, subset);
  auto bound = pl_genus_lower_bound(profile, subset);
  std::cout << "PL genus >= " << bound.ceiling << " (raw " << to_string(bound.raw) << ")\n";
  std::cout << "integrality at " << format_vector(subset.front().representative) << ": "
            << to_string(integrality_obstruction(profile.tau.front()).outcome) << "\n";
}
