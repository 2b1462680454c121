#pragma once

// Standard worked examples on the lens spaces L(4,1) and L(9,2): their
// plumbings, Stein surgery presentations, leaf links and curve data.

#include <vector>

#include "plumbtau/surgery_calculus.hpp"
#include "plumbtau/tau_lattice.hpp"

namespace plumbtau::catalog {

/// L(4,1) as the boundary of the (-4) disk bundle.
inline PlumbingTree lens_4_1() { return make_chain({-4}); }

/// L(9,2) as the boundary of the (-5)-(-2) plumbing.
inline PlumbingTree lens_9_2() { return make_chain({-5, -2}); }

/// One Legendrian unknot with tb = -3 and rot = `rot`, and `components`
/// meridional link components.
inline SurgeryPresentation disk_bundle_4(int rot, int components) {
  SurgeryPresentation p;
  p.components = {{ComponentKind::contact_minus_one, -3, rot}};
  p.linking = IntMatrix(1, 1);
  p.link_components.assign(static_cast<std::size_t>(components), to_int_vector({1}));
  return p;
}

/// Chain of unknots with tb = -4 (rot = `rot`) and tb = -1 (rot = 0),
/// linking once, and `components` meridians of the first.
inline SurgeryPresentation chain_5_2(int rot, int components) {
  SurgeryPresentation p;
  p.components = {{ComponentKind::contact_minus_one, -4, rot}, {ComponentKind::contact_minus_one, -1, 0}};
  p.linking = IntMatrix{{0, 1}, {1, 0}};
  p.link_components.assign(static_cast<std::size_t>(components), to_int_vector({1, 0}));
  return p;
}

/// The 2d-component link on L(4,1): 2d fibres over the single vertex.
inline LeafLink link_2d(int d) { return LeafLink{to_int_vector({2LL * d})}; }

/// k fibres over the (-5)-vertex of L(9,2).
inline LeafLink fibre_link_9_2(int k) { return LeafLink{to_int_vector({k, 0})}; }

/// Genus (d-1)(d-2)/2 curve of degree d meeting the boundary in b circles.
inline CurveDatum plane_curve(int d, int boundary) {
  Integer genus = Integer(d - 1) * (d - 2) / 2;
  return {euler_characteristic(genus, boundary), 0, 0, boundary};
}

}  // namespace plumbtau::catalog
