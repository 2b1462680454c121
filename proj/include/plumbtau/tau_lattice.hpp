#pragma once

// Tau-invariants of links formed by disk fibres over unmarked leaves of a
// negative-definite plumbing:
//   tau(L, s) = 1/2 min_k k^T Q^{-1} m  -  1/2 m^T Q^{-1} m
// where m is the fibre-multiplicity vector and k runs over the characteristic
// vectors of s that realise the correction term.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plumbtau/plumbing_lattice.hpp"

namespace plumbtau {

struct LeafLink {
  IntVector multiplicities;

  /// Each fibre strand is one component.
  Integer components() const {
    Integer total = 0;
    for (const auto& m : multiplicities) total += m;
    return total;
  }
};

/// Link from per-vertex strand counts. Every vertex carrying strands must be an
/// unmarked leaf of the tree.
inline LeafLink make_leaf_link(const PlumbingTree& tree, const std::map<std::string, Integer>& strands) {
  auto marks = tree.markings();
  LeafLink link{IntVector(tree.vertices.size(), 0)};
  for (const auto& [id, count] : strands) {
    std::size_t i = tree.index_of(id);
    if (count < 0) throw PreconditionError("leaf_link: negative strand count on vertex '" + id + "'");
    if (count != 0 && marks[i] != Marking::unmarked_leaf)
      throw PreconditionError("leaf_link: vertex '" + id + "' is not an unmarked leaf");
    link.multiplicities[i] = count;
  }
  return link;
}

/// m^T Q^{-1} m.
inline Rational sigma_square(const PlumbingLattice& lat, const LeafLink& link) {
  return pair(lat.q_inverse(), link.multiplicities, link.multiplicities);
}

/// k^T Q^{-1} m.
inline Rational pairing(const PlumbingLattice& lat, const CharVector& kappa, const LeafLink& link) {
  return pair(lat.q_inverse(), kappa, link.multiplicities);
}

struct TauValue {
  Rational value;
  CharVector minimizer;  // lexicographically least among minimisers
};

inline TauValue tau(const PlumbingLattice& lat, const LeafLink& link, const SpincClass& s) {
  if (link.multiplicities.size() != lat.rank()) throw DimensionError("tau: link does not match the form");
  const auto& reps = lat.maximal_representatives(s);
  TauValue best{pairing(lat, reps.front(), link), reps.front()};
  for (std::size_t i = 1; i < reps.size(); ++i) {
    Rational p = pairing(lat, reps[i], link);
    if (p < best.value) best = {p, reps[i]};
  }
  best.value = (best.value - sigma_square(lat, link)) / 2;
  return best;
}

struct TauRow {
  SpincClass cls;
  Rational d;
  TauValue tau;
};

/// One row per class, ordered by canonical representative.
inline std::vector<TauRow> tau_table(const PlumbingLattice& lat, const LeafLink& link) {
  std::vector<TauRow> out;
  for (const auto& s : lat.classes()) out.push_back({s, lat.d_invariant(s), tau(lat, link, s)});
  return out;
}

/// Classes with vanishing correction term.
inline std::vector<SpincClass> d0_classes(const PlumbingLattice& lat) {
  std::vector<SpincClass> out;
  for (const auto& s : lat.classes())
    if (lat.d_invariant(s) == 0) out.push_back(s);
  return out;
}

/// "all", "d0", or a list of characteristic vectors naming classes.
inline std::vector<SpincClass> select_classes(const PlumbingLattice& lat, const std::string& selector) {
  if (selector == "all") return lat.classes();
  if (selector == "d0") return d0_classes(lat);
  throw PreconditionError("unknown Spin^c selector '" + selector + "'");
}

inline std::vector<SpincClass> select_classes(const PlumbingLattice& lat, const std::vector<CharVector>& reps) {
  std::vector<SpincClass> out;
  for (const auto& k : reps) {
    auto s = lat.class_of(k);
    bool seen = false;
    for (const auto& t : out) seen = seen || t == s;
    if (!seen) out.push_back(s);
  }
  return out;
}

struct TauExtrema {
  Rational max;
  Rational min;
};

inline TauExtrema tau_extrema(const PlumbingLattice& lat, const LeafLink& link, const std::vector<SpincClass>& subset) {
  if (subset.empty()) throw PreconditionError("tau_extrema: empty Spin^c subset");
  Rational first = tau(lat, link, subset.front()).value;
  TauExtrema ext{first, first};
  for (std::size_t i = 1; i < subset.size(); ++i) {
    Rational t = tau(lat, link, subset[i]).value;
    if (t > ext.max) ext.max = t;
    if (t < ext.min) ext.min = t;
  }
  return ext;
}

}  // namespace plumbtau
