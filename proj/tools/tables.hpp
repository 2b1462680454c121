#pragma once

// Reference tables for the lens-space examples, computed through the library.
// Each builder returns the same JSON shape as the matching fixture in
// data/golden.

#include <string>

#include "plumbtau/catalog.hpp"
#include "plumbtau/io.hpp"
#include "plumbtau/obstructions.hpp"

namespace plumbtau::tables {

using io::json;

inline json m3() {
  PlumbingLattice lat(catalog::lens_9_2());
  auto link = catalog::fibre_link_9_2(3);
  json rows = json::array();
  for (const auto& s : d0_classes(lat))
    rows.push_back({{"class", io::to_json(s.representative)}, {"tau", io::to_json(tau(lat, link, s).value)}});
  return {{"rows", rows}};
}

inline json nk() {
  PlumbingLattice lat(catalog::lens_9_2());
  const auto s1 = lat.class_of(to_int_vector({-3, 0}));
  const auto s0 = lat.class_of(to_int_vector({-1, 2}));
  const auto s2 = lat.class_of(to_int_vector({3, 0}));
  const auto subset = d0_classes(lat);
  json rows = json::array();
  for (int k = 1; k <= 30; ++k) {
    auto link = catalog::fibre_link_9_2(k);
    auto profile = make_profile(lat, link, subset);
    Rational t1 = tau(lat, link, s1).value;
    rows.push_back({{"k", k},
                    {"tau_s1", io::to_json(t1)},
                    {"tau_s0", io::to_json(tau(lat, link, s0).value)},
                    {"tau_s2", io::to_json(tau(lat, link, s2).value)},
                    {"integrality_fires", integrality_obstruction(t1).fires()},
                    {"metaboliser_fires_at_s2", metaboliser_obstruction(lat, profile, s2).fires()}});
  }
  return {{"rows", rows}};
}

inline json l2d() {
  PlumbingLattice lat(catalog::lens_4_1());
  const auto subset = d0_classes(lat);
  json rows = json::array();
  for (int d = 1; d <= 10; ++d) {
    auto link = catalog::link_2d(d);
    auto ext = tau_extrema(lat, link, subset);
    auto bound = pl_genus_lower_bound(make_profile(lat, link, subset), subset);
    auto j1 = catalog::disk_bundle_4(-2, 2 * d);
    auto j2 = catalog::disk_bundle_4(2, 2 * d);
    Rational c2 = self_intersection(j1);
    auto disks = [&](const SurgeryPresentation& p) {
      return tau_from_curve({2 * d, chern_evaluation(p), self_intersection(p), 2 * d});
    };
    rows.push_back({{"d", d},
                    {"tau_max", io::to_json(ext.max)},
                    {"tau_min", io::to_json(ext.min)},
                    {"difference", io::to_json(ext.max - ext.min)},
                    {"pl_bound", bound.ceiling.convert_to<long long>()},
                    {"self_intersection", io::to_json(c2)},
                    {"chern_j1", io::to_json(chern_evaluation(j1))},
                    {"chern_j2", io::to_json(chern_evaluation(j2))},
                    {"tau_disks_j1", io::to_json(disks(j1))},
                    {"tau_disks_j2", io::to_json(disks(j2))},
                    {"tau_curve", io::to_json(tau_from_curve(catalog::plane_curve(d, 2 * d)))}});
  }
  return {{"rows", rows}};
}

inline json m3d() {
  json rows = json::array();
  for (int d = 1; d <= 10; ++d) {
    auto j1 = catalog::chain_5_2(-3, 3 * d);
    auto j2 = catalog::chain_5_2(3, 3 * d);
    Rational c2 = self_intersection(j2);
    Rational c1 = chern_evaluation(j2);
    // The smooth curve in the plumbing: 2d meridional disks plus one
    // connected piece of genus (d-1)(d-2)/2; compare with the 2d+1 component
    // unlink in the three-sphere.
    Integer genus = Integer(d - 1) * (d - 2) / 2;
    rows.push_back({{"d", d},
                    {"self_intersection", io::to_json(c2)},
                    {"chern_j1", io::to_json(chern_evaluation(j1))},
                    {"chern_j2", io::to_json(c1)},
                    {"tau_curve", io::to_json(tau_from_curve(catalog::plane_curve(d, 3 * d)))},
                    {"conjugate_lower", io::to_json(adjunction_lower_bound(0, genus, 3 * d, 2 * d + 1, c1, c2))},
                    {"conjugate_upper", io::to_json(adjunction_bound(0, genus, 3 * d, 2 * d + 1, c1, c2))}});
  }
  return {{"rows", rows}};
}

inline json eq72() {
  PlumbingLattice lat(catalog::lens_9_2());
  json sols = json::array();
  for (const auto& k : lat.solve_square(Rational(-2))) sols.push_back(io::to_json(k));
  return {{"target", "-2"}, {"solutions", sols}};
}

inline json build(const std::string& name) {
  if (name == "m3") return m3();
  if (name == "nk") return nk();
  if (name == "l2d") return l2d();
  if (name == "m3d") return m3d();
  if (name == "eq72") return eq72();
  throw SchemaError("unknown table '" + name + "'");
}

}  // namespace plumbtau::tables
