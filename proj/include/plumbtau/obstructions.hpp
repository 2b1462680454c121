#pragma once

// Decision procedures built on tau-invariants. Each check returns a Verdict:
// `fires` when the obstruction applies (or the inequality is violated),
// `does_not_fire` when it does not, and `inconclusive` when the data cannot
// decide.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "plumbtau/tau_lattice.hpp"

namespace plumbtau {

enum class Outcome { fires, does_not_fire, inconclusive };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::fires: return "fires";
    case Outcome::does_not_fire: return "does_not_fire";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

struct Verdict {
  std::string check;
  Outcome outcome = Outcome::inconclusive;
  std::string witness;
  std::optional<Rational> slack;

  bool fires() const { return outcome == Outcome::fires; }
};

/// Tau and correction-term values on a subset of the Spin^c classes.
struct TauProfile {
  std::vector<SpincClass> classes;
  std::vector<Rational> tau;
  std::vector<Rational> d;
  Integer ell = 1;
  Integer order = 1;  // |H_1|

  std::optional<Rational> find(const SpincClass& s) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i] == s) return tau[i];
    return std::nullopt;
  }

  Rational at(const SpincClass& s) const {
    auto t = find(s);
    if (!t) throw IncompleteDataError("profile has no tau value for the class of " + format_vector(s.representative));
    return *t;
  }
};

inline TauProfile make_profile(const PlumbingLattice& lat, const LeafLink& link, const std::vector<SpincClass>& subset) {
  TauProfile p;
  p.ell = link.components();
  p.order = lat.h1_order();
  for (const auto& s : subset) {
    p.classes.push_back(s);
    p.tau.push_back(tau(lat, link, s).value);
    p.d.push_back(lat.d_invariant(s));
  }
  return p;
}

/// Profile from explicit values, e.g. values obtained from curve data.
inline TauProfile make_profile(const PlumbingLattice& lat, const std::vector<std::pair<SpincClass, Rational>>& values,
                               const Integer& ell) {
  TauProfile p;
  p.ell = ell;
  p.order = lat.h1_order();
  for (const auto& [s, t] : values) {
    lat.check_class(s);
    p.classes.push_back(s);
    p.tau.push_back(t);
    p.d.push_back(lat.d_invariant(s));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Inequality checks
// ---------------------------------------------------------------------------

/// sl <= 2 tau - l. Fires when violated; slack is 2 tau - l - sl.
inline Verdict slice_bennequin_check(const Rational& sl, const Rational& tau_value, const Integer& ell) {
  Rational slack = 2 * tau_value - Rational(ell) - sl;
  Verdict v{"slice-bennequin", slack < 0 ? Outcome::fires : Outcome::does_not_fire, "", slack};
  v.witness = "2*tau - l - sl = " + to_string(slack);
  return v;
}

/// A transverse representative with sl > 2 tau_s - l rules out a rational
/// homology ball Stein filling with contact class s.
inline Verdict qhb4_filling_obstruction(const Rational& tau_s, const Integer& ell, const std::vector<Rational>& sl_values) {
  Verdict v{"qhb4-filling", Outcome::inconclusive, "no self-linking values supplied", std::nullopt};
  if (sl_values.empty()) return v;
  const Rational bound = 2 * tau_s - Rational(ell);
  Rational worst = sl_values.front();
  for (const auto& sl : sl_values) worst = std::max(worst, sl);
  v.slack = bound - worst;
  if (worst > bound) {
    v.outcome = Outcome::fires;
    v.witness = "sl = " + to_string(worst) + " exceeds 2*tau - l = " + to_string(bound);
  } else {
    v.outcome = Outcome::does_not_fire;
    v.witness = "every sl is at most 2*tau - l = " + to_string(bound);
  }
  return v;
}

/// Relative adjunction upper bound
///   tau_alpha + g + l2 - |F| - (c_1[F] + F.F) / 2.
inline Rational adjunction_bound(const Rational& tau_alpha, const Integer& g, const Integer& ell2, const Integer& size_f,
                                 const Rational& c1_f, const Rational& ff) {
  return tau_alpha + Rational(g + ell2 - size_f) - (c1_f + ff) / 2;
}

/// Mirror of adjunction_bound, from the orientation-reversed cobordism:
///   tau_alpha - (g + l2 - |F|) - (c_1[F] + F.F) / 2.
inline Rational adjunction_lower_bound(const Rational& tau_alpha, const Integer& g, const Integer& ell2,
                                       const Integer& size_f, const Rational& c1_f, const Rational& ff) {
  return tau_alpha - Rational(g + ell2 - size_f) - (c1_f + ff) / 2;
}

/// Cobordism genus bounds. Without `unlink`: |tau - tau_0| <= g. With
/// `unlink` (the far end is an |F|-component unlink): -g <= tau <= g + l - |F|.
/// Fires when violated.
inline Verdict genus_bounds_check(const Rational& tau_s, const Rational& tau_l0, const Integer& g, const Integer& ell_l,
                                  const Integer& size_f, bool unlink) {
  Verdict v{"genus-bounds", Outcome::does_not_fire, "", std::nullopt};
  if (unlink) {
    Rational upper = Rational(g + ell_l - size_f);
    Rational lower = Rational(-g);
    v.slack = std::min(upper - tau_s, tau_s - lower);
    v.witness = to_string(lower) + " <= tau = " + to_string(tau_s) + " <= " + to_string(upper);
  } else {
    v.slack = Rational(g) - abs(tau_s - tau_l0);
    v.witness = "|tau - tau_0| = " + to_string(abs(tau_s - tau_l0)) + ", g = " + g.str();
  }
  if (*v.slack < 0) v.outcome = Outcome::fires;
  return v;
}

// ---------------------------------------------------------------------------
// Profile checks
// ---------------------------------------------------------------------------

struct MetaboliserCandidate {
  std::vector<IntVector> generators;
  std::vector<IntVector> elements;  // canonical H_1 representatives, sorted
  Integer order;
};

namespace detail {

inline bool is_integral(const Rational& r) { return is_integer(r); }

// Subgroup of H_1 generated by `gens`, as sorted canonical residues.
inline std::vector<IntVector> subgroup_closure(const PlumbingLattice& lat, const std::vector<IntVector>& gens) {
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  IntVector zero(lat.rank(), 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    IntVector cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      IntVector next(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) next[i] = cur[i] + g[i];
      next = lat.h1_reduce(next);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

/// Subgroups G of H_1 with |G|^2 = |H_1| on which the linking form
/// -a^T Q^{-1} b vanishes mod Z. Empty when |H_1| is not a square.
inline std::vector<MetaboliserCandidate> metaboliser_candidates(const PlumbingLattice& lat) {
  const Integer n = lat.h1_order();
  const Integer root = boost::multiprecision::sqrt(n);
  std::vector<MetaboliserCandidate> out;
  if (root * root != n) return out;
  const auto elements = lat.h1_elements();
  // Isotropic elements of order dividing sqrt(n).
  std::vector<IntVector> pool;
  for (const auto& e : elements) {
    if (!detail::is_integral(lat.linking(e, e))) continue;
    IntVector scaled(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) scaled[i] = e[i] * root;
    if (lat.h1_is_zero(scaled)) pool.push_back(e);
  }
  // Grow subgroups by adjoining pool elements that stay isotropic.
  std::set<std::vector<IntVector>> visited;
  std::deque<std::pair<std::vector<IntVector>, std::vector<IntVector>>> queue;  // (generators, elements)
  queue.push_back({{}, {IntVector(lat.rank(), 0)}});
  visited.insert(queue.front().second);
  while (!queue.empty()) {
    auto [gens, elems] = queue.front();
    queue.pop_front();
    if (Integer(elems.size()) == root) {
      out.push_back({gens, elems, root});
      continue;
    }
    for (const auto& g : pool) {
      if (std::binary_search(elems.begin(), elems.end(), g)) continue;
      bool isotropic = true;
      for (const auto& h : gens) isotropic = isotropic && detail::is_integral(lat.linking(g, h));
      if (!isotropic) continue;
      auto next_gens = gens;
      next_gens.push_back(g);
      auto next = detail::subgroup_closure(lat, next_gens);
      if (Integer(next.size()) > root || root % Integer(next.size()) != 0) continue;
      if (visited.insert(next).second) queue.push_back({next_gens, next});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MetaboliserCandidate& a, const MetaboliserCandidate& b) { return a.elements < b.elements; });
  return out;
}

/// If L bounds a J-curve in a rational-ball Stein filling with contact class
/// s, some metaboliser G satisfies |tau(s + a)| <= tau(s) for all a in G.
/// Fires when no candidate does.
inline Verdict metaboliser_obstruction(const PlumbingLattice& lat, const TauProfile& profile, const SpincClass& s) {
  Verdict v{"metaboliser", Outcome::does_not_fire, "", std::nullopt};
  auto candidates = metaboliser_candidates(lat);
  if (candidates.empty()) {
    v.outcome = Outcome::fires;
    v.witness = "no metaboliser exists: |H_1| = " + lat.h1_order().str() + " is not a square";
    return v;
  }
  const Rational ts = profile.at(s);
  std::string failures;
  for (const auto& g : candidates) {
    std::optional<std::string> broken;
    for (const auto& a : g.elements) {
      SpincClass t = lat.translate(s, a);
      Rational tt = profile.at(t);
      if (abs(tt) > ts && !broken) {
        broken = "|tau" + format_vector(t.representative) + "| = " + to_string(abs(tt)) + " > tau" +
                 format_vector(s.representative) + " = " + to_string(ts);
      }
    }
    if (!broken) {
      v.witness = "metaboliser of order " + g.order.str() + " satisfies the inequalities";
      return v;
    }
    if (!failures.empty()) failures += "; ";
    failures += *broken;
  }
  v.outcome = Outcome::fires;
  v.witness = failures;
  return v;
}

/// A link bounds a J-curve for at most one of two conjugate structures with
/// different tau. Fires when tau(s) != tau(conjugate s).
inline Verdict conjugation_obstruction(const PlumbingLattice& lat, const TauProfile& profile, const SpincClass& s) {
  SpincClass sbar = lat.conjugate(s);
  Rational a = profile.at(s), b = profile.at(sbar);
  Verdict v{"conjugation", a != b ? Outcome::fires : Outcome::does_not_fire, "", a - b};
  v.witness = "tau" + format_vector(s.representative) + " = " + to_string(a) + ", tau" +
              format_vector(sbar.representative) + " = " + to_string(b);
  return v;
}

struct GenusBound {
  Rational raw;      // |tau_max - tau_min| / 2
  Integer ceiling;
};

inline GenusBound pl_genus_lower_bound(const TauProfile& profile, const std::vector<SpincClass>& subset) {
  if (subset.empty()) throw PreconditionError("pl_genus_lower_bound: empty Spin^c subset");
  Rational hi = profile.at(subset.front()), lo = hi;
  for (const auto& s : subset) {
    Rational t = profile.at(s);
    hi = std::max(hi, t);
    lo = std::min(lo, t);
  }
  Rational raw = (hi - lo) / 2;
  return {raw, ceil(raw)};
}

/// Fires when tau is not an integer: a J-curve forces 2 tau - |T| = -chi.
inline Verdict integrality_obstruction(const Rational& tau_value) {
  Verdict v{"integrality", is_integer(tau_value) ? Outcome::does_not_fire : Outcome::fires, "", std::nullopt};
  v.witness = "tau = " + to_string(tau_value);
  return v;
}

/// Fires when tau is not constant on the subset: such a link is not rational
/// homology concordant to a link in S^3.
inline Verdict concordance_obstruction(const TauProfile& profile, const std::vector<SpincClass>& subset) {
  auto bound = pl_genus_lower_bound(profile, subset);
  Verdict v{"concordance", bound.raw != 0 ? Outcome::fires : Outcome::does_not_fire, "", 2 * bound.raw};
  v.witness = "tau_max - tau_min = " + to_string(2 * bound.raw);
  return v;
}

}  // namespace plumbtau
