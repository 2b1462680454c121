#pragma once

// Floer-type complexes over F2[U]: finitely generated free complexes with a
// Maslov grading in which U has degree -2, together with Alexander-type
// filtrations and the tau-invariants they define on the hat complex.
//
// Every differential entry x -> U^m y is homogeneous, so m is determined by
// the gradings: gr(y) - 2m = gr(x) - 1. Chains are therefore stored as F2
// bitsets over the generators with the U-powers left implicit.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "plumbtau/errors.hpp"

namespace plumbtau {

using Bits = boost::dynamic_bitset<>;

struct FloerEntry {
  std::size_t source;
  std::size_t target;
  int power;
};

class FloerComplex {
 public:
  FloerComplex() = default;
  explicit FloerComplex(int ell) : ell_(ell) {}

  std::size_t add_generator(std::string name, int grading) {
    if (find(name)) throw StructureError("duplicate generator '" + name + "'");
    names_.push_back(std::move(name));
    gradings_.push_back(grading);
    return names_.size() - 1;
  }

  /// Adds U^power * target to the boundary of source. Over F2 a repeated
  /// entry cancels the first one.
  void add_entry(std::size_t source, std::size_t target, int power) {
    if (source >= size() || target >= size()) throw StructureError("differential entry names an unknown generator");
    if (power < 0) throw StructureError("differential entry with negative U-power");
    for (auto it = entries_.begin(); it != entries_.end(); ++it) {
      if (it->source == source && it->target == target && it->power == power) {
        entries_.erase(it);
        return;
      }
    }
    entries_.push_back({source, target, power});
  }

  std::size_t size() const { return names_.size(); }
  int ell() const { return ell_; }
  void set_ell(int ell) { ell_ = ell; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int grading(std::size_t i) const { return gradings_[i]; }
  const std::vector<int>& gradings() const { return gradings_; }
  const std::vector<FloerEntry>& entries() const { return entries_; }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  int max_grading() const { return gradings_.empty() ? 0 : *std::max_element(gradings_.begin(), gradings_.end()); }

  /// U-power forced by the grading law for an entry x -> y, or nullopt if none exists.
  std::optional<int> implied_power(std::size_t x, std::size_t y) const {
    int twice = gradings_[y] - gradings_[x] + 1;
    if (twice < 0 || twice % 2 != 0) return std::nullopt;
    return twice / 2;
  }

  Bits empty_chain() const { return Bits(size()); }

  Bits chain(std::initializer_list<std::string> names) const {
    Bits b = empty_chain();
    for (const auto& n : names) {
      auto i = find(n);
      if (!i) throw StructureError("unknown generator '" + n + "'");
      b.flip(*i);
    }
    return b;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> gradings_;
  std::vector<FloerEntry> entries_;
  int ell_ = 1;
};

struct AlexanderFiltration {
  std::vector<int> level;
};

/// Throws StructureError unless every entry satisfies A(y) - m <= A(x).
inline void check_filtration(const FloerComplex& c, const AlexanderFiltration& f) {
  if (f.level.size() != c.size()) throw StructureError("filtration has the wrong number of levels");
  for (const auto& e : c.entries()) {
    if (f.level[e.target] - e.power > f.level[e.source])
      throw StructureError("filtration is not preserved by " + c.name(e.source) + " -> " + c.name(e.target));
  }
}

// ---------------------------------------------------------------------------
// F2 linear algebra on bitsets
// ---------------------------------------------------------------------------

/// Incrementally built row-echelon basis of a subspace of F2^n.
class F2Span {
 public:
  explicit F2Span(std::size_t n) : n_(n) {}

  Bits reduce(Bits v) const {
    for (const auto& [pivot, row] : rows_)
      if (v.test(pivot)) v ^= row;
    return v;
  }

  bool contains(const Bits& v) const { return reduce(v).none(); }

  /// Returns true if v was independent of the current span.
  bool insert(const Bits& v) {
    Bits r = reduce(v);
    if (r.none()) return false;
    std::size_t pivot = r.find_first();
    for (auto& [p, row] : rows_)
      if (row.test(pivot)) row ^= r;
    rows_.emplace_back(pivot, r);
    return true;
  }

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, Bits>> rows_;
};

/// Kernel of the linear map sending generator i (for i in `domain`) to images[i].
inline std::vector<Bits> f2_kernel(const std::vector<std::size_t>& domain, const std::vector<Bits>& images,
                                   std::size_t n) {
  // Elimination on (image | combination) pairs.
  std::vector<std::pair<Bits, Bits>> pivots;
  std::vector<std::size_t> pivot_cols;
  std::vector<Bits> kernel;
  for (std::size_t i : domain) {
    Bits img = images[i];
    Bits comb(n);
    comb.set(i);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (img.test(pivot_cols[k])) {
        img ^= pivots[k].first;
        comb ^= pivots[k].second;
      }
    }
    if (img.none()) {
      kernel.push_back(comb);
    } else {
      pivot_cols.push_back(img.find_first());
      pivots.emplace_back(img, comb);
    }
  }
  return kernel;
}

inline std::size_t f2_rank(const std::vector<Bits>& vectors, std::size_t n) {
  F2Span span(n);
  for (const auto& v : vectors) span.insert(v);
  return span.dimension();
}

// ---------------------------------------------------------------------------
// Axioms and homology
// ---------------------------------------------------------------------------

struct AxiomReport {
  bool boundary_squared_zero = true;
  bool grading_law = true;
  bool rank = true;
  bool tower_gradings = true;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

// Boundary of each generator with U set to 1, as bitsets over targets.
inline std::vector<Bits> boundary_at_one(const FloerComplex& c) {
  std::vector<Bits> rows(c.size(), Bits(c.size()));
  for (const auto& e : c.entries()) rows[e.source].flip(e.target);
  return rows;
}

inline std::size_t rank_over_fraction_field(const FloerComplex& c) {
  return f2_rank(boundary_at_one(c), c.size());
}

}  // namespace detail

/// F2[U]-rank of H(C^-): |B| - 2 rank(d). Homogeneity makes the rank over
/// F2(U) equal to the F2-rank of d at U = 1.
inline std::size_t free_rank(const FloerComplex& c) {
  return c.size() - 2 * detail::rank_over_fraction_field(c);
}

struct Tower {
  int grading;
  Bits cycle;  // generator of the free summand, in the original basis
};

struct TorsionSummand {
  int grading;  // grading of the generator y of F2[U]/U^power
  int power;
  Bits cycle;   // y
  Bits source;  // x with d x = U^power y
};

struct HomologyDecomposition {
  std::vector<Tower> towers;
  std::vector<TorsionSummand> torsion;
};

/// Splits C^- into towers, U^p-pairs and acyclic pairs by homogeneous basis
/// changes. Requires the grading law; throws StructureError otherwise.
inline HomologyDecomposition homology_minus(const FloerComplex& c) {
  const std::size_t n = c.size();
  for (const auto& e : c.entries()) {
    if (c.implied_power(e.source, e.target) != e.power)
      throw StructureError("entry " + c.name(e.source) + " -> " + c.name(e.target) + " violates the grading law");
  }
  std::vector<Bits> rows = detail::boundary_at_one(c);
  std::vector<Bits> cols(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = rows[x].find_first(); y != Bits::npos; y = rows[x].find_next(y)) cols[y].set(x);
  std::vector<Bits> basis(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) basis[i].set(i);
  std::vector<bool> active(n, true);

  // e_a <- e_a + U^k e_b, where gr(b) - gr(a) = 2k >= 0.
  auto add = [&](std::size_t a, std::size_t b) {
    for (std::size_t t = rows[b].find_first(); t != Bits::npos; t = rows[b].find_next(t)) {
      rows[a].flip(t);
      cols[t].flip(a);
    }
    Bits sources = cols[a];
    for (std::size_t z = sources.find_first(); z != Bits::npos; z = sources.find_next(z)) {
      rows[z].flip(b);
      cols[b].flip(z);
    }
    basis[a] ^= basis[b];
  };

  HomologyDecomposition out;
  for (;;) {
    // Entry of least U-power; ties by source then target.
    std::optional<std::tuple<int, std::size_t, std::size_t>> best;
    for (std::size_t x = 0; x < n; ++x) {
      if (!active[x]) continue;
      for (std::size_t y = rows[x].find_first(); y != Bits::npos; y = rows[x].find_next(y)) {
        std::tuple<int, std::size_t, std::size_t> cand{*c.implied_power(x, y), x, y};
        if (!best || cand < *best) best = cand;
      }
    }
    if (!best) break;
    auto [p, x, y] = *best;
    Bits other_sources = cols[y];
    other_sources.reset(x);
    for (std::size_t s = other_sources.find_first(); s != Bits::npos; s = other_sources.find_next(s)) add(s, x);
    Bits other_targets = rows[x];
    other_targets.reset(y);
    for (std::size_t t = other_targets.find_first(); t != Bits::npos; t = other_targets.find_next(t)) add(y, t);
    if (rows[x].count() != 1 || cols[y].count() != 1 || rows[y].any() || cols[x].any())
      throw StructureError("boundary does not square to zero");
    rows[x].reset();
    cols[y].reset();
    active[x] = active[y] = false;
    if (p > 0) out.torsion.push_back({c.grading(y), p, basis[y], basis[x]});
  }
  for (std::size_t i = 0; i < n; ++i)
    if (active[i]) out.towers.push_back({c.grading(i), basis[i]});
  std::sort(out.towers.begin(), out.towers.end(), [](const Tower& a, const Tower& b) { return a.grading > b.grading; });
  std::sort(out.torsion.begin(), out.torsion.end(), [](const TorsionSummand& a, const TorsionSummand& b) {
    if (a.grading != b.grading) return a.grading > b.grading;
    return a.power < b.power;
  });
  return out;
}

inline AxiomReport verify_axioms(const FloerComplex& c) {
  AxiomReport r;
  for (const auto& e : c.entries()) {
    if (c.implied_power(e.source, e.target) != e.power) {
      r.grading_law = false;
      r.violations.push_back("grading law fails on " + c.name(e.source) + " -> " + c.name(e.target));
    }
  }
  // d^2: coefficient of U^k z in d(d x), mod 2.
  std::map<std::tuple<std::size_t, std::size_t, int>, int> square;
  for (const auto& e1 : c.entries())
    for (const auto& e2 : c.entries())
      if (e1.target == e2.source) square[{e1.source, e2.target, e1.power + e2.power}] ^= 1;
  for (const auto& [key, coeff] : square) {
    if (coeff) {
      r.boundary_squared_zero = false;
      r.violations.push_back("d^2 " + c.name(std::get<0>(key)) + " contains U^" + std::to_string(std::get<2>(key)) +
                             " " + c.name(std::get<1>(key)));
    }
  }
  if (c.ell() < 1) {
    r.rank = false;
    r.violations.push_back("ell must be positive");
    return r;
  }
  const std::size_t expected = std::size_t{1} << (c.ell() - 1);
  const std::size_t rank = r.boundary_squared_zero ? free_rank(c) : 0;
  if (!r.boundary_squared_zero || rank != expected) {
    r.rank = false;
    r.violations.push_back("homology has rank " + std::to_string(rank) + ", expected " + std::to_string(expected));
    return r;
  }
  if (!r.grading_law) return r;
  // Localised homology is F[U,U^-1] tensor (F_(-1) + F_(0))^(l-1): for l >= 2
  // the towers split evenly between the two parities.
  if (c.ell() >= 2) {
    auto h = homology_minus(c);
    std::size_t even = 0;
    for (const auto& t : h.towers) even += ((t.grading % 2) + 2) % 2 == 0;
    if (2 * even != h.towers.size()) {
      r.tower_gradings = false;
      r.violations.push_back("tower gradings do not split evenly by parity");
    }
  }
  return r;
}

inline void require_axioms(const FloerComplex& c) {
  auto r = verify_axioms(c);
  if (!r.ok()) throw StructureError("not a Floer-type complex: " + r.violations.front());
}

/// d(C^-): the largest grading of a non-torsion homogeneous class.
inline int correction_term(const FloerComplex& c) {
  require_axioms(c);
  return homology_minus(c).towers.front().grading;
}

// ---------------------------------------------------------------------------
// Hat complex and distinguished classes
// ---------------------------------------------------------------------------

/// C^-/U: only the entries with U-power 0 survive.
inline FloerComplex hat_complex(const FloerComplex& c) {
  FloerComplex h(c.ell());
  for (std::size_t i = 0; i < c.size(); ++i) h.add_generator(c.name(i), c.grading(i));
  for (const auto& e : c.entries())
    if (e.power == 0) h.add_entry(e.source, e.target, 0);
  return h;
}

/// Reduction mod U of a homogeneous chain of grading g.
inline Bits hat_image(const FloerComplex& c, const Bits& chain, int g) {
  Bits out = chain;
  for (std::size_t i = chain.find_first(); i != Bits::npos; i = chain.find_next(i))
    if (c.grading(i) != g) out.reset(i);
  return out;
}

/// Hat differential of a chain.
inline Bits hat_boundary(const FloerComplex& c, const Bits& chain) {
  Bits out = c.empty_chain();
  for (const auto& e : c.entries())
    if (e.power == 0 && chain.test(e.source)) out.flip(e.target);
  return out;
}

/// Grading of a nonzero chain, or nullopt if it is zero or mixes gradings.
inline std::optional<int> homogeneous_grading(const FloerComplex& c, const Bits& chain) {
  std::optional<int> g;
  for (std::size_t i = chain.find_first(); i != Bits::npos; i = chain.find_next(i)) {
    if (g && *g != c.grading(i)) return std::nullopt;
    g = c.grading(i);
  }
  return g;
}

/// Image of the localised homology in H(hat C), with the torsion contribution
/// at each grading. A class is theta-supported when it lies in
/// theta_top + torsion(d) modulo boundaries.
struct ImageClasses {
  int d = 0;
  int ell = 1;
  Bits theta_top;
  Bits theta_bot;
  std::vector<Bits> image_basis;     // hat images of all towers
  std::vector<Bits> torsion_top;     // hat images of torsion generators at grading d
  std::vector<Bits> torsion_bottom;  // same at grading d - ell + 1
};

inline ImageClasses image_classes(const FloerComplex& c) {
  require_axioms(c);
  auto h = homology_minus(c);
  ImageClasses out;
  out.ell = c.ell();
  out.d = h.towers.front().grading;
  const int bottom = out.d - c.ell() + 1;
  std::size_t at_top = 0, at_bottom = 0;
  for (const auto& t : h.towers) {
    Bits img = hat_image(c, t.cycle, t.grading);
    out.image_basis.push_back(img);
    if (t.grading == out.d) {
      out.theta_top = img;
      ++at_top;
    }
    if (t.grading == bottom) {
      out.theta_bot = img;
      ++at_bottom;
    }
  }
  if (at_top != 1) throw StructureError("top grading of the localised homology is not one-dimensional");
  if (at_bottom != 1)
    throw StructureError("no unique tower in grading d - ell + 1 = " + std::to_string(bottom));
  for (const auto& t : h.torsion) {
    if (t.grading == out.d) out.torsion_top.push_back(hat_image(c, t.cycle, t.grading));
    if (t.grading == bottom) out.torsion_bottom.push_back(hat_image(c, t.cycle, t.grading));
  }
  return out;
}

namespace detail {

// Hat boundaries landing in grading g.
inline F2Span hat_boundaries(const FloerComplex& c, int g) {
  F2Span span(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.grading(i) != g + 1) continue;
    Bits b = c.empty_chain();
    b.set(i);
    span.insert(hat_boundary(c, b));
  }
  return span;
}

inline bool supported_on(const FloerComplex& c, const Bits& chain, int g, const Bits& theta,
                         const std::vector<Bits>& torsion) {
  auto grading = homogeneous_grading(c, chain);
  if (chain.none()) return false;
  if (!grading) throw PreconditionError("chain is not homogeneous");
  if (hat_boundary(c, chain).any()) throw PreconditionError("chain is not a cycle of the hat complex");
  if (*grading != g) return false;
  F2Span span = hat_boundaries(c, g);
  for (const auto& t : torsion) span.insert(t);
  return span.contains(chain ^ theta);
}

// Least m such that `target` lies in Z_m(g) + extra + B(g), where Z_m(g) is
// the space of hat cycles of grading g supported on generators of level <= m.
inline std::optional<int> sweep(const FloerComplex& c, const AlexanderFiltration& f, int g, const Bits& target,
                                const std::vector<Bits>& extra) {
  std::set<int> levels(f.level.begin(), f.level.end());
  std::vector<Bits> images(c.size(), c.empty_chain());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Bits b = c.empty_chain();
    b.set(i);
    images[i] = hat_boundary(c, b);
  }
  F2Span base = hat_boundaries(c, g);
  for (const auto& e : extra) base.insert(e);
  for (int m : levels) {
    std::vector<std::size_t> domain;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c.grading(i) == g && f.level[i] <= m) domain.push_back(i);
    F2Span span = base;
    for (const auto& z : f2_kernel(domain, images, c.size())) span.insert(z);
    if (span.contains(target)) return m;
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_theta_supported(const FloerComplex& c, const Bits& cycle) {
  auto im = image_classes(c);
  return detail::supported_on(c, cycle, im.d, im.theta_top, im.torsion_top);
}

inline bool is_theta_star_supported(const FloerComplex& c, const Bits& cycle) {
  auto im = image_classes(c);
  return detail::supported_on(c, cycle, im.d - im.ell + 1, im.theta_bot, im.torsion_bottom);
}

/// Least filtration level containing a theta-supported cycle.
inline int tau_top(const FloerComplex& c, const AlexanderFiltration& f) {
  check_filtration(c, f);
  auto im = image_classes(c);
  auto m = detail::sweep(c, f, im.d, im.theta_top, im.torsion_top);
  if (!m) throw StructureError("no theta-supported cycle at any filtration level");
  return *m;
}

/// Least filtration level containing a theta*-supported cycle.
inline int tau_bot(const FloerComplex& c, const AlexanderFiltration& f) {
  check_filtration(c, f);
  auto im = image_classes(c);
  auto m = detail::sweep(c, f, im.d - im.ell + 1, im.theta_bot, im.torsion_bottom);
  if (!m) throw StructureError("no theta*-supported cycle at any filtration level");
  return *m;
}

/// Least filtration level containing a cycle in the class of `alpha`.
inline int tau_alpha(const FloerComplex& c, const AlexanderFiltration& f, const Bits& alpha) {
  check_filtration(c, f);
  auto g = homogeneous_grading(c, alpha);
  if (!g) throw PreconditionError("tau_alpha: class representative must be a nonzero homogeneous chain");
  if (hat_boundary(c, alpha).any()) throw PreconditionError("tau_alpha: representative is not a cycle");
  auto m = detail::sweep(c, f, *g, alpha, {});
  if (!m) throw StructureError("tau_alpha: class is not represented at any filtration level");
  return *m;
}

// ---------------------------------------------------------------------------
// Duality and shifts
// ---------------------------------------------------------------------------

/// Dual complex: gr*(x*) = -gr(x), A*(x*) = -A(x), entries transposed.
inline std::pair<FloerComplex, AlexanderFiltration> dualize(const FloerComplex& c, const AlexanderFiltration& f) {
  FloerComplex d(c.ell());
  AlexanderFiltration df;
  for (std::size_t i = 0; i < c.size(); ++i) {
    d.add_generator(c.name(i) + "*", -c.grading(i));
    df.level.push_back(-f.level.at(i));
  }
  for (const auto& e : c.entries()) d.add_entry(e.target, e.source, e.power);
  return {d, df};
}

inline FloerComplex shift_grading(const FloerComplex& c, int shift) {
  FloerComplex s(c.ell());
  for (std::size_t i = 0; i < c.size(); ++i) s.add_generator(c.name(i), c.grading(i) + shift);
  for (const auto& e : c.entries()) s.add_entry(e.source, e.target, e.power);
  return s;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Lines are "name gr A", "x -> y pow m", "ell N"; blank lines and '#'
/// comments are skipped. "pow m" may be omitted when the grading law fixes it.
inline std::pair<FloerComplex, AlexanderFiltration> parse_floer(const std::vector<std::string>& lines) {
  FloerComplex c;
  AlexanderFiltration f;
  std::vector<std::tuple<std::string, std::string, std::optional<int>, std::size_t>> pending;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = lines[ln].substr(0, lines[ln].find('#'));
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw SchemaError("floer_complex line " + std::to_string(ln + 1) + ": " + why);
    };
    auto as_int = [&](const std::string& s) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(s, &used);
      } catch (const std::exception&) {
        fail("expected an integer, got '" + s + "'");
      }
      if (used != s.size()) fail("expected an integer, got '" + s + "'");
      return v;
    };
    if (tok[0] == "ell") {
      if (tok.size() != 2) fail("expected 'ell N'");
      c.set_ell(as_int(tok[1]));
    } else if (tok.size() >= 3 && tok[1] == "->") {
      std::optional<int> power;
      if (tok.size() == 5 && tok[3] == "pow") {
        power = as_int(tok[4]);
      } else if (tok.size() != 3) {
        fail("expected 'x -> y pow m'");
      }
      pending.emplace_back(tok[0], tok[2], power, ln + 1);
    } else if (tok.size() == 3) {
      try {
        c.add_generator(tok[0], as_int(tok[1]));
      } catch (const StructureError& e) {
        fail(e.what());
      }
      f.level.push_back(as_int(tok[2]));
    } else {
      fail("unrecognised line '" + line + "'");
    }
  }
  for (const auto& [x, y, power, ln] : pending) {
    auto xi = c.find(x), yi = c.find(y);
    if (!xi || !yi)
      throw SchemaError("floer_complex line " + std::to_string(ln) + ": unknown generator '" + (xi ? y : x) + "'");
    int p = 0;
    if (power) {
      p = *power;
    } else if (auto implied = c.implied_power(*xi, *yi)) {
      p = *implied;
    } else {
      throw SchemaError("floer_complex line " + std::to_string(ln) + ": gradings admit no U-power");
    }
    c.add_entry(*xi, *yi, p);
  }
  return {c, f};
}

inline std::vector<std::string> format_floer(const FloerComplex& c, const AlexanderFiltration& f) {
  std::vector<std::string> out;
  out.push_back("ell " + std::to_string(c.ell()));
  for (std::size_t i = 0; i < c.size(); ++i)
    out.push_back(c.name(i) + " " + std::to_string(c.grading(i)) + " " + std::to_string(f.level.at(i)));
  for (const auto& e : c.entries())
    out.push_back(c.name(e.source) + " -> " + c.name(e.target) + " pow " + std::to_string(e.power));
  return out;
}

}  // namespace plumbtau
