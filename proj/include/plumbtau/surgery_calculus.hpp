#pragma once

// Linking-matrix calculus for transverse links in the boundary of a Stein
// domain drawn as contact (-1)-surgery on Legendrian knots plus 1-handles.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "plumbtau/exact_linalg.hpp"

namespace plumbtau {

enum class ComponentKind { contact_minus_one, stein_handle };

struct SurgeryComponent {
  ComponentKind kind = ComponentKind::contact_minus_one;
  Integer tb;
  Integer rot;

  /// Smooth framing coefficient: tb - 1 for a (-1)-surgery, 0 for a handle.
  Integer coefficient() const { return kind == ComponentKind::stein_handle ? Integer(0) : Integer(tb - 1); }
};

struct SurgeryPresentation {
  std::vector<SurgeryComponent> components;
  // lk(J_i, J_j) off the diagonal; the diagonal is ignored or must equal 0 or a_i.
  IntMatrix linking;
  // lk(T_0^k, J_i) for every link component k.
  std::vector<IntVector> link_components;

  std::size_t size() const { return components.size(); }

  void validate() const {
    const std::size_t t = size();
    if (t == 0 && linking.rows() == 0 && linking.cols() == 0) {
      // empty presentation
    } else if (linking.rows() != t || linking.cols() != t) {
      throw DimensionError("surgery: linking matrix must be " + std::to_string(t) + "x" + std::to_string(t));
    }
    if (!linking.is_symmetric()) throw ShapeError("surgery: linking matrix is not symmetric");
    for (std::size_t i = 0; i < t; ++i) {
      const auto& c = components[i];
      if (c.kind == ComponentKind::stein_handle && c.rot != 0)
        throw PreconditionError("surgery: component " + std::to_string(i) + " is a 1-handle and must have rot 0");
      if (linking(i, i) != 0 && linking(i, i) != c.coefficient())
        throw PreconditionError("surgery: diagonal entry " + std::to_string(i) + " disagrees with the framing " +
                                c.coefficient().str());
    }
    for (std::size_t k = 0; k < link_components.size(); ++k) {
      if (link_components[k].size() != t)
        throw DimensionError("surgery: link component " + std::to_string(k) + " needs " + std::to_string(t) +
                             " linking numbers");
    }
  }

  IntVector rotation_vector() const {
    IntVector r;
    for (const auto& c : components) r.push_back(c.rot);
    return r;
  }

  IntVector total_linking() const {
    IntVector total(size(), 0);
    for (const auto& l : link_components)
      for (std::size_t i = 0; i < total.size(); ++i) total[i] += l[i];
    return total;
  }
};

/// Q with q_ii = a_i and q_ij = lk(J_i, J_j). Throws if singular.
inline IntMatrix linking_matrix(const SurgeryPresentation& p) {
  p.validate();
  const std::size_t t = p.size();
  IntMatrix q(t, t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) q(i, j) = i == j ? p.components[i].coefficient() : p.linking(i, j);
  if (det(q) == 0) throw SingularMatrixError("surgery: linking matrix is singular");
  return q;
}

/// Q_k(0, a_1, ..., a_t): Q bordered by the linking vector of component k.
inline IntMatrix bordered_matrix(const SurgeryPresentation& p, std::size_t k) {
  IntMatrix q = linking_matrix(p);
  const std::size_t t = q.rows();
  const auto& l = p.link_components.at(k);
  IntMatrix b(t + 1, t + 1);
  for (std::size_t i = 0; i < t; ++i) {
    b(0, i + 1) = b(i + 1, 0) = l[i];
    for (std::size_t j = 0; j < t; ++j) b(i + 1, j + 1) = q(i, j);
  }
  return b;
}

/// [C].[C] = -sum_k det Q_k / det Q + 2 sum_{a<b} <l_a, Q^{-1} l_b>.
inline Rational self_intersection(const SurgeryPresentation& p) {
  const IntMatrix q = linking_matrix(p);
  const Integer dq = det(q);
  const RatMatrix qinv = inverse(q);
  Rational total = 0;
  for (std::size_t k = 0; k < p.link_components.size(); ++k) total -= ratio(det(bordered_matrix(p, k)), dq);
  for (std::size_t a = 0; a < p.link_components.size(); ++a)
    for (std::size_t b = a + 1; b < p.link_components.size(); ++b)
      total += 2 * pair(qinv, p.link_components[a], p.link_components[b]);
  return total;
}

/// <sum l_k, Q^{-1} sum l_k>; equal to self_intersection.
inline Rational self_intersection_by_pairing(const SurgeryPresentation& p) {
  const RatMatrix qinv = inverse(linking_matrix(p));
  const IntVector total = p.total_linking();
  return pair(qinv, total, total);
}

/// c_1(J)[C] = -sum_k <rot, Q^{-1} l_k>.
inline Rational chern_evaluation(const SurgeryPresentation& p) {
  const RatMatrix qinv = inverse(linking_matrix(p));
  const IntVector rot = p.rotation_vector();
  Rational total = 0;
  for (const auto& l : p.link_components) total -= pair(qinv, rot, l);
  return total;
}

/// Rational self-linking after surgery: sl(T_0) - c_1(J)[C] - [C].[C].
inline Rational self_linking_shift(const Integer& sl_t0, const SurgeryPresentation& p) {
  if (p.size() == 0) return Rational(sl_t0);
  return Rational(sl_t0) - chern_evaluation(p) - self_intersection(p);
}

// ---------------------------------------------------------------------------
// Braids
// ---------------------------------------------------------------------------

struct BraidDatum {
  Integer strands;
  Integer writhe;
  Integer components;

  void validate() const {
    if (strands < 1) throw PreconditionError("braid: strands must be positive");
    if (components < 1) throw PreconditionError("braid: components must be positive");
    if (components > strands) throw PreconditionError("braid: more components than strands");
  }
};

namespace detail {

inline void apply_generator(std::vector<std::size_t>& perm, int strands, int g) {
  int i = g < 0 ? -g : g;
  if (g == 0 || i >= strands) throw PreconditionError("braid: generator " + std::to_string(g) + " out of range");
  std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
}

inline Integer count_cycles(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  Integer cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

}  // namespace detail

/// Braid word in Artin generators: +i is sigma_i, -i its inverse (1-based).
inline BraidDatum braid_from_word(int strands, const std::vector<int>& word) {
  if (strands < 1) throw PreconditionError("braid: strands must be positive");
  std::vector<std::size_t> perm(static_cast<std::size_t>(strands));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Integer w = 0;
  for (int g : word) {
    detail::apply_generator(perm, strands, g);
    w += g > 0 ? 1 : -1;
  }
  return {strands, w, detail::count_cycles(perm)};
}

/// A quasi-positive band w sigma_i w^{-1}.
struct Band {
  std::vector<int> conjugator;
  int generator = 1;
};

/// Product of positive bands; the writhe is the band count.
inline BraidDatum quasi_positive_braid(int strands, const std::vector<Band>& bands) {
  std::vector<int> word;
  for (const auto& b : bands) {
    if (b.generator <= 0) throw PreconditionError("braid: band generators must be positive");
    word.insert(word.end(), b.conjugator.begin(), b.conjugator.end());
    word.push_back(b.generator);
    for (auto it = b.conjugator.rbegin(); it != b.conjugator.rend(); ++it) word.push_back(-*it);
  }
  return braid_from_word(strands, word);
}

/// sl = w - n for the transverse closure.
inline Integer self_linking_braid(const BraidDatum& b) {
  b.validate();
  return b.writhe - b.strands;
}

/// (w - n + l) / 2 for a quasi-positive closure.
inline Rational tau_qp_braid(const BraidDatum& b) {
  b.validate();
  return Rational(b.writhe - b.strands + b.components, 2);
}

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

struct CurveDatum {
  Integer euler;
  Rational chern;
  Rational self_intersection;
  Integer boundary;

  void validate() const {
    if (boundary < 1) throw PreconditionError("curve: needs at least one boundary component");
    if (euler > boundary) throw PreconditionError("curve: euler characteristic exceeds the number of boundary circles");
  }
};

/// Connected surface of genus g with b boundary circles.
inline Integer euler_characteristic(const Integer& genus, const Integer& boundary) {
  return 2 - 2 * genus - boundary;
}

/// tau = -(chi - |T| + c_1[C] + [C]^2) / 2.
inline Rational tau_from_curve(const CurveDatum& c) {
  c.validate();
  return -(Rational(c.euler - c.boundary) + c.chern + c.self_intersection) / 2;
}

/// Euler characteristic of the Bennequin surface: one disk per point, one band per twist.
inline Integer bennequin_euler(const Integer& points, const Integer& bands) { return points - bands; }

}  // namespace plumbtau
