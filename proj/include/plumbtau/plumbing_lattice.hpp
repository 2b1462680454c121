#pragma once

// Plumbing trees, their intersection forms, characteristic covectors and the
// Spin^c structures they induce on the boundary three-manifold.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbtau/exact_linalg.hpp"

namespace plumbtau {

enum class Marking { marked, unmarked_leaf, internal };

inline const char* to_string(Marking m) {
  switch (m) {
    case Marking::marked: return "marked";
    case Marking::unmarked_leaf: return "unmarked_leaf";
    case Marking::internal: return "internal";
  }
  return "?";
}

struct PlumbingVertex {
  std::string id;
  Integer weight;
  // Unset means: unmarked_leaf when the vertex has degree <= 1, internal otherwise.
  std::optional<Marking> marking;
};

struct PlumbingTree {
  std::vector<PlumbingVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  std::size_t index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].id == id) return i;
    throw PreconditionError("plumbing: unknown vertex id '" + id + "'");
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (const auto& [a, b] : edges) {
      ++deg[index_of(a)];
      ++deg[index_of(b)];
    }
    return deg;
  }

  std::vector<Marking> markings() const {
    auto deg = degrees();
    std::vector<Marking> out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out.push_back(vertices[i].marking.value_or(deg[i] <= 1 ? Marking::unmarked_leaf : Marking::internal));
    }
    return out;
  }

  /// Throws PreconditionError unless the graph is a tree with unique ids and
  /// every unmarked leaf has degree at most one.
  void validate() const {
    if (vertices.empty()) throw PreconditionError("plumbing: tree has no vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (vertices[i].id == vertices[j].id)
          throw PreconditionError("plumbing: duplicate vertex id '" + vertices[i].id + "'");
    if (edges.size() + 1 != vertices.size())
      throw PreconditionError("plumbing: a tree on " + std::to_string(vertices.size()) + " vertices needs " +
                              std::to_string(vertices.size() - 1) + " edges, got " +
                              std::to_string(edges.size()));
    // Union-find: with |E| = |V| - 1, connected is equivalent to acyclic.
    std::vector<std::size_t> parent(vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : edges) {
      std::size_t ra = find(index_of(a)), rb = find(index_of(b));
      if (ra == rb) throw PreconditionError("plumbing: edge " + a + "-" + b + " closes a cycle");
      parent[ra] = rb;
    }
    auto deg = degrees();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].marking == Marking::unmarked_leaf && deg[i] > 1)
        throw PreconditionError("plumbing: vertex '" + vertices[i].id + "' is flagged as a leaf but has degree " +
                                std::to_string(deg[i]));
    }
  }
};

/// Build a path (linear chain) plumbing with ids v1..vn.
inline PlumbingTree make_chain(const std::vector<long long>& weights) {
  PlumbingTree t;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    t.vertices.push_back({"v" + std::to_string(i + 1), Integer(weights[i]), std::nullopt});
    if (i > 0) t.edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
  }
  return t;
}

struct IntersectionForm {
  IntMatrix q;
  std::vector<std::string> order;
  int sigma = 0;
  int b2 = 0;
};

/// Intersection form of an arbitrary symmetric matrix, vertices named v1..vn.
inline IntersectionForm make_form(const IntMatrix& q) {
  if (!q.is_symmetric()) throw ShapeError("intersection form must be symmetric");
  IntersectionForm f;
  f.q = q;
  for (std::size_t i = 0; i < q.rows(); ++i) f.order.push_back("v" + std::to_string(i + 1));
  f.b2 = static_cast<int>(q.rows());
  f.sigma = signature(q);
  return f;
}

inline IntersectionForm form_from_tree(const PlumbingTree& t) {
  t.validate();
  const std::size_t n = t.vertices.size();
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) q(i, i) = t.vertices[i].weight;
  for (const auto& [a, b] : t.edges) {
    std::size_t i = t.index_of(a), j = t.index_of(b);
    q(i, j) = q(j, i) = 1;
  }
  IntersectionForm f = make_form(q);
  for (std::size_t i = 0; i < n; ++i) f.order[i] = t.vertices[i].id;
  return f;
}

using CharVector = IntVector;

inline bool is_characteristic(const IntMatrix& q, const IntVector& kappa) {
  if (kappa.size() != q.rows()) return false;
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (((kappa[i] - q(i, i)) % 2) != 0) return false;
  }
  return true;
}

/// A Spin^c structure on the boundary: a coset of characteristic vectors modulo
/// 2Q Z^n. `residue` is the canonical Hermite reduction of any member and is
/// the equality key; `representative` is the lexicographically least short
/// vector in the coset.
struct SpincClass {
  CharVector representative;
  IntVector residue;

  friend bool operator==(const SpincClass& a, const SpincClass& b) { return a.residue == b.residue; }
  friend bool operator<(const SpincClass& a, const SpincClass& b) { return a.representative < b.representative; }
};

inline std::string format_vector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

/// All lattice computations on a negative-definite form. Construction does the
/// heavy lifting once: inverse, Hermite forms of 2Q and Q, the short box and
/// the class partition.
class PlumbingLattice {
 public:
  explicit PlumbingLattice(IntersectionForm form)
      : form_(std::move(form)),
        q_(form_.q),
        check_definite_(require_definite(q_)),
        qinv_(inverse(q_)),
        det_(det(q_)),
        adj_(determinant_and_adjugate(q_).second),
        two_q_(make_two_q(q_)),
        h1_(q_) {
    enumerate_short();
  }

  explicit PlumbingLattice(const PlumbingTree& tree) : PlumbingLattice(form_from_tree(tree)) {}

  const IntersectionForm& form() const { return form_; }
  const IntMatrix& q() const { return q_; }
  const RatMatrix& q_inverse() const { return qinv_; }
  const Integer& determinant() const { return det_; }
  std::size_t rank() const { return q_.rows(); }

  /// |H_1| of the boundary.
  Integer h1_order() const { return abs(det_); }

  /// All integer vectors with a_i + 2 <= k_i <= -a_i and k_i = a_i (mod 2), lexicographic.
  const std::vector<CharVector>& short_char_vectors() const { return short_; }

  /// Classes sorted by canonical representative.
  const std::vector<SpincClass>& classes() const { return classes_; }

  SpincClass class_of(const CharVector& kappa) const {
    if (!is_characteristic(q_, kappa))
      throw PreconditionError("vector " + format_vector(kappa) + " is not characteristic");
    auto residue = two_q_.reduce(kappa);
    auto it = by_residue_.find(residue);
    if (it == by_residue_.end()) {
      // Only reachable if the short box misses a coset.
      throw PreconditionError("no short representative for the class of " + format_vector(kappa));
    }
    return classes_[it->second];
  }

  /// Throws PreconditionError if `s` does not belong to this lattice.
  void check_class(const SpincClass& s) const {
    if (s.residue.size() != rank() || by_residue_.find(s.residue) == by_residue_.end())
      throw PreconditionError("Spin^c class " + format_vector(s.representative) + " is not a class of this form");
  }

  bool same_class(const CharVector& a, const CharVector& b) const {
    IntVector diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    return two_q_.contains(diff);
  }

  SpincClass conjugate(const SpincClass& s) const {
    check_class(s);
    CharVector neg = s.representative;
    for (auto& x : neg) x = -x;
    return class_of(neg);
  }

  /// Action of alpha in H_1 = Z^n / Q Z^n: k -> k + 2 alpha.
  SpincClass translate(const SpincClass& s, const IntVector& alpha) const {
    check_class(s);
    if (alpha.size() != rank()) throw DimensionError("translate: alpha has the wrong length");
    CharVector k = s.representative;
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += 2 * alpha[i];
    return class_of(k);
  }

  /// k^T Q^{-1} k.
  Rational square(const CharVector& kappa) const { return pair(qinv_, kappa, kappa); }

  /// (k^2 - 3 sigma - 2 b2) / 4.
  Rational d_candidate(const CharVector& kappa) const {
    return (square(kappa) - 3 * form_.sigma - 2 * form_.b2) / 4;
  }

  /// Correction term: d_candidate maximised over the whole coset.
  Rational d_invariant(const SpincClass& s) const {
    check_class(s);
    return d_candidate(maximal_representatives(s).front());
  }

  /// Members of the coset of `s` with the largest square, lexicographic.
  const std::vector<CharVector>& maximal_representatives(const SpincClass& s) const {
    check_class(s);
    std::call_once(maximal_->once, [this] { compute_maximal(maximal_->reps); });
    return maximal_->reps.at(s.residue);
  }

  /// Every characteristic vector (short or not) with k^T Q^{-1} k = target.
  std::vector<CharVector> solve_square(const Rational& target) const {
    std::vector<CharVector> out;
    if (target > 0) return out;
    enumerate_ellipsoid(
        negated_inverse(), -target,
        [&](const IntVector& k) {
          if (square(k) == target) out.push_back(k);
        },
        parity());
    std::sort(out.begin(), out.end());
    return out;
  }

  // -- H_1 of the boundary ---------------------------------------------------

  /// Canonical representatives of Z^n / Q Z^n.
  std::vector<IntVector> h1_elements() const { return h1_.residues(); }
  IntVector h1_reduce(const IntVector& alpha) const { return h1_.reduce(alpha); }
  bool h1_is_zero(const IntVector& alpha) const { return h1_.contains(alpha); }

  /// Linking form lambda(a, b) = -a^T Q^{-1} b, as a rational (meaningful mod 1).
  Rational linking(const IntVector& a, const IntVector& b) const { return -pair(qinv_, a, b); }

 private:
  static bool require_definite(const IntMatrix& q) {
    if (q.rows() == 0) throw PreconditionError("intersection form is empty");
    if (!is_negative_definite(q)) throw PreconditionError("intersection form is not negative definite");
    return true;
  }

  static IntMatrix make_two_q(const IntMatrix& q) { return Integer(2) * q; }

  std::vector<int> parity() const {
    std::vector<int> p(rank());
    for (std::size_t i = 0; i < rank(); ++i) p[i] = static_cast<int>(((q_(i, i) % 2) + 2) % 2);
    return p;
  }

  RatMatrix negated_inverse() const { return Rational(-1) * qinv_; }

  void enumerate_short() {
    const std::size_t n = rank();
    IntVector cur(n);
    for (std::size_t i = 0; i < n; ++i) cur[i] = q_(i, i) + 2;
    for (;;) {
      short_.push_back(cur);
      std::size_t i = n;
      bool done = true;
      while (i-- > 0) {
        cur[i] += 2;
        if (cur[i] <= -q_(i, i)) {
          done = false;
          break;
        }
        cur[i] = q_(i, i) + 2;
      }
      if (done) break;
    }
    for (const auto& k : short_) {
      auto residue = two_q_.reduce(k);
      if (by_residue_.emplace(residue, classes_.size()).second) classes_.push_back({k, residue});
    }
    // Short vectors come out lexicographically, so first hits are the least
    // representatives and classes_ is already sorted.
  }

  // -k^T Q^{-1} k scaled by |det Q|; an integer, and nonnegative.
  Integer scaled_norm(const CharVector& k) const {
    Integer total = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      Integer row = 0;
      for (std::size_t j = 0; j < k.size(); ++j) row += adj_(i, j) * k[j];
      total += row * k[i];
    }
    return det_ < 0 ? total : Integer(-total);
  }

  void compute_maximal(std::map<IntVector, std::vector<CharVector>>& out) const {
    // Each class has a short member; the largest of their norms bounds the
    // optimum of every class.
    std::map<IntVector, Integer> best_short;
    for (const auto& k : short_) {
      auto r = two_q_.reduce(k);
      Integer norm = scaled_norm(k);
      auto it = best_short.find(r);
      if (it == best_short.end() || norm < it->second) best_short[r] = norm;
    }
    Integer bound = 0;
    for (const auto& [r, v] : best_short) bound = std::max(bound, v);
    std::map<IntVector, std::pair<Integer, std::vector<CharVector>>> best;
    enumerate_ellipsoid(
        negated_inverse(), Rational(bound, abs(det_)),
        [&](const IntVector& k) {
          auto r = two_q_.reduce(k);
          Integer norm = scaled_norm(k);
          auto it = best.find(r);
          if (it == best.end() || norm < it->second.first) {
            best[r] = {norm, {k}};
          } else if (norm == it->second.first) {
            it->second.second.push_back(k);
          }
        },
        parity());
    for (auto& [r, entry] : best) {
      std::sort(entry.second.begin(), entry.second.end());
      out.emplace(r, std::move(entry.second));
    }
  }

  IntersectionForm form_;
  IntMatrix q_;
  bool check_definite_;
  RatMatrix qinv_;
  Integer det_;
  IntMatrix adj_;
  HermiteLattice two_q_;
  HermiteLattice h1_;
  std::vector<CharVector> short_;
  std::vector<SpincClass> classes_;
  std::map<IntVector, std::size_t> by_residue_;
  // Maximal-square representatives are computed on first use. The cache is
  // shared by copies, which describe the same lattice.
  struct MaximalCache {
    std::once_flag once;
    std::map<IntVector, std::vector<CharVector>> reps;
  };
  std::shared_ptr<MaximalCache> maximal_ = std::make_shared<MaximalCache>();
};

}  // namespace plumbtau
