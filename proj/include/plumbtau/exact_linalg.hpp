#pragma once

// Exact integer and rational linear algebra. Nothing in here touches floating
// point: determinants use fraction-free elimination, inverses are built from
// the adjugate, and lattice membership goes through a Hermite normal form.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plumbtau/errors.hpp"

namespace plumbtau {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n/d for any nonzero d. Boost rejects a negative cpp_int denominator.
inline Rational ratio(const Integer& n, const Integer& d) { return d < 0 ? Rational(-n, -d) : Rational(n, d); }
using IntVector = std::vector<Integer>;

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Integer ceil(const Rational& r) { return -floor(-r); }

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// "p/q" with q > 0, or "p" when the value is an integer.
inline std::string to_string(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const Integer& i) { return i.str(); }

inline bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  out = Integer(std::string(text[0] == '+' ? text.substr(1) : text));
  return true;
}

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument otherwise.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    ok = parse_integer(text.substr(slash + 1), den) && den != 0;
  }
  if (!ok) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  return ratio(num, den);
}

inline IntVector to_int_vector(std::initializer_list<long long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Dense row-major matrix
// ---------------------------------------------------------------------------

template <class T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  /// Top-left k x k block.
  Matrix leading_block(std::size_t k) const {
    Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

template <class T, class V>
std::vector<T> multiply(const Matrix<T>& m, const std::vector<V>& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector product: length mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * T(v[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Determinant, inverse, definiteness
// ---------------------------------------------------------------------------

/// Bareiss fraction-free elimination with row pivoting. det of the 0x0 matrix is 1.
inline Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("det: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

/// det of every leading principal block, k = 1..n.
inline std::vector<Integer> leading_minors(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("leading_minors: matrix is not square");
  std::vector<Integer> out;
  out.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) out.push_back(det(m.leading_block(k)));
  return out;
}

/// Sylvester's criterion: (-1)^k * minor_k > 0 for every k.
inline bool is_negative_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) throw ShapeError("is_negative_definite: matrix is not symmetric");
  auto minors = leading_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const bool odd = (k + 1) % 2 == 1;
    if (odd ? !(minors[k] < 0) : !(minors[k] > 0)) return false;
  }
  return true;
}

/// Returns {det, adj} with m * adj = det * I, via fraction-free Gauss-Jordan on [m | I].
inline std::pair<Integer, IntMatrix> determinant_and_adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return {Integer(0), IntMatrix(n, n)};
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer factor = a(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = (a(k, k) * a(i, j) - factor * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  // Left block is now d*I with d = det of the row-permuted matrix; the right
  // block is d * m^{-1}.
  const Integer d = n == 0 ? Integer(1) : a(n - 1, n - 1);
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = sign * a(i, n + j);
  return {sign * d, adj};
}

inline RatMatrix inverse(const IntMatrix& m) {
  auto [d, adj] = determinant_and_adjugate(m);
  if (d == 0) throw SingularMatrixError("inverse: matrix is singular");
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ratio(adj(i, j), d);
  return out;
}

/// u^T * qinv * v.
inline Rational pair(const RatMatrix& qinv, const IntVector& u, const IntVector& v) {
  if (!qinv.is_square() || qinv.rows() != u.size() || u.size() != v.size()) {
    throw DimensionError("pair: dimensions do not agree");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) row += qinv(i, j) * v[j];
    }
    total += row * u[i];
  }
  return total;
}

/// Signature of a symmetric integer matrix, by congruence diagonalisation over Q.
inline int signature(const IntMatrix& m) {
  if (!m.is_symmetric()) throw ShapeError("signature: matrix is not symmetric");
  RatMatrix a = to_rational(m);
  std::size_t n = a.rows();
  int sig = 0;
  std::vector<bool> done(n, false);
  auto eliminate = [&](std::size_t p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || a(i, p) == 0) continue;
      Rational f = a(i, p) / a(p, p);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(p, j);
      for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, p);
    }
    sig += a(p, p) > 0 ? 1 : -1;
    done[p] = true;
  };
  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (!done[i] && a(i, i) != 0) pivot = i;
    if (pivot != n) {
      eliminate(pivot);
      continue;
    }
    // All remaining diagonal entries vanish; pair up an off-diagonal entry.
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[i] && !done[j] && a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) break;
    // e_i <- e_i + e_j makes the (i,i) entry 2*a(i,j) != 0.
    for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
    for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Lattices: Hermite normal form and coset representatives
// ---------------------------------------------------------------------------

/// The lattice spanned by the columns of a nonsingular integer matrix, kept in
/// upper-triangular column Hermite form H (positive diagonal). reduce() maps a
/// vector to the unique representative of its coset in the box
/// 0 <= r_i < H(i,i), so two vectors are congruent iff their reductions agree.
class HermiteLattice {
 public:
  explicit HermiteLattice(const IntMatrix& generators) : h_(generators) {
    if (!h_.is_square()) throw DimensionError("HermiteLattice: generator matrix is not square");
    const std::size_t n = h_.rows();
    for (std::size_t r = n; r-- > 0;) {
      for (std::size_t c = 0; c < r; ++c) {
        if (h_(r, c) == 0) continue;
        combine_columns(r, c);
      }
      if (h_(r, r) == 0) throw SingularMatrixError("HermiteLattice: generators are dependent");
      if (h_(r, r) < 0) {
        for (std::size_t i = 0; i <= r; ++i) h_(i, r) = -h_(i, r);
      }
    }
    // Reduce entries above the diagonal into [0, H(i,i)) for a normalised form.
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = c; i-- > 0;) {
        Integer q = floor_div(h_(i, c), h_(i, i));
        if (q == 0) continue;
        for (std::size_t k = 0; k <= i; ++k) h_(k, c) -= q * h_(k, i);
      }
    }
  }

  const IntMatrix& basis() const { return h_; }
  std::size_t dimension() const { return h_.rows(); }

  /// Index of the lattice in Z^n.
  Integer index() const {
    Integer p = 1;
    for (std::size_t i = 0; i < h_.rows(); ++i) p *= h_(i, i);
    return p;
  }

  IntVector reduce(IntVector v) const {
    if (v.size() != h_.rows()) throw DimensionError("HermiteLattice::reduce: length mismatch");
    for (std::size_t i = h_.rows(); i-- > 0;) {
      Integer q = floor_div(v[i], h_(i, i));
      if (q == 0) continue;
      for (std::size_t k = 0; k <= i; ++k) v[k] -= q * h_(k, i);
    }
    return v;
  }

  bool contains(const IntVector& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
  }

  /// Every coset representative in the reduction box, in lexicographic order.
  std::vector<IntVector> residues() const {
    std::vector<IntVector> out;
    const std::size_t n = h_.rows();
    IntVector cur(n, 0);
    if (n == 0) return {cur};
    for (;;) {
      out.push_back(cur);
      std::size_t i = n;
      while (i-- > 0) {
        if (++cur[i] < h_(i, i)) break;
        cur[i] = 0;
        if (i == 0) return out;
      }
    }
  }

 private:
  // Column operation zeroing h(r, c) against h(r, r); unimodular.
  void combine_columns(std::size_t r, std::size_t c) {
    const Integer a = h_(r, c);
    const Integer b = h_(r, r);
    Integer s, t;
    const Integer g = extended_gcd(a, b, s, t);
    const Integer ag = a / g;
    const Integer bg = b / g;
    for (std::size_t i = 0; i <= r; ++i) {
      const Integer x = h_(i, c);
      const Integer y = h_(i, r);
      h_(i, r) = s * x + t * y;
      h_(i, c) = bg * x - ag * y;
    }
  }

  static Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
    Integer old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
    while (r != 0) {
      Integer q = old_r / r;
      Integer tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s1;
      old_s = s1;
      s1 = tmp;
      tmp = old_t - q * t1;
      old_t = t1;
      t1 = tmp;
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_s = -old_s;
      old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
  }

  IntMatrix h_;
};

/// True iff generators * x = v has an integer solution x.
inline bool in_image_of(const IntMatrix& generators, const IntVector& v) {
  return HermiteLattice(generators).contains(v);
}

// ---------------------------------------------------------------------------
// Short-vector enumeration for a positive-definite form
// ---------------------------------------------------------------------------

/// Calls visit(x) for every integer vector x with x^T p x <= bound, where p is a
/// positive-definite rational matrix. When `parity` is non-empty, only vectors
/// with x_i == parity_i (mod 2) are visited. Enumeration is Fincke-Pohst over an
/// exact LDL^T completion of squares; every bound test is exact.
template <class Visit>
void enumerate_ellipsoid(const RatMatrix& p, const Rational& bound, Visit&& visit,
                         const std::vector<int>& parity = {}) {
  if (!p.is_square()) throw DimensionError("enumerate_ellipsoid: form is not square");
  const std::size_t n = p.rows();
  if (!parity.empty() && parity.size() != n) throw DimensionError("enumerate_ellipsoid: parity length");
  if (bound < 0) return;
  // x^T p x = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  RatMatrix mu(n, n);
  std::vector<Rational> d(n);
  {
    RatMatrix a = p;
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, i) <= 0) throw PreconditionError("enumerate_ellipsoid: form is not positive definite");
      d[i] = a(i, i);
      for (std::size_t j = i + 1; j < n; ++j) mu(i, j) = a(i, j) / d[i];
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= d[i] * mu(i, j) * mu(i, k);
    }
  }
  IntVector x(n, 0);
  auto parity_ok = [&](std::size_t i, const Integer& v) {
    if (parity.empty()) return true;
    Integer r = v % 2;
    if (r < 0) r += 2;
    return r == parity[i] % 2;
  };
  // Recursive descent from the last coordinate.
  auto descend = [&](auto&& self, std::size_t level, const Rational& remaining) -> void {
    const std::size_t i = level - 1;
    Rational shift = 0;
    for (std::size_t j = i + 1; j < n; ++j) shift += mu(i, j) * x[j];
    const Rational center = -shift;
    auto fits = [&](const Integer& v) {
      Rational off = Rational(v) + shift;
      return off * off * d[i] <= remaining;
    };
    auto visit_value = [&](const Integer& v) {
      x[i] = v;
      if (!parity_ok(i, v)) return;
      Rational off = Rational(v) + shift;
      Rational rest = remaining - off * off * d[i];
      if (i == 0) {
        visit(static_cast<const IntVector&>(x));
      } else {
        self(self, i, rest);
      }
    };
    // The admissible set is an interval around `center`; the integers nearest
    // to the center are inside whenever any integer is.
    const Integer lo = floor(center);
    for (Integer v = lo; fits(v); --v) visit_value(v);
    for (Integer v = lo + 1; fits(v); ++v) visit_value(v);
    x[i] = 0;
  };
  if (n == 0) {
    visit(static_cast<const IntVector&>(x));
    return;
  }
  descend(descend, n, bound);
}

}  // namespace plumbtau
