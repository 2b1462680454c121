#pragma once

// Independent brute-force oracles for the test suite. Nothing here calls into
// the library's algorithms: arithmetic is plain int64 with gcd reduction,
// determinants are Laplace expansions, and homology is computed grading by
// grading from explicit bases.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

// Seed for property suites; PLUMBTAU_SEED overrides the default.
inline std::uint64_t seed(std::uint64_t fallback = 20240917) {
  if (const char* s = std::getenv("PLUMBTAU_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

// ---------------------------------------------------------------------------
// Fractions
// ---------------------------------------------------------------------------

struct Frac {
  long long num = 0, den = 1;

  Frac() = default;
  Frac(long long n, long long d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
  bool integral() const { return den == 1; }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

using FMat = std::vector<std::vector<Frac>>;

inline long long laplace_det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    long long term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

// Gauss-Jordan over Frac; returns empty on singular input.
inline FMat frac_inverse(const Mat& m) {
  const std::size_t n = m.size();
  FMat a(n, std::vector<Frac>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Frac(m[i][j]);
    a[i][n + i] = Frac(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col].num == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[col]);
    Frac piv = a[col][col];
    for (auto& x : a[col]) x = x / piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].num == 0) continue;
      Frac f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  FMat inv(n, std::vector<Frac>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

inline Frac frac_pair(const FMat& qinv, const Vec& u, const Vec& v) {
  Frac total;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) total = total + Frac(u[i]) * qinv[i][j] * Frac(v[j]);
  return total;
}

// Does g x = v have an integer solution with |x_i| <= 10? (2x2 only.)
inline bool brute_in_image_2x2(const Mat& g, const Vec& v) {
  for (long long a = -10; a <= 10; ++a)
    for (long long b = -10; b <= 10; ++b)
      if (g[0][0] * a + g[0][1] * b == v[0] && g[1][0] * a + g[1][1] * b == v[1]) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Lattice oracles
// ---------------------------------------------------------------------------

// k and k' lie in the same class iff Q^{-1}(k - k') / 2 is integral.
inline bool same_coset(const FMat& qinv, const Vec& a, const Vec& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    Frac s;
    for (std::size_t j = 0; j < n; ++j) s = s + qinv[i][j] * Frac(a[j] - b[j]);
    if (!(s / Frac(2)).integral()) return false;
  }
  return true;
}

inline bool characteristic(const Mat& q, const Vec& k) {
  for (std::size_t i = 0; i < k.size(); ++i)
    if (((k[i] - q[i][i]) % 2 + 2) % 2 != 0) return false;
  return true;
}

// All characteristic vectors in the box |k_i| <= bound.
inline std::vector<Vec> box_characteristic(const Mat& q, long long bound) {
  std::vector<Vec> out;
  const std::size_t n = q.size();
  Vec k(n, -bound);
  for (;;) {
    if (characteristic(q, k)) out.push_back(k);
    std::size_t i = n;
    while (i-- > 0) {
      if (k[i] < bound) {
        ++k[i];
        break;
      }
      k[i] = -bound;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

struct BoxTau {
  Frac max_square;   // max of k^T Q^{-1} k over the coset (within the box)
  Frac tau;          // (min over max-square reps of k.Q^{-1}m - m.Q^{-1}m) / 2
};

inline BoxTau brute_tau(const Mat& q, const Vec& rep, const Vec& m, long long bound) {
  FMat qinv = frac_inverse(q);
  bool first = true;
  BoxTau out;
  std::vector<Vec> best;
  for (const auto& k : box_characteristic(q, bound)) {
    if (!same_coset(qinv, k, rep)) continue;
    Frac sq = frac_pair(qinv, k, k);
    if (first || out.max_square < sq) {
      out.max_square = sq;
      best = {k};
      first = false;
    } else if (sq == out.max_square) {
      best.push_back(k);
    }
  }
  Frac lo = frac_pair(qinv, best.front(), m);
  for (const auto& k : best) lo = std::min(lo, frac_pair(qinv, k, m));
  out.tau = (lo - frac_pair(qinv, m, m)) / Frac(2);
  return out;
}

// ---------------------------------------------------------------------------
// Floer complexes: plain description, random generation, brute-force homology
// ---------------------------------------------------------------------------

struct Complex {
  std::vector<int> gr;
  std::vector<int> level;
  std::vector<std::vector<char>> d;  // d[x][y] = 1 iff dx contains U^m y
  int ell = 1;

  std::size_t size() const { return gr.size(); }
  int power(std::size_t x, std::size_t y) const { return (gr[y] - gr[x] + 1) / 2; }
};

class ComplexFactory {
 public:
  explicit ComplexFactory(std::uint64_t s) : rng_(s) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // A tower with a short staircase, U^p-pairs, random homogeneous basis
  // changes and a random valid filtration. For ell = 2 the ell = 1 complex is
  // tensored with the two-generator unlink model.
  Complex make(int ell, int max_generators) {
    const int budget = ell == 2 ? max_generators / 2 : max_generators;
    Complex c;
    auto add_gen = [&](int g) {
      c.gr.push_back(g);
      for (auto& row : c.d) row.push_back(0);
      c.d.emplace_back(c.gr.size(), 0);
      return c.gr.size() - 1;
    };
    const int base = 2 * pick(-2, 2);
    std::size_t prev = add_gen(base);
    const int steps = std::min(pick(0, 2), (budget - 1) / 2);
    for (int i = 0; i < steps; ++i) {
      int p = pick(0, 2), q = pick(0, 2);
      std::size_t b = add_gen(c.gr[prev] - 2 * p + 1);
      std::size_t a = add_gen(c.gr[b] - 1 + 2 * q);
      c.d[b][prev] = 1;
      c.d[b][a] = 1;
      prev = a;
    }
    while (static_cast<int>(c.size()) + 2 <= budget && pick(0, 2) != 0) {
      int p = pick(0, 2);
      int gy = base + 2 * pick(-1, 1) - pick(0, 1);
      std::size_t y = add_gen(gy);
      std::size_t x = add_gen(gy - 2 * p + 1);
      c.d[x][y] = 1;
    }
    const int changes = pick(0, 6);
    for (int t = 0; t < changes; ++t) {
      std::size_t a = static_cast<std::size_t>(pick(0, static_cast<int>(c.size()) - 1));
      std::size_t b = static_cast<std::size_t>(pick(0, static_cast<int>(c.size()) - 1));
      if (a == b || c.gr[b] < c.gr[a] || (c.gr[b] - c.gr[a]) % 2 != 0) continue;
      // e_a <- e_a + U^k e_b: row a gains row b; every e_a in a boundary becomes e_a + U^k e_b.
      for (std::size_t y = 0; y < c.size(); ++y) c.d[a][y] ^= c.d[b][y];
      for (std::size_t z = 0; z < c.size(); ++z)
        if (c.d[z][a]) c.d[z][b] ^= 1;
    }
    c.level.resize(c.size());
    for (auto& a : c.level) a = pick(-3, 3);
    if (ell == 2) c = tensor_unlink(c, pick(-1, 1));
    relax(c);
    return c;
  }

  static Complex tensor_unlink(const Complex& c, int bottom_level) {
    Complex t;
    t.ell = 2;
    const std::size_t n = c.size();
    for (int half = 0; half < 2; ++half)
      for (std::size_t x = 0; x < n; ++x) {
        t.gr.push_back(c.gr[x] - half);
        t.level.push_back(c.level[x] + (half ? bottom_level : 0));
      }
    t.d.assign(2 * n, std::vector<char>(2 * n, 0));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        t.d[x][y] = c.d[x][y];
        t.d[n + x][n + y] = c.d[x][y];
      }
    return t;
  }

  // Raise levels until every entry satisfies A(y) - m <= A(x).
  static void relax(Complex& c) {
    for (std::size_t round = 0; round <= c.size(); ++round)
      for (std::size_t x = 0; x < c.size(); ++x)
        for (std::size_t y = 0; y < c.size(); ++y)
          if (c.d[x][y]) c.level[x] = std::max(c.level[x], c.level[y] - c.power(x, y));
  }

 private:
  std::mt19937_64 rng_;
};

// dim over F2 of H(C^-) in grading g, from the explicit basis {U^k x : gr(x) - 2k = g}.
inline int homology_dimension(const Complex& c, int g, int max_power = 10) {
  auto basis = [&](int grading) {
    std::vector<std::pair<std::size_t, int>> out;
    for (std::size_t x = 0; x < c.size(); ++x) {
      int diff = c.gr[x] - grading;
      if (diff >= 0 && diff % 2 == 0 && diff / 2 <= max_power) out.push_back({x, diff / 2});
    }
    return out;
  };
  // Matrix of d from grading h to h - 1, as rows over the target basis.
  auto matrix = [&](int h) {
    auto src = basis(h), dst = basis(h - 1);
    std::vector<std::vector<char>> rows;
    for (const auto& [x, k] : src) {
      std::vector<char> row(dst.size(), 0);
      for (std::size_t y = 0; y < c.size(); ++y) {
        if (!c.d[x][y]) continue;
        int total = k + c.power(x, y);
        for (std::size_t j = 0; j < dst.size(); ++j)
          if (dst[j].first == y && dst[j].second == total) row[j] ^= 1;
      }
      rows.push_back(row);
    }
    return std::make_pair(rows, dst.size());
  };
  auto rank = [](std::vector<std::vector<char>> rows, std::size_t width) {
    int r = 0;
    for (std::size_t col = 0; col < width; ++col) {
      std::size_t p = static_cast<std::size_t>(r);
      while (p < rows.size() && !rows[p][col]) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[static_cast<std::size_t>(r)]);
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != static_cast<std::size_t>(r) && rows[i][col])
          for (std::size_t j = 0; j < width; ++j) rows[i][j] ^= rows[static_cast<std::size_t>(r)][j];
      ++r;
    }
    return r;
  };
  auto [out_rows, out_width] = matrix(g);
  auto [in_rows, in_width] = matrix(g + 1);
  int dim_chains = static_cast<int>(basis(g).size());
  return dim_chains - rank(out_rows, out_width) - rank(in_rows, in_width);
}

// Predicted dimension in grading g from a tower/torsion list.
inline int predicted_dimension(const std::vector<int>& towers, const std::vector<std::pair<int, int>>& torsion, int g) {
  int dim = 0;
  for (int t : towers)
    if (g <= t && (t - g) % 2 == 0) ++dim;
  for (const auto& [gy, p] : torsion)
    if (g <= gy && (gy - g) % 2 == 0 && (gy - g) / 2 < p) ++dim;
  return dim;
}

}  // namespace oracle
