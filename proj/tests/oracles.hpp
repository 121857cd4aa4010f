#pragma once

// Reference computations for the test suites. They are written directly
// from the defining formulas with plain containers and brute force, and
// share no code with the library beyond the gmpxx rational type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;  // row-major
using Q = mpq_class;
using QV = std::vector<Q>;

inline Mat gram(int n, const std::vector<std::pair<int, int>>& edges) {
  Mat g(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  for (auto [a, b] : edges) g[a - 1][b - 1] = g[b - 1][a - 1] = 1;
  return g;
}

inline long form(const Mat& g, const Vec& v, const Vec& w) {
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) s += v[i] * g[i][j] * w[j];
  return s;
}

// Every integer vector with |v_i| <= bound and (v,v) = -2.
inline std::set<Vec> brute_force_roots(const Mat& g, long bound) {
  const auto n = g.size();
  std::set<Vec> out;
  Vec v(n, -bound);
  for (;;) {
    if (form(g, v, v) == -2) out.insert(v);
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const auto n = a.size();
  Mat c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t(a.size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Matrix of x -> x + (e_i, x) e_i on curve coordinates.
inline Mat simple_reflection(const Mat& g, int i) {
  const auto n = g.size();
  Mat m(n, Vec(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    m[c][c] = 1;
    m[i - 1][c] += g[i - 1][c];
  }
  return m;
}

// Group closure of the simple reflections (matrices on curve coordinates).
inline std::set<Mat> weyl_group(const Mat& g) {
  const auto n = g.size();
  Mat id(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Mat> seen{id};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& m : frontier)
      for (int i = 1; i <= static_cast<int>(n); ++i) {
        Mat p = mul(m, simple_reflection(g, i));
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline QV mat_apply(const Mat& m, const QV& v) {
  QV out(m.size(), Q(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += Q(m[i][j]) * v[j];
  return out;
}

// The group elements w (curve-coordinate matrices) whose pullback w^T omega
// is strictly ample, by exhaustive search.
inline std::vector<Mat> chambers_containing(const std::set<Mat>& group, const QV& omega) {
  std::vector<Mat> out;
  for (const auto& m : group) {
    QV rep = mat_apply(transpose(m), omega);
    if (std::all_of(rep.begin(), rep.end(), [](const Q& x) { return x > 0; })) out.push_back(m);
  }
  return out;
}

inline Q dual_pair(const QV& d, const Vec& x) {
  Q s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * Q(x[i]);
  return s;
}

inline bool integral(const Q& q) { return q.get_den() == 1; }

// Membership in the union of H_{v,k} over the brute-force root set.
inline bool forbidden(const std::set<Vec>& roots, const QV& beta, const QV& omega) {
  for (const auto& v : roots)
    if (dual_pair(omega, v) == 0 && integral(dual_pair(beta, v))) return true;
  return false;
}

// Affine action of one generator on a point of N^1_C, straight from the
// formulas: a twist adds L to beta, a flop at i applies
// d -> d + (d.e_i) G e_i to both beta and omega.
struct Gen {
  bool flop;
  int curve;
  Vec twist;
};

inline void act(const Mat& g, const Gen& x, QV& beta, QV& omega) {
  const auto n = g.size();
  if (!x.flop) {
    for (std::size_t j = 0; j < n; ++j) beta[j] += Q(x.twist[j]);
    return;
  }
  const std::size_t i = static_cast<std::size_t>(x.curve - 1);
  const Q b = beta[i], w = omega[i];
  for (std::size_t j = 0; j < n; ++j) {
    beta[j] += b * Q(g[i][j]);
    omega[j] += w * Q(g[i][j]);
  }
}

// Theta(u) applied to (beta, omega): the rightmost generator acts first.
inline std::pair<QV, QV> apply_word(const Mat& g, const std::vector<Gen>& word, QV beta, QV omega) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) act(g, *it, beta, omega);
  return {beta, omega};
}

// Conifold homotopy class of a path in C \ Z from the upper half plane:
// the sequence of real-axis crossings (interval floor(x), direction) with
// immediate back-and-forth crossings through the same interval removed.
// C \ Z is two half planes glued along the unit intervals, so this reduced
// sequence is a complete invariant of the path up to homotopy rel ends.
struct AxisCrossing {
  long interval;
  bool downward;
  bool operator==(const AxisCrossing&) const = default;
};

inline std::vector<AxisCrossing> conifold_reduced_crossings(const std::vector<std::pair<Q, Q>>& pts) {
  std::vector<AxisCrossing> out;
  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    const auto& [x0, y0] = pts[s];
    const auto& [x1, y1] = pts[s + 1];
    if (sgn(y0) == sgn(y1)) continue;
    Q t = y0 / (y0 - y1);
    Q x = x0 + t * (x1 - x0);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    AxisCrossing c{fl.get_si(), sgn(y0) > 0};
    if (!out.empty() && out.back().interval == c.interval && out.back().downward != c.downward)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

// Random rationals p/q with q in [1, max_den] and |p/q| <= range.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Q rational(long range, long max_den) {
    const long q = integer(1, max_den);
    Q out(integer(-range * q, range * q), q);
    out.canonicalize();
    return out;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
