#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "stabcov/charge.hpp"
#include "stabcov/covering.hpp"
#include "stabcov/error.hpp"
#include "stabcov/fm_words.hpp"
#include "stabcov/lattice.hpp"

namespace testing {

using namespace stabcov;

inline DualGraph chain(int n) {
  DualGraph g{n, {}};
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

inline DualGraph d4() { return DualGraph{4, {{1, 2}, {1, 3}, {1, 4}}}; }

inline RootLattice lattice_a(int n) { return RootLattice::build(chain(n)); }

inline oracle::Mat oracle_gram(const DualGraph& g) { return oracle::gram(g.n_curves, g.edges); }

inline Rational q(long p, long d = 1) { return make_rational(p, d); }

inline ComplexDivisor point(std::vector<Rational> beta, std::vector<Rational> omega) {
  return ComplexDivisor{std::move(beta), std::move(omega)};
}

inline ComplexDivisor random_point(oracle::Rng& rng, std::size_t n, long range = 3, long den = 6) {
  ComplexDivisor p{QVec(n), QVec(n)};
  for (std::size_t i = 0; i < n; ++i) {
    p.beta[i] = rng.rational(range, den);
    p.omega[i] = rng.rational(range, den);
  }
  return p;
}

inline FMWord random_word(oracle::Rng& rng, std::size_t n, int max_len = 6) {
  FMWord u;
  const int len = static_cast<int>(rng.integer(0, max_len));
  for (int i = 0; i < len; ++i) {
    if (rng.integer(0, 1) == 0) {
      IntVec d(n);
      for (auto& x : d) x = rng.integer(-3, 3);
      u.gens.push_back(Twist{d});
    } else {
      u.gens.push_back(Flop{static_cast<int>(rng.integer(1, static_cast<long>(n)))});
    }
  }
  return u;
}

inline std::vector<oracle::Gen> to_oracle(const FMWord& u) {
  std::vector<oracle::Gen> out;
  for (const auto& g : u.gens) {
    if (const auto* t = std::get_if<Twist>(&g))
      out.push_back({false, 0, oracle::Vec(t->divisor.begin(), t->divisor.end())});
    else
      out.push_back({true, std::get<Flop>(g).curve, {}});
  }
  return out;
}

// Random path of `len` segments starting at `start`. Breakpoints are random
// rationals; the caller discards the rare non-generic draws.
inline PLPath random_path(oracle::Rng& rng, const ComplexDivisor& start, int len, long range = 3, long den = 5) {
  PLPath p{{start}};
  for (int i = 0; i < len; ++i) p.breakpoints.push_back(random_point(rng, start.rank(), range, den));
  return p;
}

inline bool is_genericity_error(const Error& e) {
  return e.code() == ErrorCode::NonGenericCrossing || e.code() == ErrorCode::PathHitsForbidden;
}

}  // namespace testing
