#pragma once

#include <compare>
#include <cstdint>

#include "stabcov/lattice.hpp"
#include "stabcov/rational.hpp"

namespace stabcov {

// Class in K(D_{X/Y}) = Z[O_x] + sum_i Z[O_{C_i}(-1)]. point_mult is ch_3,
// curve_mult is ch_2 in the curve basis.
struct KClass {
  std::int64_t point_mult = 0;
  IntVec curve_mult;

  KClass operator+(const KClass& o) const;
  KClass operator-(const KClass& o) const;
  KClass operator-() const;

  friend bool operator==(const KClass&, const KClass&) = default;
  friend auto operator<=>(const KClass&, const KClass&) = default;
};

// beta + i omega in N^1(X/Y)_C, coordinates in the dual basis D_1..D_N.
struct ComplexDivisor {
  QVec beta;
  QVec omega;

  std::size_t rank() const { return beta.size(); }
  friend bool operator==(const ComplexDivisor&, const ComplexDivisor&) = default;
};

struct ExactComplex {
  Rational re;
  Rational im;

  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

// (ch_0, ch_1) of an object of D^b(X).
struct AmbientClass {
  std::int64_t rank = 0;
  IntVec div;
};

// Z_(beta,omega)(E) = -ch_3(E) + (beta + i omega) ch_2(E).
ExactComplex central_charge(const ComplexDivisor& p, const KClass& c);

// chi(E, F) = ch_0(E) ch_3(F) - ch_1(E) ch_2(F).
std::int64_t euler_pairing(const AmbientClass& e, const KClass& c);

// [O_{C_i}(m)] = (m + 1)[O_x] + [O_{C_i}(-1)].
KClass line_bundle_class(std::size_t n_curves, int i, std::int64_t m);

KClass point_class(std::size_t n_curves);

// [O_C] for the scheme-theoretic fibre, whose 1-cycle is the fundamental
// cycle (highest root); (1, (1,...,1)) for a chain.
KClass fiber_class(const RootLattice& l);

// Compares phases in (0,1] of nonzero values in {Im > 0} or R_{<0}.
// Throws OutOfSector otherwise.
std::weak_ordering phase_compare(const ExactComplex& z1, const ExactComplex& z2);

bool in_sector(const ExactComplex& z);

}  // namespace stabcov
