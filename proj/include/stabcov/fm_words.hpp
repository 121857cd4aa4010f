#pragma once

#include <variant>
#include <vector>

#include "stabcov/charge.hpp"
#include "stabcov/int_matrix.hpp"
#include "stabcov/lattice.hpp"

namespace stabcov {

// Affine transformation d -> linear d + trans of N^1(X/Y)_C. The translation
// is real (a line bundle class), so it moves beta only.
struct AffineMap {
  IntMatrix linear;
  IntVec trans;

  static AffineMap identity(std::size_t n);
  static AffineMap translation(IntVec t);

  std::size_t rank() const { return trans.size(); }
  bool is_identity() const;
  bool is_translation() const { return linear.is_identity(); }

  // (w1,t1)(w2,t2) = (w1 w2, t1 + w1 t2)
  AffineMap operator*(const AffineMap& rhs) const;
  AffineMap inverse() const;

  ComplexDivisor apply(const ComplexDivisor& p) const;
  ComplexDivisor apply_inverse(const ComplexDivisor& p) const;
  // Induced map on K-classes, characterised by Z_{T(q)}(T c) = Z_q(c).
  KClass act(const KClass& c) const;

  WeylElement model() const { return WeylElement::from_dual(linear); }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct Twist {
  IntVec divisor;  // in Pic = Z D_1 + ... + Z D_N
  friend bool operator==(const Twist&, const Twist&) = default;
};

struct Flop {
  int curve = 1;  // 1-based
  friend bool operator==(const Flop&, const Flop&) = default;
};

using Generator = std::variant<Twist, Flop>;

// Free word Phi^1 o ... o Phi^n; gens.front() is applied last.
struct FMWord {
  std::vector<Generator> gens;
  friend bool operator==(const FMWord&, const FMWord&) = default;
};

AffineMap theta(const RootLattice& l, const Generator& g);
AffineMap theta(const RootLattice& l, const FMWord& u);

FMWord compose(const FMWord& u, const FMWord& v);
// Reverses the word; twists are negated and a flop is its own formal inverse.
FMWord invert(const FMWord& u);

// ch_1 Phi(O): the translation part of theta.
IntVec ch1_structure(const RootLattice& l, const FMWord& u);
WeylElement model_of(const RootLattice& l, const FMWord& u);

bool is_in_G(const RootLattice& l, const FMWord& u);
bool is_in_G0(const RootLattice& l, const FMWord& u);

}  // namespace stabcov
