#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "stabcov/charge.hpp"
#include "stabcov/fm_words.hpp"
#include "stabcov/lattice.hpp"

namespace stabcov {

// omega lies in the open Weyl chamber dual_mat(A) of `chamber`.
struct AmpleChamber {
  WeylElement chamber;
};

// After pulling back by `frame`, the point lies in W_{curve, strip}:
// omega.C_curve = 0, omega.C_j > 0 otherwise, beta.C_curve in (strip-1, strip).
struct WallStrip {
  int curve = 1;
  std::int64_t strip = 0;
  WeylElement frame;
};

// After pulling back by `frame`, omega vanishes on the simple roots `curves`
// (at least two) and is positive on the rest. `strips` holds the strip of
// beta.C_i for each vanishing simple root and `root_strips` the strip of
// beta.v for every positive root v supported on `curves`; together they pin
// down the alcove of the framed beta. `alcove` is an affine map built from
// reflections in those roots and integral translations that carries the
// negative fundamental alcove {beta.C_i < 0, beta.theta > -1} of each
// component onto it.
struct DeepStratum {
  std::vector<int> curves;
  std::map<int, std::int64_t> strips;
  std::vector<std::pair<Root, std::int64_t>> root_strips;
  WeylElement frame;
  AffineMap alcove;
};

// (beta + i omega).v = k for the positive root v.
struct Forbidden {
  Root root;
  std::int64_t k = 0;
};

using StratumLabel = std::variant<AmpleChamber, WallStrip, DeepStratum, Forbidden>;

struct ChamberLocation {
  WeylElement weyl;
  QVec representative;  // weyl.pullback(omega)
};

// First positive root v (in sorted order) with omega.v = 0 and beta.v integral.
std::optional<Forbidden> find_forbidden(const RootLattice& l, const ComplexDivisor& p);
bool in_complement(const RootLattice& l, const ComplexDivisor& p);

bool ample_test(std::span<const Rational> omega);
bool weyl_regular(const RootLattice& l, std::span<const Rational> omega);

// Requires omega.v != 0 for every root (OnWall otherwise).
ChamberLocation locate_weyl_chamber(const RootLattice& l, std::span<const Rational> omega);
// Same walk without the genericity requirement: the representative is in the
// closed fundamental chamber.
ChamberLocation locate_closed_chamber(const RootLattice& l, std::span<const Rational> omega);

StratumLabel classify(const RootLattice& l, const ComplexDivisor& p);

}  // namespace stabcov
