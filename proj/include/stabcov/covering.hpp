#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabcov/charge.hpp"
#include "stabcov/fm_words.hpp"
#include "stabcov/lattice.hpp"

namespace stabcov {

// Piecewise-linear path in N^1(X/Y)_C.
struct PLPath {
  std::vector<ComplexDivisor> breakpoints;
};

// Wall crossing through the frame strip W_{curve, strip}. Forward crossings
// enter a new chamber; Backtrack crossings undo the top of the stack.
struct Crossing {
  enum class Direction { Forward, Backtrack };
  int curve = 1;
  std::int64_t strip = 0;
  Direction direction = Direction::Forward;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A chamber of the cover together with a point in its closure.
// `stack` is the reduced gallery word from the base chamber and
// `theta_word` = base * theta(gamma_{s_1}) * ... * theta(gamma_{s_m}) is the
// frame: theta_word^-1(position) has ample omega. `history` is the full FM
// word of the crossings made, cancellations included together with the right
// twist that restores the frame on each cancellation, so that
// theta(history) == base^-1 * theta_word always.
struct LiftState {
  std::vector<Crossing> stack;
  AffineMap theta_word;
  FMWord history;
  ComplexDivisor position;
  AffineMap base;

  WeylElement model() const { return theta_word.model(); }
  ComplexDivisor framed_position() const { return theta_word.apply_inverse(position); }

  friend bool operator==(const LiftState& a, const LiftState& b) {
    return a.stack == b.stack && a.theta_word == b.theta_word && a.position == b.position && a.base == b.base;
  }
};

struct CrossingEvent {
  std::size_t segment = 0;
  Rational time;  // in [0,1] along the segment
  Crossing crossing;
  ComplexDivisor point;
  ComplexDivisor framed_point;  // in the frame before the crossing
};

struct LiftResult {
  LiftState state;
  std::vector<CrossingEvent> trace;
};

// beta = (1/2, ..., 1/2), omega = (1, ..., 1).
ComplexDivisor default_basepoint(std::size_t n);

// Fundamental chamber state at `position`; StartNotGeneric unless omega is ample.
LiftState fundamental_state(const RootLattice& l, const ComplexDivisor& position);

// gamma_{i,k} = Twist(k D_i) o Flop(i): the chamber across frame strip (i,k).
FMWord crossing_generator(const RootLattice& l, int i, std::int64_t k);

LiftResult lift_path(const RootLattice& l, const PLPath& path, const LiftState& start);
LiftResult lift_path(const RootLattice& l, const PLPath& path);

PLPath reversed(const PLPath& path);
PLPath concatenated(const PLPath& a, const PLPath& b);

struct DeckElement {
  FMWord word;                          // normalised; is_in_G0 holds
  std::vector<Crossing> reduced_stack;
  AffineMap unnormalized_theta;         // theta of the lifted loop's word
  IntVec normalization;                 // the right twist appended
  PLPath loop;
  std::vector<CrossingEvent> trace;
};

// Rectangle around H_{e_i,k} in the (beta_i, omega_i) plane through `base`.
PLPath meridian_loop(const RootLattice& l, int i, std::int64_t k, const ComplexDivisor& base);

DeckElement meridian(const RootLattice& l, int i, std::int64_t k, const ComplexDivisor& base);

// Lifts a closed loop from the fundamental chamber and normalises the word
// by a right twist into G°. NotALoop if the endpoints differ.
DeckElement deck_element(const RootLattice& l, const PLPath& loop);

enum class ChamberVerdict { Equal, Distinct, ThetaEqualWordDistinct };

ChamberVerdict same_chamber(const RootLattice& l, const LiftState& a, const LiftState& b);

std::string_view verdict_name(ChamberVerdict v);

}  // namespace stabcov
