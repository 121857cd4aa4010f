#include "stabcov/covering.hpp"

#include <algorithm>
#include <string>

#include "stabcov/error.hpp"
#include "stabcov/strata.hpp"

namespace stabcov {

namespace {

void check_index(const RootLattice& l, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > l.rank())
    throw Error(ErrorCode::IndexOutOfRange, "curve index " + std::to_string(i));
}

ComplexDivisor lerp(const ComplexDivisor& a, const ComplexDivisor& b, const Rational& t) {
  ComplexDivisor out = a;
  for (std::size_t j = 0; j < a.rank(); ++j) {
    out.beta[j] += t * (b.beta[j] - a.beta[j]);
    out.omega[j] += t * (b.omega[j] - a.omega[j]);
  }
  return out;
}

void check_breakpoint(const RootLattice& l, const ComplexDivisor& p, std::size_t index) {
  if (p.beta.size() != l.rank() || p.omega.size() != l.rank())
    throw Error(ErrorCode::DimensionMismatch, "breakpoint " + std::to_string(index));
  if (!in_complement(l, p))
    throw Error(ErrorCode::PathHitsForbidden, "breakpoint " + std::to_string(index) + " lies on a forbidden hyperplane");
  if (!weyl_regular(l, p.omega))
    throw Error(ErrorCode::NonGenericCrossing, "breakpoint " + std::to_string(index) + " lies on a wall");
}

// Next wall met by the framed segment q0 -> q1 strictly after t_now. The
// framed omega.e_j are affine in t, so each candidate time is exact.
struct NextWall {
  int curve;
  Rational time;
};

std::optional<NextWall> next_wall(const ComplexDivisor& q0, const ComplexDivisor& q1, const Rational& t_now) {
  std::optional<NextWall> best;
  bool tie = false;
  for (std::size_t j = 0; j < q0.rank(); ++j) {
    const Rational a = q0.omega[j];
    const Rational b = q1.omega[j] - a;
    if (sgn(b) >= 0) continue;
    Rational t = -a / b;
    if (t <= t_now || t > 1) continue;
    if (!best || t < best->time) {
      best = NextWall{static_cast<int>(j + 1), t};
      tie = false;
    } else if (t == best->time) {
      tie = true;
    }
  }
  if (tie)
    throw Error(ErrorCode::NonGenericCrossing, "two walls are crossed at the same instant");
  return best;
}

}  // namespace

ComplexDivisor default_basepoint(std::size_t n) {
  return ComplexDivisor{QVec(n, Rational(1, 2)), QVec(n, Rational(1))};
}

LiftState fundamental_state(const RootLattice& l, const ComplexDivisor& position) {
  const auto n = l.rank();
  if (position.beta.size() != n || position.omega.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "start position");
  if (!ample_test(position.omega))
    throw Error(ErrorCode::StartNotGeneric, "start omega is not ample");
  return LiftState{{}, AffineMap::identity(n), FMWord{}, position, AffineMap::identity(n)};
}

FMWord crossing_generator(const RootLattice& l, int i, std::int64_t k) {
  check_index(l, i);
  IntVec d(l.rank(), 0);
  d[static_cast<std::size_t>(i - 1)] = k;
  if (k == 0) return FMWord{{Flop{i}}};
  return FMWord{{Twist{std::move(d)}, Flop{i}}};
}

LiftResult lift_path(const RootLattice& l, const PLPath& path, const LiftState& start) {
  if (path.breakpoints.size() < 2) throw Error(ErrorCode::Parse, "a path needs at least two breakpoints");
  if (path.breakpoints.front() != start.position)
    throw Error(ErrorCode::StartNotGeneric, "path does not begin at the start position");
  for (std::size_t b = 0; b < path.breakpoints.size(); ++b) check_breakpoint(l, path.breakpoints[b], b);
  if (!ample_test(start.framed_position().omega))
    throw Error(ErrorCode::StartNotGeneric, "framed start omega is not ample");

  LiftResult res{start, {}};
  LiftState& st = res.state;

  for (std::size_t s = 0; s + 1 < path.breakpoints.size(); ++s) {
    const auto& p0 = path.breakpoints[s];
    const auto& p1 = path.breakpoints[s + 1];
    Rational t_now = 0;
    for (;;) {
      const AffineMap inv = st.theta_word.inverse();
      const ComplexDivisor q0 = inv.apply(p0);
      const ComplexDivisor q1 = inv.apply(p1);
      auto wall = next_wall(q0, q1, t_now);
      if (!wall) break;
      if (wall->time == 1)
        throw Error(ErrorCode::NonGenericCrossing, "segment ends on a wall");

      const ComplexDivisor framed = lerp(q0, q1, wall->time);
      const Rational& x = framed.beta[static_cast<std::size_t>(wall->curve - 1)];
      if (is_integer(x))
        throw Error(ErrorCode::PathHitsForbidden,
                    "segment " + std::to_string(s) + " meets a forbidden hyperplane of curve " + std::to_string(wall->curve));
      const std::int64_t k = floor_int(x) + 1;
      const int i = wall->curve;

      Crossing c{i, k, Crossing::Direction::Forward};
      const FMWord gamma = crossing_generator(l, i, k);
      st.history = compose(st.history, gamma);

      if (k == 1 && !st.stack.empty() && st.stack.back().curve == i) {
        // Immediate recross of the wall we came through. Restore the frame
        // held before that crossing; the difference is a right twist, which
        // is recorded so the history still has theta equal to the frame.
        const Crossing top = st.stack.back();
        st.stack.pop_back();
        const AffineMap there_and_back = theta(l, crossing_generator(l, i, top.strip)) * theta(l, gamma);
        IntVec undo = there_and_back.trans;
        for (auto& v : undo) v = -v;
        if (std::any_of(undo.begin(), undo.end(), [](auto v) { return v != 0; }))
          st.history = compose(st.history, FMWord{{Twist{undo}}});
        st.theta_word = st.theta_word * theta(l, gamma) * AffineMap::translation(undo);
        c.direction = Crossing::Direction::Backtrack;
      } else {
        st.stack.push_back(c);
        st.theta_word = st.theta_word * theta(l, gamma);
      }
      res.trace.push_back(CrossingEvent{s, wall->time, c, lerp(p0, p1, wall->time), framed});
      t_now = wall->time;
    }
    st.position = p1;
  }
  return res;
}

LiftResult lift_path(const RootLattice& l, const PLPath& path) {
  if (path.breakpoints.empty()) throw Error(ErrorCode::Parse, "empty path");
  return lift_path(l, path, fundamental_state(l, path.breakpoints.front()));
}

PLPath reversed(const PLPath& path) {
  PLPath out = path;
  std::reverse(out.breakpoints.begin(), out.breakpoints.end());
  return out;
}

PLPath concatenated(const PLPath& a, const PLPath& b) {
  if (a.breakpoints.empty() || b.breakpoints.empty() || a.breakpoints.back() != b.breakpoints.front())
    throw Error(ErrorCode::NotALoop, "paths do not share an endpoint");
  PLPath out = a;
  out.breakpoints.insert(out.breakpoints.end(), b.breakpoints.begin() + 1, b.breakpoints.end());
  return out;
}

PLPath meridian_loop(const RootLattice& l, int i, std::int64_t k, const ComplexDivisor& base) {
  check_index(l, i);
  const auto n = l.rank();
  if (base.beta.size() != n || base.omega.size() != n) throw Error(ErrorCode::DimensionMismatch, "meridian base");
  if (!ample_test(base.omega) || !in_complement(l, base))
    throw Error(ErrorCode::NotEncirclable, "base point is not in the fundamental chamber");

  const auto ii = static_cast<std::size_t>(i - 1);
  const Rational top = base.omega[ii];
  // The bottom edge must keep omega.v positive for every other positive
  // root v through C_i, so only H_{e_i,k} is enclosed. Half of the slack
  // left by the remaining coordinates is enough.
  Rational depth = top;
  for (const auto& v : l.positive_roots()) {
    const auto ci = v.coords[ii];
    if (ci == 0) continue;
    Rational rest = dot(std::span<const Rational>(base.omega), std::span<const std::int64_t>(v.coords)) - ci * top;
    if (sgn(rest) == 0) continue;  // v = e_i itself
    Rational bound = rest / (2 * ci);
    if (bound < depth) depth = bound;
  }

  auto with = [&](const ComplexDivisor& p, const Rational& b, const Rational& w) {
    ComplexDivisor q = p;
    q.beta[ii] = b;
    q.omega[ii] = w;
    return q;
  };
  const Rational right = Rational(k) + Rational(1, 2);
  const Rational left = Rational(k) - Rational(1, 2);
  PLPath loop;
  loop.breakpoints.push_back(base);
  if (base.beta[ii] != right) loop.breakpoints.push_back(with(base, right, top));
  loop.breakpoints.push_back(with(base, right, -depth));
  loop.breakpoints.push_back(with(base, left, -depth));
  loop.breakpoints.push_back(with(base, left, top));
  loop.breakpoints.push_back(base);
  return loop;
}

DeckElement deck_element(const RootLattice& l, const PLPath& loop) {
  if (loop.breakpoints.size() < 2 || loop.breakpoints.front() != loop.breakpoints.back())
    throw Error(ErrorCode::NotALoop, "path endpoints differ");
  LiftResult lifted = lift_path(l, loop);
  const AffineMap& t = lifted.state.theta_word;
  if (!t.is_translation())
    throw Error(ErrorCode::NotALoop, "closed loop ended with a non-trivial model");
  DeckElement out;
  out.unnormalized_theta = t;
  out.normalization = t.trans;
  for (auto& v : out.normalization) v = -v;
  out.word = lifted.state.history;
  if (std::any_of(out.normalization.begin(), out.normalization.end(), [](auto v) { return v != 0; }))
    out.word = compose(out.word, FMWord{{Twist{out.normalization}}});
  out.reduced_stack = lifted.state.stack;
  out.loop = loop;
  out.trace = std::move(lifted.trace);
  return out;
}

DeckElement meridian(const RootLattice& l, int i, std::int64_t k, const ComplexDivisor& base) {
  return deck_element(l, meridian_loop(l, i, k, base));
}

ChamberVerdict same_chamber(const RootLattice& l, const LiftState& a, const LiftState& b) {
  if (a.base != b.base) throw Error(ErrorCode::BaseMismatch, "states lifted from different base frames");
  if (a.stack == b.stack) return ChamberVerdict::Equal;
  if (a.model() != b.model()) return ChamberVerdict::Distinct;
  // For a single curve the base has free fundamental group, so reduced
  // words label chambers faithfully. With more curves, equal models with
  // different words may or may not be the same chamber.
  if (l.rank() == 1) return ChamberVerdict::Distinct;
  return ChamberVerdict::ThetaEqualWordDistinct;
}

std::string_view verdict_name(ChamberVerdict v) {
  switch (v) {
    case ChamberVerdict::Equal: return "Equal";
    case ChamberVerdict::Distinct: return "Distinct";
    case ChamberVerdict::ThetaEqualWordDistinct: return "ThetaEqualWordDistinct";
  }
  return "Unknown";
}

}  // namespace stabcov
