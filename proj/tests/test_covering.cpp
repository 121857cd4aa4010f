#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "stabcov/strata.hpp"

using namespace testing;

namespace {

ComplexDivisor c1(Rational b, Rational w) { return ComplexDivisor{{b}, {w}}; }

std::vector<std::pair<int, std::int64_t>> labels(const std::vector<Crossing>& st) {
  std::vector<std::pair<int, std::int64_t>> out;
  for (const auto& c : st) out.emplace_back(c.curve, c.strip);
  return out;
}

ErrorCode lift_error(const RootLattice& l, const PLPath& p) {
  try {
    lift_path(l, p);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

// Draws a generic random path; non-generic draws are retried.
std::optional<LiftResult> try_lift(const RootLattice& l, const PLPath& p) {
  try {
    return lift_path(l, p);
  } catch (const Error& e) {
    if (!is_genericity_error(e)) throw;
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("crossing generators") {
  const auto a1 = lattice_a(1);
  const auto a2 = lattice_a(2);
  CHECK(crossing_generator(a2, 2, 0) == FMWord{{Flop{2}}});
  CHECK(theta(a1, crossing_generator(a1, 1, 1)) == AffineMap{theta(a1, Flop{1}).linear, {1}});
  for (std::int64_t k = -3; k <= 3; ++k) {
    const auto t = theta(a1, crossing_generator(a1, 1, k));
    // The strip (k-1, k) and the strip (0, 1) are exchanged.
    CHECK(t.apply(c1(Rational(1, 3), 0)).beta[0] == Rational(k) - Rational(1, 3));
    CHECK(t.apply_inverse(c1(Rational(k) - Rational(1, 3), 0)).beta[0] == Rational(1, 3));
  }
  CHECK_THROWS_AS(crossing_generator(a2, 3, 0), Error);
}

TEST_CASE("conifold lifts") {
  const auto a1 = lattice_a(1);
  auto r = lift_path(a1, PLPath{{c1(Rational(1, 2), 1), c1(Rational(1, 2), -1)}});
  CHECK(labels(r.state.stack) == std::vector<std::pair<int, std::int64_t>>{{1, 1}});
  CHECK(r.state.model() == a1.simple_reflection(1));
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].time == Rational(1, 2));

  const PLPath rect{{c1(Rational(1, 2), 1), c1(Rational(1, 2), -1), c1(Rational(-1, 2), -1), c1(Rational(-1, 2), 1),
                     c1(Rational(1, 2), 1)}};
  r = lift_path(a1, rect);
  CHECK(labels(r.state.stack) == std::vector<std::pair<int, std::int64_t>>{{1, 1}, {1, 2}});
  CHECK(r.state.theta_word == AffineMap::translation({-1}));
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[1].framed_point.beta[0] == Rational(3, 2));

  // The reverse path unwinds the stack exactly.
  const auto back = lift_path(a1, reversed(rect), r.state);
  CHECK(back.state.stack.empty());
  CHECK(back.state == fundamental_state(a1, rect.breakpoints.front()));
  CHECK(theta(a1, back.state.history).is_identity());

  // A recross through another strip leaves a trivial frame too.
  const PLPath detour{{c1(Rational(1, 2), 1), c1(Rational(3, 2), 1), c1(Rational(3, 2), -1), c1(Rational(3, 2), 1)}};
  r = lift_path(a1, detour);
  CHECK(r.state.stack.empty());
  CHECK(r.state.theta_word.is_identity());
  CHECK(r.trace.back().crossing.direction == Crossing::Direction::Backtrack);
  CHECK(theta(a1, r.state.history) == r.state.theta_word);
}

TEST_CASE("lift errors") {
  const auto a1 = lattice_a(1);
  const auto a2 = lattice_a(2);
  CHECK(lift_error(a1, PLPath{{c1(Rational(1, 2), 1), c1(Rational(-1, 2), -1)}}) == ErrorCode::PathHitsForbidden);
  CHECK(lift_error(a1, PLPath{{c1(Rational(1, 2), 1), c1(0, 0)}}) == ErrorCode::PathHitsForbidden);
  CHECK(lift_error(a1, PLPath{{c1(Rational(1, 2), 1), c1(Rational(1, 2), 0)}}) == ErrorCode::NonGenericCrossing);
  CHECK(lift_error(a1, PLPath{{c1(Rational(1, 2), -1), c1(Rational(1, 2), 1)}}) == ErrorCode::StartNotGeneric);
  // Both simple walls at once.
  CHECK(lift_error(a2, PLPath{{point({q(1, 3), q(1, 5)}, {q(1), q(1)}), point({q(1, 3), q(1, 5)}, {q(-1), q(-1)})}}) ==
        ErrorCode::NonGenericCrossing);
  CHECK(lift_error(a1, PLPath{{c1(Rational(1, 2), 1)}}) == ErrorCode::Parse);
  LiftState s = fundamental_state(a1, c1(Rational(1, 2), 1));
  CHECK_THROWS_AS(lift_path(a1, PLPath{{c1(Rational(1, 3), 1), c1(Rational(1, 2), 1)}}, s), Error);
}

TEST_CASE("conifold meridians") {
  const auto a1 = lattice_a(1);
  const auto base = default_basepoint(1);
  auto d = meridian(a1, 1, 0, base);
  CHECK(labels(d.reduced_stack) == std::vector<std::pair<int, std::int64_t>>{{1, 1}, {1, 2}});
  CHECK(d.word == FMWord{{Twist{{1}}, Flop{1}, Twist{{2}}, Flop{1}, Twist{{1}}}});
  CHECK(d.unnormalized_theta == AffineMap::translation({-1}));
  CHECK(theta(a1, d.word).is_identity());
  CHECK(is_in_G0(a1, d.word));
  CHECK(d.trace.size() == 2);

  // Around k = 1 from 3/2 + i the second crossing is again strip 2 and the
  // loop's theta is already trivial.
  d = meridian(a1, 1, 1, c1(Rational(3, 2), 1));
  CHECK(labels(d.reduced_stack) == std::vector<std::pair<int, std::int64_t>>{{1, 2}, {1, 2}});
  CHECK(d.unnormalized_theta.is_identity());
  CHECK(d.normalization == IntVec{0});
  CHECK(is_in_G0(a1, d.word));

  for (std::int64_t k = -2; k <= 2; ++k) {
    d = meridian(a1, 1, k, base);
    CHECK(labels(d.reduced_stack) == std::vector<std::pair<int, std::int64_t>>{{1, k + 1}, {1, 2}});
    CHECK(d.unnormalized_theta == AffineMap::translation({k - 1}));
    CHECK(d.normalization == IntVec{1 - k});
    CHECK(is_in_G0(a1, d.word));
    // Loop followed by its reverse is the trivial deck element.
    const auto trivial = deck_element(a1, concatenated(d.loop, reversed(d.loop)));
    CHECK(trivial.reduced_stack.empty());
    CHECK(theta(a1, trivial.word).is_identity());
  }
  CHECK_THROWS_AS(meridian(a1, 1, 0, c1(Rational(1, 2), -1)), Error);
  CHECK_THROWS_AS(meridian(a1, 2, 0, base), Error);
}

TEST_CASE("meridians on larger lattices") {
  for (const auto& g : {chain(2), chain(3), d4()}) {
    const auto l = RootLattice::build(g);
    const auto base = default_basepoint(l.rank());
    for (int i = 1; i <= static_cast<int>(l.rank()); ++i) {
      for (std::int64_t k = -1; k <= 2; ++k) {
        const auto d = meridian(l, i, k, base);
        CHECK(d.reduced_stack.size() == 2);
        CHECK(d.unnormalized_theta.is_translation());
        IntVec expected(l.rank(), 0);
        expected[static_cast<std::size_t>(i - 1)] = k - 1;
        for (int j : l.neighbours(i)) expected[static_cast<std::size_t>(j - 1)] += 2;
        CHECK(d.unnormalized_theta.trans == expected);
        IntVec neg = d.unnormalized_theta.trans;
        for (auto& x : neg) x = -x;
        CHECK(d.normalization == neg);
        CHECK(is_in_G0(l, d.word));
        // The loop encloses exactly one forbidden point of the slice.
        CHECK(d.trace.size() == 2);
      }
    }
  }
}

TEST_CASE("same chamber verdicts") {
  const auto a1 = lattice_a(1);
  const auto base = default_basepoint(1);
  const auto s = lift_path(a1, PLPath{{base, c1(Rational(1, 2), -1)}}).state;
  CHECK(same_chamber(a1, s, s) == ChamberVerdict::Equal);
  const auto t = lift_path(a1, PLPath{{base, c1(Rational(3, 2), 1), c1(Rational(3, 2), -1)}}).state;
  CHECK(labels(t.stack) == std::vector<std::pair<int, std::int64_t>>{{1, 2}});
  CHECK(same_chamber(a1, s, t) == ChamberVerdict::Distinct);

  // The same chamber reached by homotopic paths.
  const auto u = lift_path(a1, PLPath{{base, c1(Rational(1, 4), 2), c1(Rational(3, 4), -3), c1(Rational(1, 2), -1)}}).state;
  CHECK(same_chamber(a1, s, u) == ChamberVerdict::Equal);

  // A2: a loop around H_{e1,0} followed by one around H_{e2,0}, against the
  // other order. Models agree (both identity) but words differ.
  const auto a2 = lattice_a(2);
  const auto b2 = default_basepoint(2);
  const auto m1 = meridian_loop(a2, 1, 0, b2);
  const auto m2 = meridian_loop(a2, 2, 0, b2);
  const auto x = lift_path(a2, concatenated(m1, m2)).state;
  const auto y = lift_path(a2, concatenated(m2, m1)).state;
  CHECK(same_chamber(a2, x, y) == ChamberVerdict::ThetaEqualWordDistinct);
  const auto z = lift_path(a2, PLPath{{b2, point({q(1, 2), q(1, 2)}, {q(-1), q(2)})}}).state;
  CHECK(same_chamber(a2, x, z) == ChamberVerdict::Distinct);

  LiftState other = s;
  other.base = AffineMap::translation({1});
  CHECK_THROWS_AS(same_chamber(a1, s, other), Error);
}

TEST_CASE("lift then reverse returns the start state") {
  for (int n = 1; n <= 3; ++n) {
    const auto l = lattice_a(n);
    oracle::Rng rng(700 + n);
    const auto base = default_basepoint(l.rank());
    int done = 0, tries = 0;
    while (done < 200) {
      REQUIRE(++tries < 2000);
      const auto path = random_path(rng, base, static_cast<int>(rng.integer(1, 5)));
      auto fwd = try_lift(l, path);
      if (!fwd) continue;
      const auto back = lift_path(l, reversed(path), fwd->state);
      CHECK(back.state == fundamental_state(l, base));
      CHECK(theta(l, back.state.history).is_identity());
      ++done;
    }
  }
}

TEST_CASE("frame invariants along random paths") {
  const auto l = lattice_a(3);
  oracle::Rng rng(800);
  const auto base = default_basepoint(3);
  int done = 0;
  while (done < 100) {
    const auto path = random_path(rng, base, 3);
    auto r = try_lift(l, path);
    if (!r) continue;
    ++done;
    CHECK(theta(l, r->state.history) == r->state.theta_word);
    // Stop halfway between consecutive crossings: the framed point is ample there.
    for (std::size_t e = 0; e < r->trace.size(); ++e) {
      const auto& ev = r->trace[e];
      Rational next = 1;
      if (e + 1 < r->trace.size() && r->trace[e + 1].segment == ev.segment) next = r->trace[e + 1].time;
      const Rational t = (ev.time + next) / 2;
      PLPath prefix{std::vector<ComplexDivisor>(path.breakpoints.begin(),
                                                path.breakpoints.begin() + static_cast<long>(ev.segment) + 1)};
      const auto& a = path.breakpoints[ev.segment];
      const auto& b = path.breakpoints[ev.segment + 1];
      ComplexDivisor mid = a;
      for (std::size_t j = 0; j < 3; ++j) {
        mid.beta[j] += t * (b.beta[j] - a.beta[j]);
        mid.omega[j] += t * (b.omega[j] - a.omega[j]);
      }
      if (!weyl_regular(l, mid.omega)) continue;
      prefix.breakpoints.push_back(mid);
      const auto pr = lift_path(l, prefix);
      CHECK(ample_test(pr.state.framed_position().omega));
      CHECK(pr.trace.size() == e + 1);
      // No adjacent cancelling pair survives in the stack.
      for (std::size_t s = 0; s + 1 < pr.state.stack.size(); ++s)
        CHECK_FALSE((pr.state.stack[s].curve == pr.state.stack[s + 1].curve && pr.state.stack[s + 1].strip == 1));
    }
  }
}

TEST_CASE("conifold stacks are homotopy invariants") {
  // Random paths from the basepoint to a common endpoint. Two lifts end in
  // the same chamber exactly when the paths are homotopic, which the axis
  // crossing oracle decides independently.
  const auto a1 = lattice_a(1);
  const auto base = default_basepoint(1);
  const auto end = c1(Rational(1, 3), Rational(-1, 2));
  oracle::Rng rng(900);
  std::vector<std::pair<std::vector<oracle::AxisCrossing>, std::vector<std::pair<int, std::int64_t>>>> seen;
  int done = 0;
  while (done < 300) {
    auto path = random_path(rng, base, static_cast<int>(rng.integer(0, 3)), 3, 4);
    path.breakpoints.push_back(end);
    auto r = try_lift(a1, path);
    if (!r) continue;
    ++done;
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& p : path.breakpoints) pts.emplace_back(p.beta[0], p.omega[0]);
    const auto reduced = oracle::conifold_reduced_crossings(pts);
    CHECK(reduced.size() == r->state.stack.size());
    seen.emplace_back(reduced, labels(r->state.stack));
  }
  for (const auto& [a, sa] : seen)
    for (const auto& [b, sb] : seen) CHECK((a == b) == (sa == sb));
}

TEST_CASE("closed loops normalise into G0") {
  const auto l = lattice_a(2);
  oracle::Rng rng(1000);
  const auto base = default_basepoint(2);
  int done = 0;
  while (done < 100) {
    auto path = random_path(rng, base, static_cast<int>(rng.integer(2, 5)));
    path.breakpoints.push_back(base);
    try {
      const auto d = deck_element(l, path);
      CHECK(d.unnormalized_theta.is_translation());
      CHECK(is_in_G0(l, d.word));
      ++done;
    } catch (const Error& e) {
      if (!is_genericity_error(e)) throw;
    }
  }
}
