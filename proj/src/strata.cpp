#include "stabcov/strata.hpp"

#include <algorithm>

#include "stabcov/error.hpp"

namespace stabcov {

std::optional<Forbidden> find_forbidden(const RootLattice& l, const ComplexDivisor& p) {
  if (p.rank() != l.rank() || p.omega.size() != l.rank())
    throw Error(ErrorCode::DimensionMismatch, "point rank");
  for (const auto& v : l.positive_roots()) {
    if (dot(p.omega, v.coords) != 0) continue;
    const Rational b = dot(p.beta, v.coords);
    if (is_integer(b)) return Forbidden{v, b.get_num().get_si()};
  }
  return std::nullopt;
}

bool in_complement(const RootLattice& l, const ComplexDivisor& p) { return !find_forbidden(l, p); }

bool ample_test(std::span<const Rational> omega) {
  return std::all_of(omega.begin(), omega.end(), [](const Rational& x) { return x > 0; });
}

bool weyl_regular(const RootLattice& l, std::span<const Rational> omega) {
  return std::none_of(l.positive_roots().begin(), l.positive_roots().end(),
                      [&](const Root& v) { return dot(omega, v.coords) == 0; });
}

ChamberLocation locate_closed_chamber(const RootLattice& l, std::span<const Rational> omega) {
  if (omega.size() != l.rank()) throw Error(ErrorCode::DimensionMismatch, "omega rank");
  ChamberLocation loc{WeylElement::identity(l.rank()), QVec(omega.begin(), omega.end())};
  // Each coreflection by a simple root with negative pairing lowers the
  // number of positive roots pairing negatively, so this terminates.
  for (;;) {
    const auto it = std::find_if(loc.representative.begin(), loc.representative.end(),
                                 [](const Rational& x) { return x < 0; });
    if (it == loc.representative.end()) break;
    const int i = static_cast<int>(it - loc.representative.begin()) + 1;
    loc.representative = l.coreflect(l.simple_root(i), loc.representative);
    loc.weyl = loc.weyl * l.simple_reflection(i);
  }
  return loc;
}

ChamberLocation locate_weyl_chamber(const RootLattice& l, std::span<const Rational> omega) {
  if (!weyl_regular(l, omega)) throw Error(ErrorCode::OnWall, "omega pairs to zero with a root");
  return locate_closed_chamber(l, omega);
}

namespace {

// Reflects beta across violated walls of the negative fundamental alcove
// until it lies inside. Every reflection used is an involution, so the
// accumulated product g_1 ... g_k maps the final point back to beta.
AffineMap walk_to_alcove(const RootLattice& l, const std::vector<int>& curves, QVec beta) {
  const auto n = l.rank();
  struct Wall {
    AffineMap reflection;
    Root normal;
    Rational bound;  // the wall is beta.normal = bound; inside is beta.normal < bound or > bound
    bool inside_below;
  };
  std::vector<Wall> walls;
  for (int j : curves) walls.push_back({AffineMap{l.simple_reflection(j).dual_mat(), IntVec(n, 0)}, l.simple_root(j), 0, true});
  for (const auto& comp : l.components(curves)) {
    const Root theta = l.highest_root(comp);
    // beta -> r_theta^* beta + G theta is the reflection in beta.theta = -1.
    walls.push_back({AffineMap{l.reflection(theta).dual_mat(), l.gram() * std::span<const std::int64_t>(theta.coords)},
                     theta, -1, false});
  }
  AffineMap acc = AffineMap::identity(n);
  ComplexDivisor cur{std::move(beta), zeros(n)};
  for (;;) {
    const Wall* violated = nullptr;
    for (const auto& w : walls) {
      const Rational x = dot(cur.beta, w.normal.coords);
      if (w.inside_below ? x > w.bound : x < w.bound) {
        violated = &w;
        break;
      }
    }
    if (!violated) return acc;
    cur = violated->reflection.apply(cur);
    acc = acc * violated->reflection;
  }
}

}  // namespace

StratumLabel classify(const RootLattice& l, const ComplexDivisor& p) {
  if (auto f = find_forbidden(l, p)) return *f;
  auto loc = locate_closed_chamber(l, p.omega);
  std::vector<int> vanishing;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (loc.representative[i] == 0) vanishing.push_back(static_cast<int>(i) + 1);
  if (vanishing.empty()) return AmpleChamber{std::move(loc.weyl)};

  const QVec framed_beta = loc.weyl.pullback(p.beta);
  auto strip_of = [&](int i) { return floor_int(framed_beta[i - 1]) + 1; };
  if (vanishing.size() == 1) return WallStrip{vanishing.front(), strip_of(vanishing.front()), std::move(loc.weyl)};
  DeepStratum deep{vanishing, {}, {}, std::move(loc.weyl), AffineMap::identity(l.rank())};
  for (int i : vanishing) deep.strips[i] = strip_of(i);
  std::vector<bool> in_s(l.rank(), false);
  for (int i : vanishing) in_s[i - 1] = true;
  for (const auto& v : l.positive_roots()) {
    bool supported = true;
    for (std::size_t i = 0; i < l.rank(); ++i)
      if (v.coords[i] != 0 && !in_s[i]) supported = false;
    if (supported) deep.root_strips.emplace_back(v, floor_int(dot(framed_beta, v.coords)) + 1);
  }
  deep.alcove = walk_to_alcove(l, vanishing, framed_beta);
  return deep;
}

}  // namespace stabcov
