#include "stabcov/fm_words.hpp"

#include <algorithm>
#include <string>

#include "stabcov/error.hpp"

namespace stabcov {

AffineMap AffineMap::identity(std::size_t n) { return AffineMap{IntMatrix::identity(n), IntVec(n, 0)}; }

AffineMap AffineMap::translation(IntVec t) {
  const auto n = t.size();
  return AffineMap{IntMatrix::identity(n), std::move(t)};
}

bool AffineMap::is_identity() const {
  return linear.is_identity() && std::all_of(trans.begin(), trans.end(), [](auto x) { return x == 0; });
}

AffineMap AffineMap::operator*(const AffineMap& rhs) const {
  if (rank() != rhs.rank()) throw Error(ErrorCode::DimensionMismatch, "affine composition");
  AffineMap out{linear * rhs.linear, linear * std::span<const std::int64_t>(rhs.trans)};
  for (std::size_t i = 0; i < out.trans.size(); ++i) out.trans[i] += trans[i];
  return out;
}

AffineMap AffineMap::inverse() const {
  auto inv = linear.inverse();
  if (!inv) throw Error(ErrorCode::DimensionMismatch, "affine map is not invertible over Z");
  AffineMap out{*inv, *inv * std::span<const std::int64_t>(trans)};
  for (auto& x : out.trans) x = -x;
  return out;
}

ComplexDivisor AffineMap::apply(const ComplexDivisor& p) const {
  if (p.rank() != rank()) throw Error(ErrorCode::DimensionMismatch, "affine apply");
  ComplexDivisor q{linear * std::span<const Rational>(p.beta), linear * std::span<const Rational>(p.omega)};
  for (std::size_t i = 0; i < q.beta.size(); ++i) q.beta[i] += static_cast<long>(trans[i]);
  return q;
}

ComplexDivisor AffineMap::apply_inverse(const ComplexDivisor& p) const { return inverse().apply(p); }

KClass AffineMap::act(const KClass& c) const {
  // With T(q) = L q + t: -a' + (L q + t).m' = -a + q.m for all q forces
  // m' = L^{-T} m and a' = a + t.m'.
  auto inv = linear.inverse();
  if (!inv) throw Error(ErrorCode::DimensionMismatch, "affine map is not invertible over Z");
  KClass out;
  out.curve_mult = inv->transpose() * std::span<const std::int64_t>(c.curve_mult);
  out.point_mult = c.point_mult + dot(std::span<const std::int64_t>(trans), std::span<const std::int64_t>(out.curve_mult));
  return out;
}

AffineMap theta(const RootLattice& l, const Generator& g) {
  const auto n = l.rank();
  if (const auto* tw = std::get_if<Twist>(&g)) {
    if (tw->divisor.size() != n) throw Error(ErrorCode::DimensionMismatch, "twist divisor length");
    return AffineMap::translation(tw->divisor);
  }
  const auto& fl = std::get<Flop>(g);
  // The strict transform of a flop at C_i is the Weyl reflection r_{e_i}^*;
  // ch_1 of the image of the structure sheaf is taken to be zero.
  return AffineMap{l.simple_reflection(fl.curve).dual_mat(), IntVec(n, 0)};
}

AffineMap theta(const RootLattice& l, const FMWord& u) {
  AffineMap acc = AffineMap::identity(l.rank());
  for (const auto& g : u.gens) acc = acc * theta(l, g);
  return acc;
}

FMWord compose(const FMWord& u, const FMWord& v) {
  FMWord out = u;
  out.gens.insert(out.gens.end(), v.gens.begin(), v.gens.end());
  return out;
}

FMWord invert(const FMWord& u) {
  FMWord out;
  out.gens.reserve(u.gens.size());
  for (auto it = u.gens.rbegin(); it != u.gens.rend(); ++it) {
    if (const auto* tw = std::get_if<Twist>(&*it)) {
      Twist neg = *tw;
      for (auto& x : neg.divisor) x = -x;
      out.gens.emplace_back(std::move(neg));
    } else {
      out.gens.push_back(*it);
    }
  }
  return out;
}

IntVec ch1_structure(const RootLattice& l, const FMWord& u) { return theta(l, u).trans; }

WeylElement model_of(const RootLattice& l, const FMWord& u) {
  // Rebuild the witness from the flops in the word so that model_of(Flop(i))
  // carries word {i}.
  std::vector<int> word;
  for (const auto& g : u.gens)
    if (const auto* fl = std::get_if<Flop>(&g)) word.push_back(fl->curve);
  return WeylElement::from_dual(theta(l, u).linear, std::move(word));
}

bool is_in_G(const RootLattice& l, const FMWord& u) { return theta(l, u).linear.is_identity(); }

bool is_in_G0(const RootLattice& l, const FMWord& u) { return theta(l, u).is_identity(); }

}  // namespace stabcov
