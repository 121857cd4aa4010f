#include "stabcov/charge.hpp"

#include <string>

#include "stabcov/error.hpp"

namespace stabcov {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

KClass KClass::operator+(const KClass& o) const {
  require_same(curve_mult.size(), o.curve_mult.size(), "KClass sum");
  KClass r{point_mult + o.point_mult, curve_mult};
  for (std::size_t i = 0; i < r.curve_mult.size(); ++i) r.curve_mult[i] += o.curve_mult[i];
  return r;
}

KClass KClass::operator-() const {
  KClass r{-point_mult, curve_mult};
  for (auto& m : r.curve_mult) m = -m;
  return r;
}

KClass KClass::operator-(const KClass& o) const { return *this + (-o); }

ExactComplex central_charge(const ComplexDivisor& p, const KClass& c) {
  require_same(p.beta.size(), c.curve_mult.size(), "central_charge");
  require_same(p.omega.size(), c.curve_mult.size(), "central_charge");
  ExactComplex z;
  z.re = -Rational(static_cast<long>(c.point_mult)) + dot(p.beta, c.curve_mult);
  z.im = dot(p.omega, c.curve_mult);
  return z;
}

std::int64_t euler_pairing(const AmbientClass& e, const KClass& c) {
  require_same(e.div.size(), c.curve_mult.size(), "euler_pairing");
  return e.rank * c.point_mult - dot(std::span<const std::int64_t>(e.div), std::span<const std::int64_t>(c.curve_mult));
}

KClass line_bundle_class(std::size_t n_curves, int i, std::int64_t m) {
  if (i < 1 || static_cast<std::size_t>(i) > n_curves)
    throw Error(ErrorCode::IndexOutOfRange, "curve " + std::to_string(i));
  return KClass{m + 1, unit_vector(n_curves, static_cast<std::size_t>(i - 1))};
}

KClass point_class(std::size_t n_curves) { return KClass{1, IntVec(n_curves, 0)}; }

KClass fiber_class(const RootLattice& l) {
  std::vector<int> all;
  for (int i = 1; i <= static_cast<int>(l.rank()); ++i) all.push_back(i);
  return KClass{1, l.highest_root(all).coords};
}

bool in_sector(const ExactComplex& z) { return z.im > 0 || (z.im == 0 && z.re < 0); }

std::weak_ordering phase_compare(const ExactComplex& z1, const ExactComplex& z2) {
  if (!in_sector(z1) || !in_sector(z2)) throw Error(ErrorCode::OutOfSector, "phase_compare");
  const bool real1 = z1.im == 0;
  const bool real2 = z2.im == 0;
  if (real1 && real2) return std::weak_ordering::equivalent;
  if (real1) return std::weak_ordering::greater;
  if (real2) return std::weak_ordering::less;
  // Both in the open upper half plane: z2 has larger phase iff Im(conj(z1) z2) > 0.
  const Rational cross = z1.re * z2.im - z1.im * z2.re;
  if (cross > 0) return std::weak_ordering::less;
  if (cross < 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace stabcov
