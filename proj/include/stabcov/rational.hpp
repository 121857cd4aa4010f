#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stabcov {

using Rational = mpq_class;
using QVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

// p/q in lowest terms. gmpxx leaves a two-argument constructor uncanonicalised,
// and comparisons of such values are unreliable, so build fractions here.
Rational make_rational(long num, long den);

// Parses "p/q", "-p/q" or an integer literal; the result is canonical.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is one).
std::string format_rational(const Rational& q);

QVec to_qvec(std::span<const std::int64_t> v);
QVec zeros(std::size_t n);

// Divisor-curve duality D_i . C_j = delta_ij, i.e. the plain coordinate dot product.
Rational dot(std::span<const Rational> d, std::span<const std::int64_t> x);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

bool is_integer(const Rational& q);
// Largest integer not exceeding q.
std::int64_t floor_int(const Rational& q);

IntVec unit_vector(std::size_t n, std::size_t index);

}  // namespace stabcov
