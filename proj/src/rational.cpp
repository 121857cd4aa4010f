#include "stabcov/rational.hpp"

#include <algorithm>
#include <cctype>

#include "stabcov/error.hpp"

namespace stabcov {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view s = text;
  const auto slash = s.find('/');
  const auto num = s.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!valid_integer_literal(num) || (slash != std::string_view::npos && !valid_integer_literal(den)))
    throw Error(ErrorCode::Parse, "not a rational literal: '" + text + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(mpz_class(n, 10));
  } else {
    std::string d(den);
    if (d.front() == '+') d.erase(0, 1);
    mpz_class dz(d, 10);
    if (dz == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
    q = Rational(mpz_class(n, 10), dz);
    q.canonicalize();
  }
  return q;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

QVec to_qvec(std::span<const std::int64_t> v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

QVec zeros(std::size_t n) { return QVec(n, Rational(0)); }

Rational dot(std::span<const Rational> d, std::span<const std::int64_t> x) {
  if (d.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (x[i] != 0) s += d[i] * static_cast<long>(x[i]);
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t floor_int(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

IntVec unit_vector(std::size_t n, std::size_t index) {
  IntVec v(n, 0);
  v.at(index) = 1;
  return v;
}

}  // namespace stabcov
