#include "stabcov/int_matrix.hpp"

#include "stabcov/error.hpp"

namespace stabcov {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVec IntMatrix::operator*(std::span<const std::int64_t> v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  IntVec out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

QVec IntMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  QVec out(n_, Rational(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const auto a = (*this)(i, j);
      if (a != 0) out[i] += v[j] * static_cast<long>(a);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  return out;
}

}  // namespace stabcov

namespace stabcov {

std::optional<IntMatrix> IntMatrix::inverse() const {
  const std::size_t n = n_;
  std::vector<QVec> aug(n, QVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = static_cast<long>((*this)(i, j));
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    const Rational p = aug[col][col];
    for (auto& x : aug[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  IntMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = aug[i][n + j];
      if (!is_integer(x)) return std::nullopt;
      inv(i, j) = x.get_num().get_si();
    }
  return inv;
}

}  // namespace stabcov
