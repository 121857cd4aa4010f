#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stabcov/rational.hpp"

namespace stabcov {

// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec operator*(std::span<const std::int64_t> v) const;
  QVec operator*(std::span<const Rational> v) const;

  IntMatrix transpose() const;
  // Inverse over the integers; empty if singular or not unimodular.
  std::optional<IntMatrix> inverse() const;
  bool is_identity() const;

  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace stabcov
