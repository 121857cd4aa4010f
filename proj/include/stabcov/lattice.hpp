#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "stabcov/int_matrix.hpp"
#include "stabcov/rational.hpp"

namespace stabcov {

// Dual graph of the exceptional curves C_1..C_N. Curve indices are 1-based.
struct DualGraph {
  int n_curves = 0;
  std::vector<std::pair<int, int>> edges;
};

// Element of Lambda_f with (v,v) = -2. Coordinates are uniformly signed.
struct Root {
  IntVec coords;

  bool is_positive() const;
  Root negated() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

// Weyl group element. `mat` acts on the root lattice (curve coordinates);
// `dual_mat` is the contragredient (mat^-1)^T acting on N^1 (divisor
// coordinates), so that (dual_mat d) . (mat x) = d . x. For a reflection the
// two coincide with the transpose. `word` is a witness: the element equals
// r_{word[0]} r_{word[1]} ... with 1-based simple-root indices.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(std::size_t n);
  static WeylElement from_dual(const IntMatrix& dual_mat, std::vector<int> word = {});

  const IntMatrix& mat() const { return mat_; }
  const IntMatrix& dual_mat() const { return dual_mat_; }
  const std::vector<int>& word() const { return word_; }
  std::size_t rank() const { return mat_.size(); }
  bool is_identity() const { return mat_.is_identity(); }

  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;

  IntVec act(std::span<const std::int64_t> x) const { return mat_ * x; }
  QVec act_dual(std::span<const Rational> d) const { return dual_mat_ * d; }
  // Pullback w^* = mat^T; maps the chamber dual_mat(A) back onto A.
  QVec pullback(std::span<const Rational> d) const { return mat_.transpose() * d; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.mat_ == b.mat_; }
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.mat_ <=> b.mat_; }

 private:
  friend class RootLattice;
  IntMatrix mat_;
  IntMatrix dual_mat_;
  std::vector<int> word_;
};

class RootLattice {
 public:
  // Validates the graph (tree, indices in range) and negative definiteness.
  static RootLattice build(const DualGraph& g);

  std::size_t rank() const { return gram_.size(); }
  const IntMatrix& gram() const { return gram_; }
  const DualGraph& graph() const { return graph_; }
  // 1-based neighbours of curve i (1-based).
  const std::vector<int>& neighbours(int i) const;

  std::int64_t pairing(std::span<const std::int64_t> v, std::span<const std::int64_t> w) const;
  bool is_root(std::span<const std::int64_t> v) const;

  // x + (v,x) v
  IntVec reflect(const Root& v, std::span<const std::int64_t> x) const;
  // Transpose action on N^1: the unique d' with d'.x = d.reflect(v,x).
  QVec coreflect(const Root& v, std::span<const Rational> d) const;

  Root simple_root(int i) const;
  WeylElement simple_reflection(int i) const;
  WeylElement reflection(const Root& v) const;

  // All roots, sorted; positives are stored once and negated on demand.
  std::vector<Root> enumerate_roots() const;
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  // Whole Weyl group generated by simple reflections, breadth-first so each
  // witness word is reduced. Throws CapExceeded past `cap` elements.
  std::vector<WeylElement> enumerate_weyl(std::size_t cap) const;

  // Connected components (each sorted, 1-based) of the subgraph induced on `curves`.
  std::vector<std::vector<int>> components(std::span<const int> curves) const;
  // Highest root of the root subsystem spanned by a connected set of simple roots.
  Root highest_root(std::span<const int> connected_curves) const;

 private:
  DualGraph graph_;
  IntMatrix gram_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Root> positive_roots_;
};

// Leading principal minors of -gram, by fraction-free elimination. Empty
// optional when all are positive; otherwise the 1-based index of the first
// non-positive minor.
std::optional<std::size_t> first_nonpositive_minor(const IntMatrix& gram);

}  // namespace stabcov
