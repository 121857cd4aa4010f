#include "stabcov/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "stabcov/error.hpp"

namespace stabcov {

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c >= 0; });
}

Root Root::negated() const {
  Root r{coords};
  for (auto& c : r.coords) c = -c;
  return r;
}

WeylElement WeylElement::identity(std::size_t n) {
  WeylElement w;
  w.mat_ = IntMatrix::identity(n);
  w.dual_mat_ = w.mat_;
  return w;
}

WeylElement WeylElement::from_dual(const IntMatrix& dual_mat, std::vector<int> word) {
  auto inv = dual_mat.inverse();
  if (!inv) throw Error(ErrorCode::DimensionMismatch, "dual matrix is not unimodular");
  WeylElement w;
  w.dual_mat_ = dual_mat;
  w.mat_ = inv->transpose();
  w.word_ = std::move(word);
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  WeylElement w;
  w.mat_ = mat_ * rhs.mat_;
  w.dual_mat_ = dual_mat_ * rhs.dual_mat_;
  w.word_ = word_;
  w.word_.insert(w.word_.end(), rhs.word_.begin(), rhs.word_.end());
  return w;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  w.mat_ = mat_.inverse().value();
  w.dual_mat_ = dual_mat_.inverse().value();
  w.word_.assign(word_.rbegin(), word_.rend());
  return w;
}

std::optional<std::size_t> first_nonpositive_minor(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = -static_cast<long>(gram(i, j));
  // Bareiss without pivoting: after step k the pivot m[k][k] is the (k+1)-th
  // leading principal minor.
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return k + 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return std::nullopt;
}

RootLattice RootLattice::build(const DualGraph& g) {
  const int n = g.n_curves;
  if (n < 1) throw Error(ErrorCode::NotATree, "graph needs at least one curve");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a < 1 || b < 1 || a > n || b > n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside 1.." + std::to_string(n));
    if (a == b) throw Error(ErrorCode::NotATree, "self-loop at curve " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second)
      throw Error(ErrorCode::NotATree, "repeated edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    adj[a - 1].push_back(b);
    adj[b - 1].push_back(a);
  }
  if (g.edges.size() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorCode::NotATree, "a tree on " + std::to_string(n) + " curves has " + std::to_string(n - 1) + " edges");
  std::vector<bool> visited(n, false);
  std::vector<int> todo{1};
  visited[0] = true;
  int reached = 1;
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    for (int u : adj[v - 1])
      if (!visited[u - 1]) {
        visited[u - 1] = true;
        ++reached;
        todo.push_back(u);
      }
  }
  if (reached != n) throw Error(ErrorCode::NotATree, "graph is disconnected");

  RootLattice l;
  l.graph_ = g;
  l.gram_ = IntMatrix(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) l.gram_(i, i) = -2;
  for (auto [a, b] : g.edges) {
    l.gram_(a - 1, b - 1) = 1;
    l.gram_(b - 1, a - 1) = 1;
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  l.adjacency_ = std::move(adj);

  if (auto bad = first_nonpositive_minor(l.gram_))
    throw Error(ErrorCode::NotNegativeDefinite,
                "leading principal minor " + std::to_string(*bad) + " of -gram is not positive");

  // Closure of the simple roots under simple reflections.
  std::set<IntVec> found;
  std::deque<IntVec> queue;
  for (int i = 1; i <= n; ++i) {
    auto e = unit_vector(n, i - 1);
    found.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      auto w = l.reflect(l.simple_root(i), v);
      if (found.insert(w).second) queue.push_back(w);
    }
  }
  for (const auto& v : found) {
    Root r{v};
    if (r.is_positive()) l.positive_roots_.push_back(std::move(r));
  }
  return l;
}

const std::vector<int>& RootLattice::neighbours(int i) const {
  if (i < 1 || i > static_cast<int>(rank())) throw Error(ErrorCode::IndexOutOfRange, "curve " + std::to_string(i));
  return adjacency_[i - 1];
}

std::int64_t RootLattice::pairing(std::span<const std::int64_t> v, std::span<const std::int64_t> w) const {
  if (v.size() != rank() || w.size() != rank()) throw Error(ErrorCode::DimensionMismatch, "pairing");
  const auto gw = gram_ * w;
  return dot(v, std::span<const std::int64_t>(gw));
}

bool RootLattice::is_root(std::span<const std::int64_t> v) const {
  return v.size() == rank() && pairing(v, v) == -2;
}

IntVec RootLattice::reflect(const Root& v, std::span<const std::int64_t> x) const {
  if (!is_root(v.coords)) throw Error(ErrorCode::NotARoot, "reflect");
  const auto c = pairing(v.coords, x);
  IntVec out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v.coords[i];
  return out;
}

QVec RootLattice::coreflect(const Root& v, std::span<const Rational> d) const {
  if (!is_root(v.coords)) throw Error(ErrorCode::NotARoot, "coreflect");
  if (d.size() != rank()) throw Error(ErrorCode::DimensionMismatch, "coreflect");
  // d'.x = d.x + (v,x)(d.v), and (v,x) = (G v).x
  const Rational dv = dot(d, std::span<const std::int64_t>(v.coords));
  const auto gv = gram_ * std::span<const std::int64_t>(v.coords);
  QVec out(d.begin(), d.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (gv[i] != 0) out[i] += dv * static_cast<long>(gv[i]);
  return out;
}

Root RootLattice::simple_root(int i) const {
  if (i < 1 || i > static_cast<int>(rank())) throw Error(ErrorCode::IndexOutOfRange, "simple root " + std::to_string(i));
  return Root{unit_vector(rank(), i - 1)};
}

WeylElement RootLattice::reflection(const Root& v) const {
  const std::size_t n = rank();
  WeylElement w;
  w.mat_ = IntMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = reflect(v, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) w.mat_(i, j) = col[i];
  }
  // Reflections are involutions, so the contragredient is the transpose.
  w.dual_mat_ = w.mat_.transpose();
  return w;
}

WeylElement RootLattice::simple_reflection(int i) const {
  auto w = reflection(simple_root(i));
  w.word_ = {i};
  return w;
}

std::vector<Root> RootLattice::enumerate_roots() const {
  std::vector<Root> all;
  all.reserve(2 * positive_roots_.size());
  for (const auto& r : positive_roots_) {
    all.push_back(r);
    all.push_back(r.negated());
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<WeylElement> RootLattice::enumerate_weyl(std::size_t cap) const {
  const std::size_t n = rank();
  std::vector<WeylElement> gens;
  for (int i = 1; i <= static_cast<int>(n); ++i) gens.push_back(simple_reflection(i));
  std::map<IntMatrix, std::size_t> index;
  std::vector<WeylElement> elements{WeylElement::identity(n)};
  index.emplace(elements.front().mat(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      WeylElement w = elements[head] * g;
      if (index.contains(w.mat())) continue;
      if (elements.size() >= cap)
        throw Error(ErrorCode::CapExceeded, "Weyl group has more than " + std::to_string(cap) + " elements");
      index.emplace(w.mat(), elements.size());
      elements.push_back(std::move(w));
    }
  }
  return elements;
}

std::vector<std::vector<int>> RootLattice::components(std::span<const int> curves) const {
  std::set<int> pending(curves.begin(), curves.end());
  std::vector<std::vector<int>> out;
  while (!pending.empty()) {
    std::vector<int> comp;
    std::vector<int> todo{*pending.begin()};
    pending.erase(pending.begin());
    while (!todo.empty()) {
      const int v = todo.back();
      todo.pop_back();
      comp.push_back(v);
      for (int u : neighbours(v))
        if (pending.erase(u)) todo.push_back(u);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Root RootLattice::highest_root(std::span<const int> connected_curves) const {
  std::vector<bool> allowed(rank(), false);
  for (int c : connected_curves) {
    if (c < 1 || c > static_cast<int>(rank())) throw Error(ErrorCode::IndexOutOfRange, "highest_root");
    allowed[c - 1] = true;
  }
  const Root* best = nullptr;
  std::int64_t best_height = -1;
  for (const auto& r : positive_roots_) {
    bool inside = true;
    std::int64_t height = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (r.coords[i] != 0 && !allowed[i]) inside = false;
      height += r.coords[i];
    }
    if (inside && height > best_height) {
      best = &r;
      best_height = height;
    }
  }
  if (!best) throw Error(ErrorCode::IndexOutOfRange, "highest_root of an empty curve set");
  return *best;
}

}  // namespace stabcov
