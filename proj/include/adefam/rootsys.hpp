#pragma once

// ADE Dynkin diagrams, their plumbing intersection forms, root enumeration and
// descent paths through the positive roots.
//
// Vertices are stored 0-based. Vertex k here is sphere S_{k+1} in the usual
// 1-based chain numbering: 1..n-1 along the chain, n the branch leaf for D/E.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adefam/error.hpp"
#include "adefam/types.hpp"

namespace adefam {

enum class Family { A, D, E };

/// Attachment point l_i(0), l_i(1) or l_i(inf) of a sphere at which an edge is plumbed.
enum class Attach { Zero, One, Infinity };

constexpr char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

constexpr const char* to_string(Attach a) {
  switch (a) {
    case Attach::Zero: return "zero";
    case Attach::One: return "one";
    case Attach::Infinity: return "infinity";
  }
  return "?";
}

struct Edge {
  int u;
  int v;
  Attach at_u;
  Attach at_v;

  bool operator==(const Edge&) const = default;
};

class DynkinDiagram {
 public:
  DynkinDiagram(Family family, int rank) : family_(family), rank_(rank) {
    const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
                    (family == Family::E && rank >= 6 && rank <= 8);
    if (!ok) {
      throw Error(ErrorCode::InvalidRank,
                  std::string(1, family_letter(family)) + std::to_string(rank) + " is not an ADE diagram");
    }
    // Chain l_i(inf) = l_{i+1}(0); D_n branches off l_{n-2}(1), E_n off l_{n-3}(1).
    const int chain_end = family == Family::A ? rank : rank - 1;
    for (int i = 0; i + 1 < chain_end; ++i) edges_.push_back({i, i + 1, Attach::Infinity, Attach::Zero});
    if (family == Family::D) edges_.push_back({rank - 3, rank - 1, Attach::One, Attach::Zero});
    if (family == Family::E) edges_.push_back({rank - 4, rank - 1, Attach::One, Attach::Zero});

    neighbors_.assign(rank, {});
    for (const auto& e : edges_) {
      neighbors_[e.u].push_back(e.v);
      neighbors_[e.v].push_back(e.u);
    }
    for (auto& n : neighbors_) std::sort(n.begin(), n.end());
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int i) const { return neighbors_.at(i); }
  int valence(int i) const { return static_cast<int>(neighbors_.at(i).size()); }

  bool adjacent(int i, int j) const {
    const auto& n = neighbors_.at(i);
    return std::binary_search(n.begin(), n.end(), j);
  }

  /// The unique trivalent vertex, if any.
  std::optional<int> hub() const {
    for (int i = 0; i < rank_; ++i)
      if (valence(i) == 3) return i;
    return std::nullopt;
  }

  std::string name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

  bool operator==(const DynkinDiagram& o) const { return family_ == o.family_ && rank_ == o.rank_; }

 private:
  Family family_;
  int rank_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
};

inline DynkinDiagram build_diagram(Family family, int rank) { return DynkinDiagram(family, rank); }

/// Integer determinant by fraction-free (Bareiss) elimination.
inline std::int64_t determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

class IntersectionForm {
 public:
  explicit IntersectionForm(IntMatrix matrix) : matrix_(std::move(matrix)) {}

  int rank() const { return static_cast<int>(matrix_.size()); }
  const IntMatrix& matrix() const { return matrix_; }
  std::int64_t at(int i, int j) const { return matrix_.at(i).at(j); }

  std::int64_t pair(std::span<const std::int64_t> x, std::span<const std::int64_t> y) const {
    check_dim(x);
    check_dim(y);
    std::int64_t s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) s += x[i] * matrix_[i][j] * y[j];
    return s;
  }

  std::int64_t square(std::span<const std::int64_t> x) const { return pair(x, x); }

  std::int64_t det() const { return determinant(matrix_); }

  /// Leading principal minors of a negative definite matrix alternate in sign, (-1)^k.
  bool negative_definite() const {
    for (int k = 1; k <= rank(); ++k) {
      IntMatrix minor(k, IntVector(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor[i][j] = matrix_[i][j];
      const std::int64_t d = determinant(minor);
      if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
    }
    return true;
  }

 private:
  void check_dim(std::span<const std::int64_t> x) const {
    if (static_cast<int>(x.size()) != rank())
      throw Error(ErrorCode::DimensionMismatch,
                  "vector of length " + std::to_string(x.size()) + " for rank " + std::to_string(rank()));
  }

  IntMatrix matrix_;
};

inline IntersectionForm intersection_form(const DynkinDiagram& g) {
  const int n = g.rank();
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = -2;
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 1;
  return IntersectionForm(std::move(m));
}

/// Cartan matrix, the negative of the intersection form.
inline IntMatrix cartan_matrix(const DynkinDiagram& g) {
  IntMatrix c = intersection_form(g).matrix();
  for (auto& row : c)
    for (auto& x : row) x = -x;
  return c;
}

struct RootVector {
  IntVector coords;

  int rank() const { return static_cast<int>(coords.size()); }
  std::int64_t operator[](int i) const { return coords[i]; }

  bool is_positive() const {
    return std::all_of(coords.begin(), coords.end(), [](auto t) { return t >= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](auto t) { return t != 0; });
  }

  bool is_simple() const {
    return std::count(coords.begin(), coords.end(), 1) == 1 &&
           std::count(coords.begin(), coords.end(), 0) == static_cast<std::ptrdiff_t>(coords.size()) - 1;
  }

  RootVector operator-() const {
    RootVector r = *this;
    for (auto& t : r.coords) t = -t;
    return r;
  }

  auto operator<=>(const RootVector&) const = default;
};

/// Coordinate bound of the root search box, the largest coefficient of the E8 highest root.
inline constexpr std::int64_t kRootSearchBound = 6;

/// All t in Z^n with t.Q.t = -2 inside the box |t_i| <= bound, sorted lexicographically.
///
/// The box is walked coordinate by coordinate from the last one; a partial
/// assignment is cut when the Cholesky lower bound on the Cartan norm of every
/// completion already exceeds 2. The cut uses floating point with a slack so it
/// only ever discards hopeless branches; membership is decided by the exact
/// integer form at the leaves.
inline std::vector<RootVector> enumerate_roots(const DynkinDiagram& g, std::int64_t bound = kRootSearchBound) {
  const int n = g.rank();
  const IntersectionForm form = intersection_form(g);
  const IntMatrix c = cartan_matrix(g);

  // C = U^T D U with U unit upper-triangular; q(t) = sum_k d_k (t_k + sum_{j>k} u_kj t_j)^2.
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  std::vector<double> d(n, 0.0);
  {
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(c[i][j]);
    for (int k = 0; k < n; ++k) {
      d[k] = a[k][k];
      for (int j = k + 1; j < n; ++j) l[k][j] = a[k][j] / d[k];
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) a[i][j] -= a[i][k] * l[k][j];
    }
  }

  constexpr double kTarget = 2.0;
  constexpr double kSlack = 1e-7;
  std::vector<RootVector> roots;
  IntVector t(n, 0);

  auto recurse = [&](auto&& self, int k, double partial) -> void {
    if (k < 0) {
      if (form.square(t) == -2) roots.push_back({t});
      return;
    }
    double center = 0.0;
    for (int j = k + 1; j < n; ++j) center -= l[k][j] * static_cast<double>(t[j]);
    const double room = kTarget - partial;
    if (room < -kSlack) return;
    const double radius = std::sqrt(std::max(room, 0.0) / d[k]) + kSlack;
    const auto lo = std::max<std::int64_t>(-bound, static_cast<std::int64_t>(std::ceil(center - radius)));
    const auto hi = std::min<std::int64_t>(bound, static_cast<std::int64_t>(std::floor(center + radius)));
    for (std::int64_t v = lo; v <= hi; ++v) {
      t[k] = v;
      const double dv = static_cast<double>(v) - center;
      const double next = partial + d[k] * dv * dv;
      if (next <= kTarget + kSlack) self(self, k - 1, next);
    }
    t[k] = 0;
  };
  recurse(recurse, n - 1, 0.0);

  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::vector<RootVector> positive_roots(const DynkinDiagram& g) {
  std::vector<RootVector> out;
  for (auto& r : enumerate_roots(g))
    if (r.is_positive()) out.push_back(std::move(r));
  return out;
}

/// Expected root count n(n+1), 2n(n-1), 72, 126, 240.
inline std::int64_t root_count(const DynkinDiagram& g) {
  const std::int64_t n = g.rank();
  switch (g.family()) {
    case Family::A: return n * (n + 1);
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
  return 0;
}

/// Descends from a positive root to a simple root one unit step at a time,
/// always decrementing the lowest coordinate that keeps the vector a root.
inline std::vector<RootVector> hasse_path(const DynkinDiagram& g, const RootVector& root) {
  const IntersectionForm form = intersection_form(g);
  if (root.rank() != g.rank())
    throw Error(ErrorCode::DimensionMismatch, "root has " + std::to_string(root.rank()) + " coordinates");
  if (!root.is_positive() || form.square(root.coords) != -2)
    throw Error(ErrorCode::NotAPositiveRoot, "input is not a positive root of " + g.name());

  std::vector<RootVector> path{root};
  RootVector cur = root;
  while (!cur.is_simple()) {
    bool stepped = false;
    for (int k = 0; k < g.rank() && !stepped; ++k) {
      if (cur.coords[k] == 0) continue;
      RootVector next = cur;
      --next.coords[k];
      if (next.is_positive() && form.square(next.coords) == -2) {
        cur = std::move(next);
        path.push_back(cur);
        stepped = true;
      }
    }
    // Every non-simple positive root pairs positively with some simple root.
    if (!stepped) throw Error(ErrorCode::NotAPositiveRoot, "descent stalled; not a root of " + g.name());
  }
  return path;
}

}  // namespace adefam
