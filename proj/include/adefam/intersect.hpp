#pragma once

// Triple intersections of the 4-cycles swept out by the spheres over the
// family base, the p1 pairing, and the cubic that measures the degree-1 index
// of a root class.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adefam/error.hpp"
#include "adefam/rootsys.hpp"
#include "adefam/weights.hpp"

namespace adefam {

class TripleForm {
 public:
  explicit TripleForm(DynkinDiagram g) : g_(std::move(g)), weights_(propagate_weights(g_)) {}
  TripleForm(DynkinDiagram g, WeightAssignment w) : g_(std::move(g)), weights_(std::move(w)) {}

  const DynkinDiagram& diagram() const { return g_; }
  const WeightAssignment& weights() const { return weights_; }
  int rank() const { return g_.rank(); }

  /// S_i.S_i.S_i = <e(N)^2, [S_i]> = 4(a_i + b_i).
  std::int64_t triple_self(int i) const {
    check_vertex(i);
    const WeightPair& w = weights_.at(i);
    return 4 * (w.a + w.b);
  }

  /// S_i.S_j.S_j = -w_{i,j}.
  std::int64_t triple_mixed(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (!g_.adjacent(i, j))
      throw Error(ErrorCode::NotAdjacent, std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                              " are not joined in " + g_.name());
    return -weights_.w(i, j);
  }

  /// <p1(T^v), [S_i]>; the vertical tangent bundle of S_i contributes nothing,
  /// leaving the normal Euler class squared.
  std::int64_t p1_pairing(int i) const { return triple_self(i); }

  /// Symmetric trilinear table. Spheres meet pairwise in single points and
  /// never three at a time, so T vanishes on three distinct indices and on
  /// non-adjacent pairs.
  std::int64_t operator()(int i, int j, int k) const {
    std::array<int, 3> v{i, j, k};
    std::sort(v.begin(), v.end());
    if (v[0] == v[2]) return triple_self(v[0]);
    if (v[0] != v[1] && v[1] != v[2]) return 0;
    const int single = v[0] == v[1] ? v[2] : v[0];
    const int doubled = v[1];
    return g_.adjacent(single, doubled) ? triple_mixed(single, doubled) : 0;
  }

  /// [S_t]^3 by full trilinear expansion over ordered index triples.
  std::int64_t triple_of_class(std::span<const std::int64_t> t) const {
    check_dim(t);
    const int n = rank();
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (t[j] == 0) continue;
        for (int k = 0; k < n; ++k) s += t[i] * t[j] * t[k] * (*this)(i, j, k);
      }
    }
    return s;
  }

  /// <p1(T^v), [S_t]>.
  std::int64_t p1_of_class(std::span<const std::int64_t> t) const {
    check_dim(t);
    std::int64_t s = 0;
    for (int i = 0; i < rank(); ++i) s += t[i] * p1_pairing(i);
    return s;
  }

  /// sum_i 8(4 t_i^3 - t_i) - sum_{edges {i,j}} 12 t_i t_j (t_i w_{j,i} + t_j w_{i,j}),
  /// evaluated directly from the edge weights, each unordered edge once.
  std::int64_t cubic(std::span<const std::int64_t> t) const {
    check_dim(t);
    std::int64_t s = 0;
    for (int i = 0; i < rank(); ++i) s += 8 * (4 * t[i] * t[i] * t[i] - t[i]);
    for (const auto& e : g_.edges()) {
      const std::int64_t ti = t[e.u], tj = t[e.v];
      s -= 12 * ti * tj * (ti * weights_.w(e.v, e.u) + tj * weights_.w(e.u, e.v));
    }
    return s;
  }

 private:
  void check_vertex(int i) const {
    if (i < 0 || i >= rank())
      throw Error(ErrorCode::DimensionMismatch, "vertex " + std::to_string(i + 1) + " outside " + g_.name());
  }
  void check_dim(std::span<const std::int64_t> t) const {
    if (static_cast<int>(t.size()) != rank())
      throw Error(ErrorCode::DimensionMismatch,
                  "vector of length " + std::to_string(t.size()) + " for " + g_.name());
  }

  DynkinDiagram g_;
  WeightAssignment weights_;
};

struct FViolation {
  RootVector root;
  std::int64_t value;
};

struct FVerification {
  std::size_t root_count = 0;
  std::size_t positive_ok = 0;
  std::size_t negative_ok = 0;
  std::size_t hasse_steps = 0;
  std::vector<FViolation> violations;
  std::vector<std::pair<RootVector, RootVector>> hasse_violations;

  bool ok() const { return violations.empty() && hasse_violations.empty(); }
};

/// Expected cubic value of a root: +24 on positive roots, -24 on negative ones.
inline constexpr std::int64_t kRootCubicValue = 24;

inline FVerification verify_f_on_roots(const DynkinDiagram& g) {
  const TripleForm form(g);
  FVerification rep;
  for (const auto& r : enumerate_roots(g)) {
    ++rep.root_count;
    const std::int64_t v = form.cubic(r.coords);
    const bool positive = r.is_positive();
    if (v == (positive ? kRootCubicValue : -kRootCubicValue)) {
      ++(positive ? rep.positive_ok : rep.negative_ok);
    } else {
      rep.violations.push_back({r, v});
    }
    if (!positive) continue;
    const auto path = hasse_path(g, r);
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      ++rep.hasse_steps;
      if (form.cubic(path[s].coords) != form.cubic(path[s + 1].coords))
        rep.hasse_violations.emplace_back(path[s], path[s + 1]);
    }
  }
  return rep;
}

}  // namespace adefam
