#pragma once

// Weights of the circle action on the plumbed resolution of an ADE singularity.
//
// A sphere carries a pair (a, b): base and fiber weights at its marked fixed
// point l(0). Everything else (weights at l(inf), edge weights) is derived
// from these pairs.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adefam/error.hpp"
#include "adefam/rootsys.hpp"

namespace adefam {

struct WeightPair {
  std::int64_t a;  // base direction
  std::int64_t b;  // fiber direction

  bool operator==(const WeightPair&) const = default;
};

/// Weight of r_(a,b) at the fixed point l(inf).
constexpr WeightPair weight_at_infinity(WeightPair w) { return {-w.a, 2 * w.a + w.b}; }

/// Weight pair of the next chain sphere, plumbed at l_next(0) = l_this(inf).
constexpr WeightPair plumb_step(WeightPair w) { return {2 * w.a + w.b, -w.a}; }

constexpr WeightPair plumb_step_inverse(WeightPair w) { return {-w.b, w.a + 2 * w.b}; }

/// Weight of the action on T_p S at an attachment point p of a sphere with pair w.
/// At l(1) the action must be trivial on the sphere, which forces a = 0.
inline std::int64_t tangent_weight(WeightPair w, Attach at) {
  switch (at) {
    case Attach::Zero: return w.a;
    case Attach::Infinity: return weight_at_infinity(w).a;
    case Attach::One:
      if (w.a != 0) throw Error(ErrorCode::InvalidParameter, "sphere with a != 0 cannot fix l(1)");
      return 0;
  }
  return 0;
}

using EdgeWeights = std::map<std::pair<int, int>, std::int64_t>;

class WeightAssignment {
 public:
  WeightAssignment(std::vector<WeightPair> vertex, EdgeWeights edge)
      : vertex_(std::move(vertex)), edge_(std::move(edge)) {}

  const std::vector<WeightPair>& vertex_weights() const { return vertex_; }
  const EdgeWeights& edge_weights() const { return edge_; }
  const WeightPair& at(int i) const { return vertex_.at(i); }

  /// w_{i,j}: weight on T S_i at the point S_i meets S_j.
  std::int64_t w(int i, int j) const {
    const auto it = edge_.find({i, j});
    if (it == edge_.end())
      throw Error(ErrorCode::NotAdjacent,
                  "vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not meet");
    return it->second;
  }

 private:
  std::vector<WeightPair> vertex_;
  EdgeWeights edge_;
};

/// Table of (a_i, b_i) in closed form, indexed 0-based.
inline std::vector<WeightPair> closed_form_weights(const DynkinDiagram& g) {
  const std::int64_t n = g.rank();
  std::vector<WeightPair> out;
  for (std::int64_t i = 1; i <= n; ++i) {
    switch (g.family()) {
      case Family::A: out.push_back({-n + 2 * i - 1, n - 2 * i + 3}); break;
      case Family::D:
        out.push_back(i < n ? WeightPair{-2 * n + 2 * i + 4, 2 * n - 2 * i - 2} : WeightPair{2, 0});
        break;
      case Family::E:
        out.push_back(i < n ? WeightPair{-2 * n + 2 * i + 6, 2 * n - 2 * i - 4} : WeightPair{2, 0});
        break;
    }
  }
  return out;
}

namespace detail {

// (a, b) as affine functions of an unknown x: a = ax*x + a0, b = bx*x + b0.
struct AffinePair {
  std::int64_t ax, a0, bx, b0;

  AffinePair step() const { return {2 * ax + bx, 2 * a0 + b0, -ax, -a0}; }
  WeightPair at(std::int64_t x) const { return {ax * x + a0, bx * x + b0}; }
};

// Type A: the first sphere has fiber weight n+1 at l_1(0) and the last has
// fiber weight n+1 at l_n(inf). Unknown x = a_1.
inline std::vector<WeightPair> propagate_chain_a(std::int64_t n) {
  std::vector<AffinePair> chain{{1, 0, 0, n + 1}};
  for (std::int64_t i = 1; i < n; ++i) chain.push_back(chain.back().step());
  const AffinePair& last = chain.back();
  // Fiber weight at l_n(inf) is 2 a_n + b_n.
  const std::int64_t coef = 2 * last.ax + last.bx;
  const std::int64_t rhs = n + 1 - (2 * last.a0 + last.b0);
  if (coef == 0 || rhs % coef != 0) throw Error(ErrorCode::InvalidParameter, "A-chain anchor has no integer solution");
  const std::int64_t x = rhs / coef;
  std::vector<WeightPair> out;
  for (const auto& p : chain) out.push_back(p.at(x));
  return out;
}

// Types D and E: the trivalent sphere has weight (0, 2) (regular fibers have
// isotropy Z/2); the chain follows by plumb steps and the branch leaf, glued at
// l_hub(1), receives (k, 0) from the hub's (0, k).
inline std::vector<WeightPair> propagate_branched(const DynkinDiagram& g) {
  const int n = g.rank();
  const int hub = *g.hub();
  const int leaf = n - 1;
  std::vector<WeightPair> out(n);
  out[hub] = {0, 2};
  for (int i = hub + 1; i < leaf; ++i) out[i] = plumb_step(out[i - 1]);
  for (int i = hub - 1; i >= 0; --i) out[i] = plumb_step_inverse(out[i + 1]);
  out[leaf] = {out[hub].b, 0};
  return out;
}

}  // namespace detail

inline EdgeWeights edge_weights(const DynkinDiagram& g, const std::vector<WeightPair>& vertex_weights) {
  if (static_cast<int>(vertex_weights.size()) != g.rank())
    throw Error(ErrorCode::MissingVertexWeight, "have " + std::to_string(vertex_weights.size()) +
                                                    " vertex weights for " + g.name());
  EdgeWeights out;
  for (const auto& e : g.edges()) {
    out[{e.u, e.v}] = tangent_weight(vertex_weights[e.u], e.at_u);
    out[{e.v, e.u}] = tangent_weight(vertex_weights[e.v], e.at_v);
  }
  return out;
}

/// Solves the anchor conditions and plumbing recursion, then checks the result
/// against the closed-form table.
inline WeightAssignment propagate_weights(const DynkinDiagram& g) {
  std::vector<WeightPair> v =
      g.family() == Family::A ? detail::propagate_chain_a(g.rank()) : detail::propagate_branched(g);
  if (v != closed_form_weights(g))
    throw std::logic_error("weight recursion disagrees with closed form for " + g.name());
  EdgeWeights e = edge_weights(g, v);
  for (const auto& [key, w] : e) {
    if (w + e.at({key.second, key.first}) != 2) throw std::logic_error("edge weights do not sum to 2");
  }
  return WeightAssignment(std::move(v), std::move(e));
}

}  // namespace adefam
