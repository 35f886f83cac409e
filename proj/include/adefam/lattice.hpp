#pragma once

// Characteristic vectors of <1> + m<-1> whose pairings with H = e0 and
// H' = e0 - a e1 have opposite signs. The half-space condition turns an
// indefinite search into a finite box; the box and its derivation are part of
// every report.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "adefam/error.hpp"
#include "adefam/rational.hpp"
#include "adefam/types.hpp"

namespace adefam {

struct LatticeProblem {
  int m = 1;                  // number of negative basis vectors e1..em
  std::int64_t square = 0;    // x0^2 - sum x_i^2, equal to 4n - m + 9
  Rational a{0};              // H' = e0 - a e1, 0 <= a < 1
};

/// Square of c1 forced by expected dimension n on <1> + m<-1>.
constexpr std::int64_t square_for_dimension(int m, std::int64_t n) { return 4 * n - m + 9; }

struct SearchBounds {
  bool feasible = false;
  std::int64_t x0_max = 0;
  std::int64_t x1_max = 0;
  std::int64_t tail_max = 0;  // bound on |x_i| for i >= 2
  std::vector<std::string> derivation;

  /// One bound for every coordinate.
  std::int64_t uniform() const { return feasible ? std::max(x1_max, tail_max) : 0; }
};

struct SignFlipReport {
  SearchBounds bounds;
  std::vector<IntVector> solutions;
};

namespace detail {

inline std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline bool is_odd(std::int64_t v) { return v % 2 != 0; }

// Appends every odd vector of the given length with entries |x| <= cap and
// squared norm `target`, in lexicographic order.
inline void odd_vectors_with_norm(int length, std::int64_t target, std::int64_t cap, IntVector& prefix,
                                  std::vector<IntVector>& out) {
  if (length == 0) {
    if (target == 0) out.push_back(prefix);
    return;
  }
  // Each remaining odd coordinate contributes at least 1.
  if (target < length) return;
  const std::int64_t lim = std::min(cap, isqrt(target - (length - 1)));
  std::int64_t start = -lim;
  if (!is_odd(start)) ++start;
  for (std::int64_t v = start; v <= lim; v += 2) {
    prefix.push_back(v);
    odd_vectors_with_norm(length - 1, target - v * v, cap, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

inline void validate(const LatticeProblem& p) {
  if (p.m < 1) throw Error(ErrorCode::InvalidParameter, "m = " + std::to_string(p.m) + " < 1");
  if (p.a < 0 || p.a >= 1) throw Error(ErrorCode::InvalidParameter, "a = " + to_string(p.a) + " outside [0, 1)");
}

/// Box implied by x0 >= 0, x0 < a x1, oddness and the square constraint.
/// Independent of a as long as 0 <= a < 1.
inline SearchBounds sign_flip_bounds(int m, std::int64_t square) {
  SearchBounds b;
  auto& why = b.derivation;
  why.push_back("x0 >= 0 and x0 odd give x0 >= 1");
  why.push_back("0 <= a < 1 and x0 < a*x1 give x1 > x0, hence x1 >= x0 + 2 >= 3");
  why.push_back("x1^2 - x0^2 = (x1 - x0)(x1 + x0) >= 2(x1 + x0) >= 2*x1 + 2");
  why.push_back("x1^2 - x0^2 = -square - sum_{i>=2} x_i^2 <= -square - (m - 1) = " +
                std::to_string(-square - (m - 1)));
  const std::int64_t x1_max = (-square - (m - 1) - 2) / 2;
  if (-square - (m - 1) - 2 < 6) {
    why.push_back("2*x1 + 2 >= 8 exceeds that; no solutions");
    return b;
  }
  b.feasible = true;
  b.x1_max = x1_max % 2 == 0 ? x1_max - 1 : x1_max;
  b.x0_max = b.x1_max - 2;
  why.push_back("x1 <= " + std::to_string(b.x1_max) + " (odd), x0 <= " + std::to_string(b.x0_max));
  if (m > 1) {
    b.tail_max = detail::isqrt(-square - 8);
    why.push_back("sum_{i>=2} x_i^2 = -square - (x1^2 - x0^2) <= -square - 8, so |x_i| <= " +
                  std::to_string(b.tail_max));
  }
  return b;
}

/// Every odd x with x0^2 - sum x_i^2 = square, x0 >= 0 and x0 - a x1 < 0,
/// sorted lexicographically.
inline SignFlipReport enumerate_sign_flips(const LatticeProblem& p) {
  validate(p);
  SignFlipReport rep{sign_flip_bounds(p.m, p.square), {}};
  if (!rep.bounds.feasible || p.a == 0) return rep;
  const auto num = static_cast<std::int64_t>(boost::multiprecision::numerator(p.a));
  const auto den = static_cast<std::int64_t>(boost::multiprecision::denominator(p.a));

  IntVector prefix;
  std::vector<IntVector> tails;
  for (std::int64_t x0 = 1; x0 <= rep.bounds.x0_max; x0 += 2) {
    for (std::int64_t x1 = x0 + 2; x1 <= rep.bounds.x1_max; x1 += 2) {
      if (!(den * x0 < num * x1)) continue;
      const std::int64_t rest = x0 * x0 - x1 * x1 - p.square;
      tails.clear();
      detail::odd_vectors_with_norm(p.m - 1, rest, rep.bounds.tail_max, prefix, tails);
      for (auto& t : tails) {
        IntVector x{x0, x1};
        x.insert(x.end(), t.begin(), t.end());
        rep.solutions.push_back(std::move(x));
      }
    }
  }
  std::sort(rep.solutions.begin(), rep.solutions.end());
  return rep;
}

inline constexpr int kMaxCountRank = 6;

struct ClassCount {
  SearchBounds bounds;
  std::int64_t box = 0;  // |x_i| <= box for every coordinate
  std::int64_t count = 0;
};

/// Number of odd vectors of the given square inside the uniform box certified
/// by `sign_flip_bounds`: an upper bound, uniform in a, on the characteristic
/// vectors whose sign can flip between H and H'.
inline ClassCount count_basic_classes_bound(int m, std::int64_t square, int max_rank = kMaxCountRank) {
  if (m < 1) throw Error(ErrorCode::InvalidParameter, "m = " + std::to_string(m) + " < 1");
  if (m > max_rank)
    throw Error(ErrorCode::Intractable, "m = " + std::to_string(m) + " exceeds limit " + std::to_string(max_rank));
  ClassCount out{sign_flip_bounds(m, square), 0, 0};
  out.box = out.bounds.uniform();
  const std::int64_t box = out.box;
  if (box == 0) return out;

  // ways[v]: odd (x1..xk) with |x_i| <= box and sum x_i^2 = v.
  const std::int64_t top = box * box - square;
  if (top < 0) return out;
  std::vector<std::int64_t> ways(top + 1, 0);
  ways[0] = 1;
  for (int k = 0; k < m; ++k) {
    std::vector<std::int64_t> next(top + 1, 0);
    for (std::int64_t v = 0; v <= top; ++v) {
      if (ways[v] == 0) continue;
      for (std::int64_t x = 1; x <= box; x += 2) {
        if (v + x * x > top) break;
        next[v + x * x] += 2 * ways[v];
      }
    }
    ways = std::move(next);
  }
  for (std::int64_t x0 = 1; x0 <= box; x0 += 2) {
    const std::int64_t v = x0 * x0 - square;
    if (v >= 0 && v <= top) out.count += 2 * ways[v];
  }
  return out;
}

}  // namespace adefam
