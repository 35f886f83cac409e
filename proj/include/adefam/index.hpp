#pragma once

// Degree-1 family index arithmetic, expected dimensions and chamber counts
// for families over S^2.

#include <cstdint>
#include <span>
#include <string>

#include "adefam/error.hpp"
#include "adefam/intersect.hpp"
#include "adefam/rational.hpp"

namespace adefam {

/// <c1^3, [M~]> and <p1(T^v) c1, [M~]>.
struct FamilyIndexInput {
  std::int64_t c1_cubed = 0;
  std::int64_t p1_dot_c1 = 0;
};

/// <e^{c1/2} A-hat(T^v), [M~]> in total degree 6: (c1^3 - p1 c1) / 48.
inline Rational degree1_index(const FamilyIndexInput& in) {
  return make_rational(in.c1_cubed - in.p1_dot_c1, 48);
}

namespace detail {
inline FamilyIndexInput checked_input(FamilyIndexInput in) {
  if ((in.c1_cubed - in.p1_dot_c1) % 48 != 0)
    throw std::logic_error("family index input c1^3 - p1.c1 = " + std::to_string(in.c1_cubed - in.p1_dot_c1) +
                           " is not divisible by 48");
  return in;
}
}  // namespace detail

/// c1 = 2 PD[S~_r] on the plumbed family, for a root r.
inline FamilyIndexInput ade_index_input(const TripleForm& form, std::span<const std::int64_t> root) {
  if (static_cast<int>(root.size()) != form.rank())
    throw Error(ErrorCode::DimensionMismatch, "root length does not match " + form.diagram().name());
  if (intersection_form(form.diagram()).square(root) != -2)
    throw Error(ErrorCode::InvalidParameter, "class is not a root of " + form.diagram().name());
  return detail::checked_input({8 * form.triple_of_class(root), 2 * form.p1_of_class(root)});
}

/// S~.S~.S~ and <p1, [S~]> for the exceptional sphere of the blown-up family.
inline constexpr std::int64_t kBlowupTriple = 2;
inline constexpr std::int64_t kBlowupP1 = 2;

/// c1 = multiple * PD[S~]; characteristic only for odd multiples.
inline FamilyIndexInput blowup_index_input(std::int64_t multiple = -3) {
  if (multiple % 2 == 0)
    throw Error(ErrorCode::InvalidParameter, "c1 must be an odd multiple of PD[S~] to be characteristic");
  return detail::checked_input(
      {multiple * multiple * multiple * kBlowupTriple, multiple * kBlowupP1});
}

/// Self-intersection k of S0 and n = <c1, [S0]>.
struct SpherePair {
  std::int64_t k;
  std::int64_t n;

  /// n = k + 2 - 2 S0.S1 under the adjunction equality on S1.
  static SpherePair from_intersection(std::int64_t k, std::int64_t s0_dot_s1) {
    return {k, k + 2 - 2 * s0_dot_s1};
  }
};

/// n(n-k)(n+k) / (24k).
inline Rational sphere_family_index(const SpherePair& p) {
  if (p.k != -1 && p.k != -2)
    throw Error(ErrorCode::InvalidSelfIntersection, "k = " + std::to_string(p.k) + " is not -1 or -2");
  if ((p.n - p.k) % 2 != 0)
    throw Error(ErrorCode::ParityMismatch, "n = " + std::to_string(p.n) + " and k = " + std::to_string(p.k) +
                                               " differ in parity");
  return make_rational(p.n * (p.n - p.k) * (p.n + p.k), 24 * p.k);
}

struct ManifoldData {
  std::int64_t c1_squared = 0;
  std::int64_t sigma = 0;
  std::int64_t chi = 0;
  std::int64_t b_plus = 0;
  std::int64_t dim_q = 2;
};

struct ExpectedDimension {
  std::int64_t fiber;
  std::int64_t family;

  bool operator==(const ExpectedDimension&) const = default;
};

/// d = (c1^2 - 3 sigma - 2 chi) / 4 on the fiber, plus dim Q for the family.
inline ExpectedDimension expected_dimension(const ManifoldData& m) {
  const std::int64_t num = m.c1_squared - 3 * m.sigma - 2 * m.chi;
  if (num % 4 != 0)
    throw Error(ErrorCode::NotDivisibleBy4,
                "c1^2 - 3 sigma - 2 chi = " + std::to_string(num) + "; c1 is not characteristic");
  return {num / 4, num / 4 + m.dim_q};
}

/// d(l) = k l^2 + n l - 2 for the class s - PD(S1) + l PD(S0).
constexpr std::int64_t dimension_polynomial(std::int64_t k, std::int64_t n, std::int64_t l) {
  return k * l * l + n * l - 2;
}

enum class ChamberStructure { Single, TwoSigned, IntegerFamily };

constexpr const char* to_string(ChamberStructure c) {
  switch (c) {
    case ChamberStructure::Single: return "single";
    case ChamberStructure::TwoSigned: return "two-signed";
    case ChamberStructure::IntegerFamily: return "integer-family";
  }
  return "?";
}

/// Homotopy classes [S^2, V+(M)]: one class unless b+ is 1 (two components)
/// or 3 (V+ ~ S^2, classified by degree).
inline ChamberStructure classify_chambers(std::int64_t b_plus) {
  if (b_plus <= 0) throw Error(ErrorCode::InvalidBPlus, "b+ = " + std::to_string(b_plus));
  if (b_plus == 1) return ChamberStructure::TwoSigned;
  if (b_plus == 3) return ChamberStructure::IntegerFamily;
  return ChamberStructure::Single;
}

}  // namespace adefam
