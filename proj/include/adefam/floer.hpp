#pragma once

// Rank-1 graded module bookkeeping for the Floer groups of S^3 and L-spaces,
// cobordism maps as (grading shift, scalar), and the gluing, switching,
// wall-crossing and pull-back rules evaluated as exact arithmetic.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adefam/error.hpp"
#include "adefam/rational.hpp"

namespace adefam {

enum class Flavor { Bar, Hat, Check };

constexpr const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Bar: return "bar";
    case Flavor::Hat: return "hat";
    case Flavor::Check: return "check";
  }
  return "?";
}

/// An L-space (or S^3) in one spin-c structure, through its Froyshov invariant.
struct LSpaceData {
  Rational froyshov{0};

  static LSpaceData sphere() { return {}; }
  bool operator==(const LSpaceData&) const = default;
};

namespace detail {
inline bool even_offset(const Rational& x) { return is_integer(x / 2); }
}  // namespace detail

/// coefficient * e_grading in the given flavor of the Floer group of `space`.
///
/// Nonzero elements live on their support: bar in -2h + 2Z, check in -2h + 2Z
/// at or above -2h, hat in -2h - 1 + 2Z at or below -2h - 1. Zero elements
/// carry a grading label but no support constraint.
struct GradedElement {
  Flavor flavor = Flavor::Bar;
  Rational grading{0};
  Rational coefficient{0};
  LSpaceData space{};

  bool is_zero() const { return coefficient == 0; }

  bool on_support() const {
    const Rational two_h = 2 * space.froyshov;
    switch (flavor) {
      case Flavor::Bar: return detail::even_offset(grading + two_h);
      case Flavor::Check: return detail::even_offset(grading + two_h) && grading >= -two_h;
      case Flavor::Hat: return detail::even_offset(grading + two_h + 1) && grading <= -two_h - 1;
    }
    return false;
  }

  bool operator==(const GradedElement&) const = default;
};

inline GradedElement make_element(Flavor f, const LSpaceData& y, Rational grading, Rational coefficient) {
  GradedElement x{f, std::move(grading), std::move(coefficient), y};
  if (!x.is_zero() && !x.on_support())
    throw Error(ErrorCode::InvalidGrading, std::string(to_string(f)) + " element at grading " +
                                               to_string(x.grading) + " with h = " + to_string(y.froyshov));
  return x;
}

inline GradedElement bar(const LSpaceData& y, Rational k, Rational c = 1) {
  return make_element(Flavor::Bar, y, std::move(k), std::move(c));
}
inline GradedElement hat(const LSpaceData& y, Rational k, Rational c = 1) {
  return make_element(Flavor::Hat, y, std::move(k), std::move(c));
}
inline GradedElement check(const LSpaceData& y, Rational k, Rational c = 1) {
  return make_element(Flavor::Check, y, std::move(k), std::move(c));
}

/// U lowers the rational grading by 2.
inline GradedElement u_action(const GradedElement& x) {
  GradedElement out = x;
  out.grading -= 2;
  if (!out.is_zero() && !out.on_support())
    throw Error(ErrorCode::GradingUnderflow, std::string(to_string(x.flavor)) + " element at grading " +
                                                 to_string(x.grading) + " has no U-image in its support");
  return out;
}

inline GradedElement u_power(GradedElement x, std::int64_t power) {
  if (power < 0) throw Error(ErrorCode::InvalidParameter, "negative U power");
  for (std::int64_t i = 0; i < power; ++i) x = u_action(x);
  return x;
}

enum class Parity { Even, Odd };

/// A family cobordism map on the rank-1 models: grading shift d and the
/// scalar c = c_{dim Q/2}(-Ind D+)[Q].
struct CobordismArrow {
  Rational shift{0};
  Rational coefficient{1};
  std::int64_t b_plus = 0;
  Parity dim_q_parity = Parity::Even;
  LSpaceData target{};

  /// The map vanishes when b+(W) > 0 or dim Q is odd.
  Rational effective_coefficient() const {
    return (b_plus > 0 || dim_q_parity == Parity::Odd) ? Rational(0) : coefficient;
  }
};

/// d = (c1^2 - sigma) / 4 + dim Q.
inline Rational arrow_shift(const Rational& c1_squared, std::int64_t sigma, std::int64_t dim_q) {
  return (c1_squared - sigma) / 4 + dim_q;
}

/// W1 followed by W2.
inline CobordismArrow compose(const CobordismArrow& first, const CobordismArrow& second) {
  const bool odd = first.dim_q_parity == Parity::Odd || second.dim_q_parity == Parity::Odd;
  return {first.shift + second.shift, first.coefficient * second.coefficient, first.b_plus + second.b_plus,
          odd ? Parity::Odd : Parity::Even, second.target};
}

inline GradedElement hm_bar_map(const CobordismArrow& arrow, const GradedElement& x) {
  if (x.flavor != Flavor::Bar) throw Error(ErrorCode::FlavorMismatch, "bar map applied to a non-bar element");
  return bar(arrow.target, x.grading + arrow.shift, arrow.effective_coefficient() * x.coefficient);
}

struct HatImage {
  GradedElement element;
  // d - 1 lies above the support of the target; the map is then zero and the
  // scalar itself has to vanish.
  bool above_support = false;

  bool consistent(const CobordismArrow& arrow) const {
    return !above_support || arrow.effective_coefficient() == 0;
  }
};

/// Image of the generator 1^ of HM^(S^3) (grading -1) under the family map.
inline HatImage hm_hat_of_generator(const CobordismArrow& arrow) {
  const Rational grading = arrow.shift - 1;
  const Rational c = arrow.effective_coefficient();
  const GradedElement zero{Flavor::Hat, grading, 0, arrow.target};
  if (c == 0) {
    return {zero, grading > -2 * arrow.target.froyshov};
  }
  if (grading > -2 * arrow.target.froyshov) return {zero, true};
  return {hat(arrow.target, grading, c), false};
}

/// Grading offset between a hat class and the check class it pairs with,
/// pinned by <1^, 1v> on S^3 where gr(1^) = -1 and gr(1v) = 0.
inline const Rational kPairingOffset{1};

inline HatImage hm_hat_of_generator(CobordismArrow arrow, const LSpaceData& target) {
  arrow.target = target;
  return hm_hat_of_generator(arrow);
}

/// A cohomology class, labelled by the grading of the check generator it is dual to.
struct DualElement {
  Rational grading{0};
  Rational coefficient{0};
};

inline Rational evaluate_gluing(const GradedElement& left, const DualElement& right,
                                const Rational& offset = kPairingOffset) {
  if (left.flavor != Flavor::Hat) throw Error(ErrorCode::FlavorMismatch, "gluing pairs a hat element");
  if (right.grading - left.grading != offset) return 0;
  return left.coefficient * right.coefficient;
}

/// FSW for M = M1 u M2 in terms of the index scalar and SW of the fiber.
inline Rational switching(const Rational& chern, const Rational& sw_fiber, std::int64_t b_plus_m1,
                          std::int64_t b_plus_m2) {
  (void)b_plus_m2;  // selects FSW (b+ > 1) or FSW_+- (b+ = 1); the value rule is the same
  if (b_plus_m1 > 0) return 0;
  return chern * sw_fiber;
}

/// Data for evaluating the switching rule through the Floer groups of Y.
struct SwitchingInput {
  Rational chern;             // c_{dim Q/2}(-Ind D+)[Q]
  Rational sw_fiber;          // SW(M, s)
  Rational fiber_shift;       // d' = (c1(s|M1)^2 - sigma(M1)) / 4
  std::int64_t fiber_dim = 0; // d(s, M), even and >= 0
  std::int64_t b_plus_m1 = 0;
  LSpaceData y{};
};

struct SwitchingTrace {
  GradedElement fiber_image;   // HM^(W01)(1^) = e^_{d'-1}
  GradedElement fiber_lowered; // U^{d/2} e^_{d'-1}
  DualElement fiber_dual;      // HM->(W12)(1v), normalised by SW(M, s)
  HatImage family_image;       // HM^(W~01)(1^) = c e^_{d'-d-1}
  Rational sw_check;           // <U^{d/2} e^_{d'-1}, dual>, equals SW(M, s)
  Rational fsw;
};

/// Glues S^3 -> Y (family) with Y -> S^3 (fiber), recovering the dual class
/// on Y from the fiber's own gluing formula.
inline SwitchingTrace switching_via_gluing(const SwitchingInput& in) {
  if (in.fiber_dim < 0 || in.fiber_dim % 2 != 0)
    throw Error(ErrorCode::InvalidParameter, "fiber expected dimension must be even and non-negative");
  SwitchingTrace tr;
  // The dual class on Y only depends on M2; it is located through the
  // grading of the fiber image, whatever b+(M1) is.
  const CobordismArrow fiber_arrow{in.fiber_shift, 1, 0, Parity::Even, in.y};
  const HatImage fiber = hm_hat_of_generator(fiber_arrow);
  if (fiber.above_support || fiber.element.is_zero())
    throw Error(ErrorCode::InvalidGrading, "fiber generator image lies above the support of Y");
  tr.fiber_image = fiber.element;
  tr.fiber_lowered = u_power(fiber.element, in.fiber_dim / 2);
  tr.fiber_dual = {tr.fiber_lowered.grading + kPairingOffset, in.sw_fiber};
  tr.sw_check = evaluate_gluing(tr.fiber_lowered, tr.fiber_dual);

  const CobordismArrow family_arrow{in.fiber_shift - in.fiber_dim, in.chern, in.b_plus_m1, Parity::Even, in.y};
  tr.family_image = hm_hat_of_generator(family_arrow);
  tr.fsw = evaluate_gluing(tr.family_image.element, tr.fiber_dual);
  return tr;
}

/// FSW in chamber xi^j for b+ = 3 over S^2; other b+ admit only j = 0.
inline Rational wall_crossing(const Rational& fsw_canonical, std::int64_t j, const Rational& wall_number,
                              std::int64_t fiber_b_plus = 3) {
  if (fiber_b_plus != 3 && j != 0)
    throw Error(ErrorCode::InvalidChamberIndex,
                "chamber index " + std::to_string(j) + " with b+ = " + std::to_string(fiber_b_plus));
  return fsw_canonical + Rational(j) * wall_number;
}

inline Rational pullback(const Rational& fsw, std::int64_t degree) { return Rational(degree) * fsw; }

struct DetectionRow {
  int sign = 1;                      // orientation sign of SW(gamma_Si, s_i) relative to SW(M, s)
  std::vector<bool> cross_vanishes;  // per column j != i
  std::vector<Rational> cross_values; // used where the cross term does not vanish
};

struct DetectionMatrix {
  std::vector<std::vector<Rational>> entries;
  std::size_t rank = 0;

  bool full_rank() const { return rank == entries.size(); }
};

/// Exact rank by Gaussian elimination over Q.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Matrix [SW(gamma_{S_i}, s_j)]: sign_i * sw_base on the diagonal, zero where
/// the cross term is declared to vanish, the supplied value elsewhere.
inline DetectionMatrix detection_matrix(const Rational& sw_base, const std::vector<DetectionRow>& rows) {
  const std::size_t n = rows.size();
  DetectionMatrix out;
  out.entries.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    const std::string where = "row " + std::to_string(i + 1);
    if (row.sign != 1 && row.sign != -1)
      throw Error(ErrorCode::InconsistentVanishingFlags, where + ": sign must be +1 or -1");
    if (row.cross_vanishes.size() != n)
      throw Error(ErrorCode::InconsistentVanishingFlags, where + ": expected " + std::to_string(n) + " flags");
    if (row.cross_vanishes[i])
      throw Error(ErrorCode::InconsistentVanishingFlags, where + ": the diagonal term never vanishes by hypothesis");
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) {
        out.entries[i][j] = Rational(row.sign) * sw_base;
      } else if (!row.cross_vanishes[j]) {
        if (row.cross_values.size() != n)
          throw Error(ErrorCode::InconsistentVanishingFlags,
                      where + ": non-vanishing cross term without a supplied value");
        out.entries[i][j] = row.cross_values[j];
      }
    }
  }
  out.rank = rational_rank(out.entries);
  return out;
}

}  // namespace adefam
