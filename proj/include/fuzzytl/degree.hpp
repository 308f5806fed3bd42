#pragma once

#include <compare>

namespace fuzzytl {

/// A possibility degree in [0, 1].
class Degree {
 public:
  constexpr Degree() noexcept = default;

  /// Throws Error(DegreeOutOfRange) for NaN or values outside [0, 1].
  explicit Degree(double value);

  static constexpr Degree zero() noexcept { return Degree(); }
  static Degree one() noexcept;

  constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  double value_ = 0.0;
};

/// Memberships live on a grid of 15 decimal places. Snapping onto the grid
/// makes 1 - mu an exact involution, which plain binary doubles do not give.
/// `value` must already be within [0, 1].
double snap_membership(double value) noexcept;

/// snap_membership(1 - value).
double complement_membership(double value) noexcept;

}  // namespace fuzzytl
