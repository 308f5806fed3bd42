#include "fuzzytl/degree.hpp"

#include <cmath>
#include <string>

#include "fuzzytl/error.hpp"

namespace fuzzytl {

namespace {
constexpr double kGridScale = 1e15;
}

Degree::Degree(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::DegreeOutOfRange, std::to_string(value) + " is not in [0, 1]");
  }
}

Degree Degree::one() noexcept {
  Degree d;
  d.value_ = 1.0;
  return d;
}

// value * 1e15 stays below 2^50, and the combined error of the input and the
// product is well under half a grid step, so nearbyint recovers the intended
// grid point; the division is then correctly rounded.
double snap_membership(double value) noexcept {
  return std::nearbyint(value * kGridScale) / kGridScale;
}

double complement_membership(double value) noexcept {
  return snap_membership(1.0 - value);
}

}  // namespace fuzzytl
