#include <algorithm>
#include <cmath>

#include "fuzzytl/degree.hpp"
#include "fuzzytl/kernels.hpp"

namespace fuzzytl::kernels::serial {

double before(std::span<const double> a, std::span<const double> b) noexcept {
  // `earlier` is the largest membership of `a` strictly before position k.
  double earlier = 0.0;
  double best = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    best = std::max(best, std::min(earlier, b[k]));
    earlier = std::max(earlier, a[k]);
  }
  return best;
}

double overlap(std::span<const double> a, std::span<const double> b) noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::min(a[i], b[i]));
  return best;
}

double meets(std::span<const double> a, std::span<const double> b) noexcept {
  double best = 0.0;
  for (std::size_t k = 1; k < b.size(); ++k) best = std::max(best, std::min(a[k - 1], b[k]));
  return best;
}

bool same_time(std::span<const double> a, std::span<const double> b, double tolerance) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] > 0.0) != (b[i] > 0.0)) return false;
    if (std::fabs(a[i] - b[i]) > tolerance) return false;
  }
  return true;
}

bool during(std::span<const double> a, std::span<const double> b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0.0 && a[i] > b[i]) return false;
  }
  return true;
}

bool supports_intersect(std::span<const double> a, std::span<const double> b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0.0 && b[i] > 0.0) return true;
  }
  return false;
}

void unite(std::span<const double> a, std::span<const double> b, std::span<double> out) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
}

void intersect(std::span<const double> a, std::span<const double> b, std::span<double> out) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
}

void complement(std::span<const double> a, std::span<double> out) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = complement_membership(a[i]);
}

}  // namespace fuzzytl::kernels::serial
