#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fuzzytl/degree.hpp"
#include "fuzzytl/kernels.hpp"

namespace fuzzytl::kernels::omp {

namespace {
using Index = std::ptrdiff_t;
inline Index ssize(std::span<const double> s) { return static_cast<Index>(s.size()); }
}  // namespace

// Blocked prefix-max: each thread takes a contiguous block, the block maxima
// of `a` are scanned once, then every thread sweeps its block starting from
// the maximum of everything to its left.
double before(std::span<const double> a, std::span<const double> b) noexcept {
  const Index n = ssize(b);
  if (n < 2) return 0.0;
  std::vector<double> carry(static_cast<std::size_t>(omp_get_max_threads()) + 1, 0.0);
  double best = 0.0;
#pragma omp parallel reduction(max : best)
  {
    const Index threads = omp_get_num_threads();
    const Index t = omp_get_thread_num();
    const Index lo = n * t / threads;
    const Index hi = n * (t + 1) / threads;

    double block_max = 0.0;
    for (Index i = lo; i < hi; ++i) block_max = std::max(block_max, a[i]);
    carry[t + 1] = block_max;
#pragma omp barrier
#pragma omp single
    for (Index k = 1; k <= threads; ++k) carry[k] = std::max(carry[k], carry[k - 1]);

    double earlier = carry[t];
    for (Index k = lo; k < hi; ++k) {
      best = std::max(best, std::min(earlier, b[k]));
      earlier = std::max(earlier, a[k]);
    }
  }
  return best;
}

double overlap(std::span<const double> a, std::span<const double> b) noexcept {
  const Index n = ssize(a);
  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (Index i = 0; i < n; ++i) best = std::max(best, std::min(a[i], b[i]));
  return best;
}

double meets(std::span<const double> a, std::span<const double> b) noexcept {
  const Index n = ssize(b);
  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (Index k = 1; k < n; ++k) best = std::max(best, std::min(a[k - 1], b[k]));
  return best;
}

bool same_time(std::span<const double> a, std::span<const double> b, double tolerance) noexcept {
  const Index n = ssize(a);
  bool equal = true;
#pragma omp parallel for reduction(&& : equal) schedule(static)
  for (Index i = 0; i < n; ++i) {
    equal = equal && ((a[i] > 0.0) == (b[i] > 0.0)) && std::fabs(a[i] - b[i]) <= tolerance;
  }
  return equal;
}

bool during(std::span<const double> a, std::span<const double> b) noexcept {
  const Index n = ssize(a);
  bool contained = true;
#pragma omp parallel for reduction(&& : contained) schedule(static)
  for (Index i = 0; i < n; ++i) contained = contained && !(a[i] > 0.0 && a[i] > b[i]);
  return contained;
}

bool supports_intersect(std::span<const double> a, std::span<const double> b) noexcept {
  const Index n = ssize(a);
  bool shared = false;
#pragma omp parallel for reduction(|| : shared) schedule(static)
  for (Index i = 0; i < n; ++i) shared = shared || (a[i] > 0.0 && b[i] > 0.0);
  return shared;
}

void unite(std::span<const double> a, std::span<const double> b, std::span<double> out) noexcept {
  const Index n = ssize(a);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) out[i] = std::max(a[i], b[i]);
}

void intersect(std::span<const double> a, std::span<const double> b, std::span<double> out) noexcept {
  const Index n = ssize(a);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) out[i] = std::min(a[i], b[i]);
}

void complement(std::span<const double> a, std::span<double> out) noexcept {
  const Index n = ssize(a);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) out[i] = complement_membership(a[i]);
}

}  // namespace fuzzytl::kernels::omp
