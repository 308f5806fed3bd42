#pragma once

#include <cstddef>
#include <span>

// Dense membership kernels. Inputs are per-timeline-position membership
// vectors of equal length; position order is temporal order, so precedence
// between positions j and k is simply j < k and adjacency is k == j + 1.
//
// `serial` is the reference; `omp` must agree with it exactly (all kernels
// are min/max reductions, which are order-independent).
namespace fuzzytl::kernels {

/// Timelines at least this long go through the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

namespace serial {
double before(std::span<const double> a, std::span<const double> b) noexcept;
double overlap(std::span<const double> a, std::span<const double> b) noexcept;
double meets(std::span<const double> a, std::span<const double> b) noexcept;
bool same_time(std::span<const double> a, std::span<const double> b, double tolerance) noexcept;
bool during(std::span<const double> a, std::span<const double> b) noexcept;
bool supports_intersect(std::span<const double> a, std::span<const double> b) noexcept;
void unite(std::span<const double> a, std::span<const double> b, std::span<double> out) noexcept;
void intersect(std::span<const double> a, std::span<const double> b, std::span<double> out) noexcept;
void complement(std::span<const double> a, std::span<double> out) noexcept;
}  // namespace serial

namespace omp {
double before(std::span<const double> a, std::span<const double> b) noexcept;
double overlap(std::span<const double> a, std::span<const double> b) noexcept;
double meets(std::span<const double> a, std::span<const double> b) noexcept;
bool same_time(std::span<const double> a, std::span<const double> b, double tolerance) noexcept;
bool during(std::span<const double> a, std::span<const double> b) noexcept;
bool supports_intersect(std::span<const double> a, std::span<const double> b) noexcept;
void unite(std::span<const double> a, std::span<const double> b, std::span<double> out) noexcept;
void intersect(std::span<const double> a, std::span<const double> b, std::span<double> out) noexcept;
void complement(std::span<const double> a, std::span<double> out) noexcept;
}  // namespace omp

}  // namespace fuzzytl::kernels
