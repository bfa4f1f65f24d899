#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mgnn {

struct SplitIndices {
  std::vector<std::uint32_t> train;  // ascending
  std::vector<std::uint32_t> test;   // ascending
};

/*
  Per-class test counts are round(n_c * fraction), then nudged by one at a
  time (largest rounding residual first) until they add up to
  round(n * fraction). Members within a class are drawn uniformly.
  Classes are the distinct values present in `labels`.
*/
SplitIndices stratified_split(std::span<const std::uint32_t> labels, double test_fraction, std::uint64_t seed);

/// As above, but every class in [0, n_classes) must be non-empty.
SplitIndices stratified_split(std::span<const std::uint32_t> labels, std::size_t n_classes, double test_fraction,
                              std::uint64_t seed);

}  // namespace mgnn
