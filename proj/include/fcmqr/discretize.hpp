#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fcmqr/dataset.hpp"

namespace fcmqr {

struct DiscretizerConfig {
    std::size_t bins = 3;       // clamped down to the number of distinct values
    std::size_t max_iters = 100;  // interface compatibility; the exact solver does not iterate
    std::uint64_t seed = 0;       // reserved for future init modes
};

// 1-D k-means of a single attribute, solved exactly by dynamic programming
// over distinct values: globally SSE-optimal, deterministic, labels monotone
// in value (bin 0 holds the lowest values). Equal values always share a label.
std::vector<int> discretize_attribute(const std::vector<double>& values,
                                      const DiscretizerConfig& config);

// Discretizes every feature of the view independently and assembles the
// decision table.
DecisionTable discretize_table(const FeatureSubsetView& view, const DiscretizerConfig& config);

}  // namespace fcmqr
