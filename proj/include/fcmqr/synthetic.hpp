#pragma once

#include <cstddef>
#include <cstdint>

#include "fcmqr/dataset.hpp"

namespace fcmqr {

struct SyntheticConfig {
    std::size_t n_genes = 100;   // >= 2
    std::size_t n_samples = 30;  // >= 4
    bool planted_pair = true;
    std::uint64_t seed = 0;
};

// Two balanced classes (alternating sample order). With planted_pair, genes 0
// and 1 are positive-affine copies of a class-separating profile whose class
// gap is at least 5x the unit noise sigma; every other gene is i.i.d.
// standard Gaussian noise. Deterministic per seed.
ExpressionDataset generate_synthetic(const SyntheticConfig& config);

}  // namespace fcmqr
