#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fcmqr {

struct PearsonResult {
    double r = 0.0;
    bool degenerate = false;  // a zero-variance input forces r = 0
};

// Standard Pearson coefficient; requires equal lengths >= 2.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

// Average Correlation Value of a matrix: the larger of the mean absolute
// off-diagonal row-pair and column-pair correlations. Values near 1 indicate
// an internally coherent (significant) block.
struct AcvReport {
    double row_term = 0.0;
    double col_term = 0.0;
    double acv = 0.0;  // max(row_term, col_term)
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t degenerate_pairs = 0;  // zero-variance pairs encountered (rows + columns)
};

// Requires at least a 2x2 matrix with rectangular rows.
AcvReport acv(const std::vector<std::vector<double>>& matrix);

}  // namespace fcmqr
