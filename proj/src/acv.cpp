#include "fcmqr/acv.hpp"

#include <algorithm>
#include <cmath>

#include "fcmqr/errors.hpp"

namespace fcmqr {

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DataError("pearson: length mismatch (" + std::to_string(x.size()) + " vs " +
                        std::to_string(y.size()) + ")");
    if (x.size() < 2) throw DataError("pearson: need at least 2 points");

    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return {0.0, true};
    double r = sxy / std::sqrt(sxx * syy);
    return {std::clamp(r, -1.0, 1.0), false};
}

namespace {

// mean absolute off-diagonal correlation over vectors; the diagonal's
// self-correlations contribute exactly the vector count and cancel out
double mean_abs_offdiag(const std::vector<std::vector<double>>& vectors,
                        std::size_t& degenerate_pairs) {
    const std::size_t m = vectors.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            PearsonResult p = pearson(vectors[i], vectors[j]);
            if (p.degenerate) ++degenerate_pairs;
            sum += 2.0 * std::abs(p.r);  // ordered pairs (i,j) and (j,i)
        }
    }
    return sum / (static_cast<double>(m) * static_cast<double>(m) - static_cast<double>(m));
}

}  // namespace

AcvReport acv(const std::vector<std::vector<double>>& matrix) {
    const std::size_t m = matrix.size();
    if (m < 2) throw DataError("acv: need at least 2 rows");
    const std::size_t n = matrix.front().size();
    if (n < 2) throw DataError("acv: need at least 2 columns");
    for (const auto& row : matrix)
        if (row.size() != n) throw DataError("acv: ragged matrix");

    AcvReport report;
    report.rows = m;
    report.cols = n;

    report.row_term = mean_abs_offdiag(matrix, report.degenerate_pairs);

    std::vector<std::vector<double>> columns(n, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) columns[j][i] = matrix[i][j];
    report.col_term = mean_abs_offdiag(columns, report.degenerate_pairs);

    report.acv = std::max(report.row_term, report.col_term);
    return report;
}

}  // namespace fcmqr
