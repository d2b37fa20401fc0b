#include "fcmqr/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fcmqr/errors.hpp"

namespace fcmqr::oracle {

namespace {

double segment_sse(const std::vector<double>& sorted, std::size_t lo, std::size_t hi) {
    double mean = 0.0;
    for (std::size_t i = lo; i < hi; ++i) mean += sorted[i];
    mean /= static_cast<double>(hi - lo);
    double sse = 0.0;
    for (std::size_t i = lo; i < hi; ++i) sse += (sorted[i] - mean) * (sorted[i] - mean);
    return sse;
}

// recursively place the remaining split points, keeping the best total
void search_splits(const std::vector<double>& sorted, std::size_t bins, std::size_t next,
                   std::size_t chosen_from, std::vector<std::size_t>& cuts, double partial,
                   double& best_sse, std::vector<std::size_t>& best_cuts) {
    const std::size_t n = sorted.size();
    if (cuts.size() == bins - 1) {
        double total = partial + segment_sse(sorted, chosen_from, n);
        if (total < best_sse) {
            best_sse = total;
            best_cuts = cuts;
        }
        return;
    }
    const std::size_t remaining = bins - 1 - cuts.size();
    for (std::size_t cut = next; cut + remaining <= n; ++cut) {
        cuts.push_back(cut);
        search_splits(sorted, bins, cut + 1, cut, cuts,
                      partial + segment_sse(sorted, chosen_from, cut), best_sse, best_cuts);
        cuts.pop_back();
    }
}

}  // namespace

double within_cluster_sse(const std::vector<double>& values, const std::vector<int>& labels) {
    if (values.size() != labels.size()) throw DataError("oracle: values/labels length mismatch");
    int max_label = 0;
    for (int l : labels) max_label = std::max(max_label, l);
    double sse = 0.0;
    for (int cluster = 0; cluster <= max_label; ++cluster) {
        double sum = 0.0;
        int count = 0;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (labels[i] == cluster) {
                sum += values[i];
                ++count;
            }
        if (count == 0) continue;
        double mean = sum / count;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (labels[i] == cluster) sse += (values[i] - mean) * (values[i] - mean);
    }
    return sse;
}

ContiguousPartition best_contiguous_partition(const std::vector<double>& values, std::size_t bins,
                                              std::size_t max_values) {
    if (values.empty()) throw DataError("oracle: empty value vector");
    if (bins == 0) throw DataError("oracle: bin count must be at least 1");
    if (values.size() > max_values)
        throw DataError("oracle: contiguous-partition search guard exceeded: " +
                        std::to_string(values.size()) + " values > limit " +
                        std::to_string(max_values));

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> sorted(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = values[order[i]];

    const std::size_t n = sorted.size();
    std::size_t distinct = 1;
    for (std::size_t i = 1; i < n; ++i)
        if (sorted[i] != sorted[i - 1]) ++distinct;
    bins = std::min(bins, distinct);

    double best_sse = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> cuts, best_cuts;
    search_splits(sorted, bins, 1, 0, cuts, 0.0, best_sse, best_cuts);

    ContiguousPartition result;
    result.sse = best_sse;
    result.labels.assign(n, 0);
    std::vector<int> sorted_labels(n, 0);
    std::size_t from = 0;
    for (std::size_t b = 0; b < best_cuts.size(); ++b) {
        for (std::size_t i = from; i < best_cuts[b]; ++i) sorted_labels[i] = static_cast<int>(b);
        from = best_cuts[b];
    }
    for (std::size_t i = from; i < n; ++i) sorted_labels[i] = static_cast<int>(best_cuts.size());
    for (std::size_t i = 0; i < n; ++i) result.labels[order[i]] = sorted_labels[i];
    return result;
}

std::vector<int> positive_region_bruteforce(const DecisionTable& table,
                                            const std::vector<std::size_t>& attrs) {
    const std::size_t n = table.object_count();
    std::vector<int> region;
    for (std::size_t o = 0; o < n; ++o) {
        bool positive = true;
        for (std::size_t p = 0; p < n && positive; ++p) {
            bool same_tuple = true;
            for (std::size_t a : attrs)
                if (table.cells[o][a] != table.cells[p][a]) {
                    same_tuple = false;
                    break;
                }
            if (same_tuple && table.decision[o] != table.decision[p]) positive = false;
        }
        if (positive) region.push_back(static_cast<int>(o));
    }
    return region;
}

GammaValue gamma_bruteforce(const DecisionTable& table, const std::vector<std::size_t>& attrs) {
    return GammaValue{static_cast<long long>(positive_region_bruteforce(table, attrs).size()),
                      static_cast<long long>(table.object_count())};
}

namespace {

// product-moment form, one pass; a different route than the centered two-pass
// used by the production pearson
double pearson_product_moment(const std::vector<double>& x, const std::vector<double>& y,
                              bool& degenerate) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    double vx = sxx - sx * sx / n;
    double vy = syy - sy * sy / n;
    if (vx <= 0.0 || vy <= 0.0) {
        degenerate = true;
        return 0.0;
    }
    degenerate = false;
    return std::clamp((sxy - sx * sy / n) / std::sqrt(vx * vy), -1.0, 1.0);
}

}  // namespace

AcvReport acv_direct(const std::vector<std::vector<double>>& matrix) {
    const std::size_t m = matrix.size();
    if (m < 2) throw DataError("oracle acv: need at least 2 rows");
    const std::size_t n = matrix.front().size();
    if (n < 2) throw DataError("oracle acv: need at least 2 columns");

    AcvReport report;
    report.rows = m;
    report.cols = n;

    // literal form: all ordered pairs including the diagonal, minus the
    // dimension (each non-degenerate self-correlation is exactly 1)
    double row_sum = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) {
                row_sum += 1.0;
                continue;
            }
            bool degenerate = false;
            row_sum += std::abs(pearson_product_moment(matrix[i], matrix[j], degenerate));
            if (degenerate && i < j) ++report.degenerate_pairs;
        }
    report.row_term = (row_sum - static_cast<double>(m)) /
                      (static_cast<double>(m) * static_cast<double>(m) - static_cast<double>(m));

    std::vector<std::vector<double>> columns(n, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) columns[j][i] = matrix[i][j];
    double col_sum = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) {
                col_sum += 1.0;
                continue;
            }
            bool degenerate = false;
            col_sum += std::abs(pearson_product_moment(columns[p], columns[q], degenerate));
            if (degenerate && p < q) ++report.degenerate_pairs;
        }
    report.col_term = (col_sum - static_cast<double>(n)) /
                      (static_cast<double>(n) * static_cast<double>(n) - static_cast<double>(n));

    report.acv = std::max(report.row_term, report.col_term);
    return report;
}

}  // namespace fcmqr::oracle
