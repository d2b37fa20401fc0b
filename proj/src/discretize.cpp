#include "fcmqr/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "fcmqr/errors.hpp"

namespace fcmqr {

namespace {

struct WeightedValues {
    std::vector<double> value;   // distinct, ascending, mean-shifted
    std::vector<double> weight;  // multiplicities
};

// SSE of distinct-value segment [a, b] via weighted prefix sums.
class SegmentCost {
public:
    explicit SegmentCost(const WeightedValues& wv) {
        const std::size_t n = wv.value.size();
        w_.assign(n + 1, 0.0);
        s_.assign(n + 1, 0.0);
        s2_.assign(n + 1, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            w_[i + 1] = w_[i] + wv.weight[i];
            s_[i + 1] = s_[i] + wv.weight[i] * wv.value[i];
            s2_[i + 1] = s2_[i] + wv.weight[i] * wv.value[i] * wv.value[i];
        }
    }

    double operator()(std::size_t a, std::size_t b) const {  // inclusive indices
        double w = w_[b + 1] - w_[a];
        double s = s_[b + 1] - s_[a];
        double s2 = s2_[b + 1] - s2_[a];
        double sse = s2 - s * s / w;
        return sse < 0.0 ? 0.0 : sse;  // guard tiny negative rounding
    }

private:
    std::vector<double> w_, s_, s2_;
};

}  // namespace

std::vector<int> discretize_attribute(const std::vector<double>& values,
                                      const DiscretizerConfig& config) {
    if (values.empty()) throw DataError("cannot discretize an empty value vector");
    if (config.bins == 0) throw DataError("bin count must be at least 1");
    for (double v : values)
        if (!std::isfinite(v)) throw DataError("cannot discretize non-finite values");

    // distinct values with multiplicities, shifted by the mean to tame cancellation
    std::map<double, double> counts;
    for (double v : values) counts[v] += 1.0;
    const std::size_t d = counts.size();
    const std::size_t bins = std::min(config.bins, d);  // clamp, as recorded in the contract

    std::vector<int> labels(values.size(), 0);
    if (bins <= 1) return labels;

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());

    WeightedValues wv;
    for (const auto& [v, w] : counts) {
        wv.value.push_back(v - mean);
        wv.weight.push_back(w);
    }
    SegmentCost cost(wv);

    // D[j][i]: optimal SSE of the first i+1 distinct values in j+1 clusters.
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> best(bins, std::vector<double>(d, inf));
    std::vector<std::vector<std::size_t>> split(bins, std::vector<std::size_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) best[0][i] = cost(0, i);
    for (std::size_t j = 1; j < bins; ++j) {
        for (std::size_t i = j; i < d; ++i) {
            for (std::size_t t = j; t <= i; ++t) {  // cluster j covers [t, i]
                double c = best[j - 1][t - 1] + cost(t, i);
                if (c < best[j][i]) {
                    best[j][i] = c;
                    split[j][i] = t;
                }
            }
        }
    }

    // backtrack cluster boundaries over distinct values
    std::vector<int> distinct_label(d, 0);
    std::size_t hi = d - 1;
    for (std::size_t j = bins - 1; j > 0; --j) {
        std::size_t lo = split[j][hi];
        for (std::size_t i = lo; i <= hi; ++i) distinct_label[i] = static_cast<int>(j);
        hi = lo - 1;
    }

    // map each original value to its distinct index's label
    std::map<double, int> value_label;
    {
        std::size_t i = 0;
        for (const auto& [v, w] : counts) value_label[v] = distinct_label[i++];
    }
    for (std::size_t i = 0; i < values.size(); ++i) labels[i] = value_label[values[i]];
    return labels;
}

DecisionTable discretize_table(const FeatureSubsetView& view, const DiscretizerConfig& config) {
    if (view.sample_count() == 0) throw DataError("cannot discretize a view with no samples");
    std::vector<std::vector<int>> columns;
    columns.reserve(view.feature_count());
    for (std::size_t f = 0; f < view.feature_count(); ++f)
        columns.push_back(discretize_attribute(view.feature_values(f), config));
    return build_decision_table(view, columns);
}

}  // namespace fcmqr
