#include "fcmqr/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "fcmqr/errors.hpp"

namespace fcmqr {

const char* classifier_name(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::NaiveBayes: return "naive-bayes";
        case ClassifierKind::DecisionTable: return "decision-table";
        case ClassifierKind::Tree: return "tree";
        case ClassifierKind::NearestNeighbor: return "nearest-neighbor";
    }
    return "unknown";
}

ClassifierKind classifier_from_name(const std::string& name) {
    if (name == "naive-bayes" || name == "nb") return ClassifierKind::NaiveBayes;
    if (name == "decision-table" || name == "dtable" || name == "stump")
        return ClassifierKind::DecisionTable;
    if (name == "tree" || name == "j48") return ClassifierKind::Tree;
    if (name == "nearest-neighbor" || name == "1nn" || name == "knn")
        return ClassifierKind::NearestNeighbor;
    throw DataError("unknown classifier: " + name);
}

namespace {

constexpr double kVarianceFloor = 1e-9;

void check_training(const std::vector<std::vector<double>>& samples, const std::vector<int>& labels,
                    int class_count) {
    if (samples.empty()) throw DataError("train: empty training set");
    if (samples.size() != labels.size()) throw DataError("train: sample/label count mismatch");
    const std::size_t dim = samples.front().size();
    for (const auto& s : samples)
        if (s.size() != dim) throw DataError("train: samples of mixed dimension");
    for (int l : labels)
        if (l < 0 || l >= class_count) throw DataError("train: label outside class range");
    if (class_count < 1) throw DataError("train: need at least one class");
}

int majority_class(const std::vector<int>& counts) {
    int best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c)
        if (counts[c] > counts[best]) best = static_cast<int>(c);
    return best;
}

std::vector<int> class_counts(const std::vector<int>& labels, int class_count) {
    std::vector<int> counts(class_count, 0);
    for (int l : labels) ++counts[l];
    return counts;
}

GaussianNbModel train_nb(const std::vector<std::vector<double>>& samples,
                         const std::vector<int>& labels, int class_count) {
    const std::size_t dim = samples.front().size();
    const auto counts = class_counts(labels, class_count);

    GaussianNbModel model;
    model.log_priors.assign(class_count, -std::numeric_limits<double>::infinity());
    model.means.assign(class_count, std::vector<double>(dim, 0.0));
    model.variances.assign(class_count, std::vector<double>(dim, kVarianceFloor));

    for (int c = 0; c < class_count; ++c) {
        if (counts[c] == 0) continue;
        model.log_priors[c] =
            std::log(static_cast<double>(counts[c]) / static_cast<double>(samples.size()));
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (labels[i] == c)
                for (std::size_t d = 0; d < dim; ++d) model.means[c][d] += samples[i][d];
        for (std::size_t d = 0; d < dim; ++d) model.means[c][d] /= counts[c];
        std::vector<double> var(dim, 0.0);
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (labels[i] == c)
                for (std::size_t d = 0; d < dim; ++d) {
                    double diff = samples[i][d] - model.means[c][d];
                    var[d] += diff * diff / counts[c];
                }
        for (std::size_t d = 0; d < dim; ++d)
            model.variances[c][d] = std::max(var[d], kVarianceFloor);
    }
    return model;
}

// all split candidates for one feature: midpoints of consecutive distinct sorted values
std::vector<double> midpoint_thresholds(std::vector<double> column) {
    std::sort(column.begin(), column.end());
    column.erase(std::unique(column.begin(), column.end()), column.end());
    std::vector<double> thresholds;
    for (std::size_t i = 0; i + 1 < column.size(); ++i)
        thresholds.push_back(0.5 * (column[i] + column[i + 1]));
    return thresholds;
}

StumpModel train_stump(const std::vector<std::vector<double>>& samples,
                       const std::vector<int>& labels, int class_count) {
    const std::size_t dim = samples.front().size();
    const auto totals = class_counts(labels, class_count);
    const int overall_majority = majority_class(totals);

    StumpModel best;
    best.feature = 0;
    best.threshold = -std::numeric_limits<double>::infinity();
    best.class_below = overall_majority;
    best.class_above = overall_majority;
    int best_correct = totals[overall_majority];

    std::vector<double> column(samples.size());
    for (std::size_t f = 0; f < dim; ++f) {
        for (std::size_t i = 0; i < samples.size(); ++i) column[i] = samples[i][f];
        for (double t : midpoint_thresholds(column)) {
            std::vector<int> below(class_count, 0), above(class_count, 0);
            for (std::size_t i = 0; i < samples.size(); ++i)
                (samples[i][f] <= t ? below : above)[labels[i]]++;
            int cb = majority_class(below);
            int ca = majority_class(above);
            int correct = below[cb] + above[ca];
            if (correct > best_correct) {  // strict: lowest feature, lowest threshold win ties
                best_correct = correct;
                best = StumpModel{f, t, cb, ca};
            }
        }
    }
    return best;
}

double entropy(const std::vector<int>& counts, int total) {
    if (total == 0) return 0.0;
    double h = 0.0;
    for (int c : counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

constexpr int kMaxTreeDepth = 4;

int grow_tree(TreeModel& model, const std::vector<std::vector<double>>& samples,
              const std::vector<int>& labels, int class_count, const std::vector<int>& members,
              int depth) {
    std::vector<int> counts(class_count, 0);
    for (int i : members) ++counts[labels[i]];
    const int majority = majority_class(counts);

    const int node_index = static_cast<int>(model.nodes.size());
    model.nodes.push_back(TreeNode{true, majority, 0, 0.0, -1, -1});

    const bool pure = counts[majority] == static_cast<int>(members.size());
    if (pure || depth >= kMaxTreeDepth || members.size() < 2) return node_index;

    const double node_entropy = entropy(counts, static_cast<int>(members.size()));
    const std::size_t dim = samples.front().size();

    double best_gain = 0.0;
    std::size_t best_feature = 0;
    double best_threshold = 0.0;
    bool found = false;

    std::vector<double> column(members.size());
    for (std::size_t f = 0; f < dim; ++f) {
        for (std::size_t i = 0; i < members.size(); ++i) column[i] = samples[members[i]][f];
        for (double t : midpoint_thresholds(column)) {
            std::vector<int> left(class_count, 0), right(class_count, 0);
            int n_left = 0;
            for (int i : members) {
                if (samples[i][f] <= t) {
                    ++left[labels[i]];
                    ++n_left;
                } else {
                    ++right[labels[i]];
                }
            }
            int n_right = static_cast<int>(members.size()) - n_left;
            double gain = node_entropy -
                          (n_left * entropy(left, n_left) + n_right * entropy(right, n_right)) /
                              static_cast<double>(members.size());
            if (gain > best_gain + 1e-12) {  // strict improvement: earliest feature/threshold wins
                best_gain = gain;
                best_feature = f;
                best_threshold = t;
                found = true;
            }
        }
    }
    if (!found) return node_index;

    std::vector<int> left_members, right_members;
    for (int i : members)
        (samples[i][best_feature] <= best_threshold ? left_members : right_members).push_back(i);

    model.nodes[node_index].leaf = false;
    model.nodes[node_index].feature = best_feature;
    model.nodes[node_index].threshold = best_threshold;
    const int left = grow_tree(model, samples, labels, class_count, left_members, depth + 1);
    model.nodes[node_index].left = left;
    const int right = grow_tree(model, samples, labels, class_count, right_members, depth + 1);
    model.nodes[node_index].right = right;
    return node_index;
}

}  // namespace

ClassifierModel train(ClassifierKind kind, const std::vector<std::vector<double>>& samples,
                      const std::vector<int>& labels, int class_count) {
    check_training(samples, labels, class_count);

    ClassifierModel model;
    model.kind = kind;
    model.feature_count = samples.front().size();
    model.class_count = class_count;

    switch (kind) {
        case ClassifierKind::NaiveBayes:
            model.impl = train_nb(samples, labels, class_count);
            break;
        case ClassifierKind::DecisionTable:
            model.impl = train_stump(samples, labels, class_count);
            break;
        case ClassifierKind::Tree: {
            TreeModel tree;
            std::vector<int> members(samples.size());
            for (std::size_t i = 0; i < samples.size(); ++i) members[i] = static_cast<int>(i);
            grow_tree(tree, samples, labels, class_count, members, 0);
            model.impl = std::move(tree);
            break;
        }
        case ClassifierKind::NearestNeighbor:
            model.impl = NearestNeighborModel{samples, labels};
            break;
    }
    return model;
}

ClassifierModel train(ClassifierKind kind, const FeatureSubsetView& view) {
    std::vector<std::vector<double>> samples;
    std::vector<int> labels;
    std::unordered_map<std::string, int> class_index;
    int classes = 0;
    for (std::size_t s = 0; s < view.sample_count(); ++s) {
        samples.push_back(view.sample_vector(s));
        auto [it, inserted] = class_index.try_emplace(view.parent().labels[s], classes);
        if (inserted) ++classes;
        labels.push_back(it->second);
    }
    return train(kind, samples, labels, classes);
}

int predict(const ClassifierModel& model, std::span<const double> sample) {
    if (sample.size() != model.feature_count)
        throw DataError("predict: sample has " + std::to_string(sample.size()) +
                        " features, model expects " + std::to_string(model.feature_count));

    if (const auto* nb = std::get_if<GaussianNbModel>(&model.impl)) {
        int best = 0;
        double best_score = -std::numeric_limits<double>::infinity();
        for (int c = 0; c < model.class_count; ++c) {
            double score = nb->log_priors[c];
            if (!std::isinf(score)) {
                for (std::size_t d = 0; d < sample.size(); ++d) {
                    double var = nb->variances[c][d];
                    double diff = sample[d] - nb->means[c][d];
                    score += -0.5 * std::log(2.0 * std::numbers::pi * var) - diff * diff / (2.0 * var);
                }
            }
            if (score > best_score) {  // strict: lowest class wins ties
                best_score = score;
                best = c;
            }
        }
        return best;
    }
    if (const auto* stump = std::get_if<StumpModel>(&model.impl)) {
        return sample[stump->feature] <= stump->threshold ? stump->class_below : stump->class_above;
    }
    if (const auto* tree = std::get_if<TreeModel>(&model.impl)) {
        int node = 0;
        while (!tree->nodes[node].leaf) {
            const TreeNode& t = tree->nodes[node];
            node = sample[t.feature] <= t.threshold ? t.left : t.right;
        }
        return tree->nodes[node].cls;
    }
    const auto& nn = std::get<NearestNeighborModel>(model.impl);
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nn.points.size(); ++i) {
        double d2 = 0.0;
        for (std::size_t d = 0; d < sample.size(); ++d) {
            double diff = sample[d] - nn.points[i][d];
            d2 += diff * diff;
        }
        if (d2 < best_d2) {  // strict: earliest training sample wins ties
            best_d2 = d2;
            best = i;
        }
    }
    return nn.labels[best];
}

std::string format_accuracy(double percent) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", percent);
    return buf;
}

namespace {

double confusion_accuracy(const std::vector<std::vector<int>>& confusion) {
    long long correct = 0, total = 0;
    for (std::size_t i = 0; i < confusion.size(); ++i)
        for (std::size_t j = 0; j < confusion[i].size(); ++j) {
            total += confusion[i][j];
            if (i == j) correct += confusion[i][j];
        }
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

// class indices in first-appearance order over the dataset's label strings
std::vector<int> dataset_class_indices(const ExpressionDataset& ds,
                                       std::vector<std::string>& class_names) {
    std::unordered_map<std::string, int> index;
    std::vector<int> labels;
    for (const auto& label : ds.labels) {
        auto [it, inserted] = index.try_emplace(label, static_cast<int>(class_names.size()));
        if (inserted) class_names.push_back(label);
        labels.push_back(it->second);
    }
    return labels;
}

}  // namespace

EvalReport evaluate_loocv(ClassifierKind kind, const FeatureSubsetView& view) {
    const std::size_t n = view.sample_count();
    if (n < 2) throw DataError("loocv: need at least 2 samples");

    std::vector<std::string> class_names;
    const std::vector<int> labels = dataset_class_indices(view.parent(), class_names);
    const int classes = static_cast<int>(class_names.size());

    std::vector<std::vector<double>> all(n);
    for (std::size_t s = 0; s < n; ++s) all[s] = view.sample_vector(s);

    EvalReport report;
    report.kind = kind;
    report.confusion.assign(classes, std::vector<int>(classes, 0));
    for (std::size_t held = 0; held < n; ++held) {
        std::vector<std::vector<double>> train_samples;
        std::vector<int> train_labels;
        train_samples.reserve(n - 1);
        for (std::size_t s = 0; s < n; ++s) {
            if (s == held) continue;
            train_samples.push_back(all[s]);
            train_labels.push_back(labels[s]);
        }
        ClassifierModel model = train(kind, train_samples, train_labels, classes);
        int predicted = predict(model, all[held]);
        ++report.confusion[labels[held]][predicted];
    }
    report.accuracy_percent = confusion_accuracy(report.confusion);
    report.split_description = "loocv(" + std::to_string(n) + ")";
    for (std::size_t f = 0; f < view.feature_count(); ++f)
        report.feature_ids.push_back(view.feature_id(f));
    report.class_names = class_names;
    return report;
}

EvalReport evaluate_split(ClassifierKind kind, const FeatureSubsetView& train_view,
                          const FeatureSubsetView& test_view) {
    if (train_view.feature_count() != test_view.feature_count())
        throw DataError("evaluate: train/test feature count mismatch");

    std::vector<std::string> class_names;
    const std::vector<int> train_labels = dataset_class_indices(train_view.parent(), class_names);
    const int classes = static_cast<int>(class_names.size());

    std::vector<std::vector<double>> train_samples;
    for (std::size_t s = 0; s < train_view.sample_count(); ++s)
        train_samples.push_back(train_view.sample_vector(s));
    ClassifierModel model = train(kind, train_samples, train_labels, classes);

    EvalReport report;
    report.kind = kind;
    report.confusion.assign(classes, std::vector<int>(classes, 0));
    for (std::size_t s = 0; s < test_view.sample_count(); ++s) {
        const std::string& label = test_view.parent().labels[s];
        auto it = std::find(class_names.begin(), class_names.end(), label);
        if (it == class_names.end())
            throw DataError("evaluate: test label '" + label + "' never seen in training data");
        int truth = static_cast<int>(it - class_names.begin());
        int predicted = predict(model, test_view.sample_vector(s));
        ++report.confusion[truth][predicted];
    }
    report.accuracy_percent = confusion_accuracy(report.confusion);
    report.split_description = "train/test " + std::to_string(train_view.sample_count()) + "/" +
                               std::to_string(test_view.sample_count());
    for (std::size_t f = 0; f < train_view.feature_count(); ++f)
        report.feature_ids.push_back(train_view.feature_id(f));
    report.class_names = class_names;
    return report;
}

ThresholdRule induce_threshold_rule(const ExpressionDataset& ds, std::size_t feature_index) {
    if (feature_index >= ds.feature_count())
        throw DataError("threshold rule: feature index out of range");

    std::vector<std::string> class_names;
    const std::vector<int> labels = dataset_class_indices(ds, class_names);
    if (class_names.size() != 2)
        throw DataError("threshold rule: need exactly two classes, have " +
                        std::to_string(class_names.size()));

    const std::vector<double>& column = ds.values[feature_index];
    const std::vector<double> thresholds = midpoint_thresholds(column);
    if (thresholds.empty())
        throw DataError("threshold rule: feature '" + ds.feature_ids[feature_index] +
                        "' is constant, no candidate threshold");

    const int n = static_cast<int>(column.size());
    int best_correct = -1;
    double best_threshold = 0.0;
    bool best_class0_below = true;

    for (double t : thresholds) {  // ascending: lowest threshold wins ties
        int class0_below = 0, class1_above = 0;
        for (int i = 0; i < n; ++i) {
            if (column[i] <= t && labels[i] == 0) ++class0_below;
            if (column[i] > t && labels[i] == 1) ++class1_above;
        }
        int forward = class0_below + class1_above;  // class 0 below, class 1 above
        int backward = n - forward;
        int correct = std::max(forward, backward);
        if (correct > best_correct) {
            best_correct = correct;
            best_threshold = t;
            best_class0_below = forward >= backward;  // tie keeps the lower class below
        }
    }

    ThresholdRule rule;
    rule.feature_id = ds.feature_ids[feature_index];
    rule.threshold = best_threshold;
    rule.class_below = best_class0_below ? 0 : 1;
    rule.class_above = best_class0_below ? 1 : 0;
    rule.class_names = class_names;
    return rule;
}

}  // namespace fcmqr
