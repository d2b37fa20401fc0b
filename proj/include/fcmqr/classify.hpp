#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fcmqr/dataset.hpp"

namespace fcmqr {

// Built-in evaluation classifiers. DecisionTable here is the single-feature
// stump surrogate; Tree is a depth-limited information-gain tree;
// NearestNeighbor is Euclidean 1-NN.
enum class ClassifierKind { NaiveBayes, DecisionTable, Tree, NearestNeighbor };

const char* classifier_name(ClassifierKind kind);
ClassifierKind classifier_from_name(const std::string& name);

struct GaussianNbModel {
    std::vector<double> log_priors;            // [class]
    std::vector<std::vector<double>> means;     // [class][feature]
    std::vector<std::vector<double>> variances; // [class][feature], floored at 1e-9
};

struct StumpModel {
    std::size_t feature = 0;
    double threshold = 0.0;  // x <= threshold goes below
    int class_below = 0;
    int class_above = 0;
};

struct TreeNode {
    bool leaf = true;
    int cls = 0;             // majority class at leaves
    std::size_t feature = 0;
    double threshold = 0.0;  // x <= threshold goes left
    int left = -1;
    int right = -1;
};

struct TreeModel {
    std::vector<TreeNode> nodes;  // node 0 is the root
};

struct NearestNeighborModel {
    std::vector<std::vector<double>> points;  // [sample][feature]
    std::vector<int> labels;
};

struct ClassifierModel {
    ClassifierKind kind = ClassifierKind::NaiveBayes;
    std::size_t feature_count = 0;
    int class_count = 0;
    std::variant<GaussianNbModel, StumpModel, TreeModel, NearestNeighborModel> impl;
};

// Trains on a sample-major matrix. class_count covers every label value;
// single-class data yields a constant predictor. Throws DataError on an
// empty training set.
ClassifierModel train(ClassifierKind kind, const std::vector<std::vector<double>>& samples,
                      const std::vector<int>& labels, int class_count);

// Trains on all samples of a feature subset view; class indices follow first
// appearance of the dataset's label strings.
ClassifierModel train(ClassifierKind kind, const FeatureSubsetView& view);

// Deterministic prediction; ties resolve to the lowest class index
// (1-NN distance ties resolve to the earliest training sample).
int predict(const ClassifierModel& model, std::span<const double> sample);

struct EvalReport {
    ClassifierKind kind = ClassifierKind::NaiveBayes;
    double accuracy_percent = 0.0;            // 100 * trace(confusion) / total
    std::vector<std::vector<int>> confusion;  // [true][predicted]
    std::string split_description;
    std::vector<std::string> feature_ids;
    std::vector<std::string> class_names;
};

// Accuracy formatted with four decimals, e.g. "97.0588".
std::string format_accuracy(double percent);

EvalReport evaluate_loocv(ClassifierKind kind, const FeatureSubsetView& view);

// Trains on every sample of `train` and scores `test`. Test labels are mapped
// through the training dataset's class order; an unseen test label is a data
// error.
EvalReport evaluate_split(ClassifierKind kind, const FeatureSubsetView& train_view,
                          const FeatureSubsetView& test_view);

// Single-gene decision rule: "if value > threshold then class_above".
struct ThresholdRule {
    std::string feature_id;
    double threshold = 0.0;
    int class_above = 0;
    int class_below = 0;  // <= threshold
    std::vector<std::string> class_names;
};

// Picks the accuracy-maximizing threshold among midpoints of consecutive
// distinct sorted values (lowest threshold on ties). Requires exactly two
// classes and a non-constant feature.
ThresholdRule induce_threshold_rule(const ExpressionDataset& ds, std::size_t feature_index);

}  // namespace fcmqr
