#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace fcmqr {

enum class Orientation { RowsAreFeatures, RowsAreSamples };

// Continuous feature-by-sample expression matrix with per-sample class labels.
// Canonical orientation is feature x sample: clustering treats each feature as
// a point in sample-space, while decision tables transpose to sample rows.
// Immutable after construction; concurrent readers are safe.
struct ExpressionDataset {
    std::vector<std::string> feature_ids;
    std::vector<std::string> sample_ids;
    std::vector<std::vector<double>> values;  // [feature][sample]
    std::vector<std::string> labels;          // per sample, case-sensitive

    std::size_t feature_count() const { return feature_ids.size(); }
    std::size_t sample_count() const { return sample_ids.size(); }
};

// Validates dimensions, id uniqueness and value finiteness; throws DataError.
ExpressionDataset make_dataset(std::vector<std::string> feature_ids,
                               std::vector<std::string> sample_ids,
                               std::vector<std::vector<double>> values,
                               std::vector<std::string> labels);

ExpressionDataset load_csv(const std::string& path, Orientation orientation,
                           const std::string& label_id, char delimiter = ',');

// Feature-per-row CSV with the label row first; values printed in shortest
// exact round-trip form.
void write_csv(std::ostream& out, const ExpressionDataset& ds, const std::string& label_id,
               char delimiter = ',');
void write_csv_file(const std::string& path, const ExpressionDataset& ds,
                    const std::string& label_id, char delimiter = ',');

// Non-owning view of a feature subset over all samples. The parent dataset
// must outlive the view.
class FeatureSubsetView {
public:
    FeatureSubsetView(const ExpressionDataset& parent, std::vector<std::size_t> indices);

    const ExpressionDataset& parent() const { return *parent_; }
    const std::vector<std::size_t>& selected() const { return selected_; }
    std::size_t feature_count() const { return selected_.size(); }
    std::size_t sample_count() const { return parent_->sample_count(); }

    const std::string& feature_id(std::size_t f) const { return parent_->feature_ids[selected_[f]]; }
    double value(std::size_t f, std::size_t s) const { return parent_->values[selected_[f]][s]; }
    const std::vector<double>& feature_values(std::size_t f) const { return parent_->values[selected_[f]]; }

    // one sample across the selected features, in view order
    std::vector<double> sample_vector(std::size_t s) const;

private:
    const ExpressionDataset* parent_;
    std::vector<std::size_t> selected_;
};

FeatureSubsetView subset_features(const ExpressionDataset& ds, std::vector<std::size_t> indices);

// Discretized sample-by-attribute table with a decision column: objects are
// samples, attributes are features, cells are small non-negative integer
// labels forming a contiguous 0..b-1 range per attribute.
struct DecisionTable {
    std::vector<std::string> object_ids;     // samples
    std::vector<std::string> attribute_ids;  // features
    std::vector<std::vector<int>> cells;     // [object][attribute]
    std::vector<int> decision;               // per object
    std::vector<std::string> class_names;    // decision index -> original label

    std::size_t object_count() const { return object_ids.size(); }
    std::size_t attribute_count() const { return attribute_ids.size(); }
};

// Assembles a table from per-feature discrete label vectors (one per selected
// feature, each of sample length). Decision indices follow first appearance
// of the label strings. Sample order is preserved.
DecisionTable build_decision_table(const FeatureSubsetView& view,
                                   const std::vector<std::vector<int>>& labels_per_feature);

// CSV with a header row (object id column, attribute ids, decision column
// named label_id). Integer attribute values are remapped to dense 0..b-1 in
// ascending numeric order, which leaves every indiscernibility partition
// unchanged.
DecisionTable load_decision_table(const std::string& path, const std::string& label_id,
                                  char delimiter = ',');
void write_decision_table(std::ostream& out, const DecisionTable& table,
                          const std::string& label_id, char delimiter = ',');

}  // namespace fcmqr
