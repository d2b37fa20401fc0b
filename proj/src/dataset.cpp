#include "fcmqr/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fcmqr/errors.hpp"

namespace fcmqr {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_row(const std::string& line, char delimiter) {
    std::vector<std::string> cells;
    std::string cell;
    for (char ch : line) {
        if (ch == delimiter) {
            cells.push_back(trim(cell));
            cell.clear();
        } else if (ch != '\r') {
            cell.push_back(ch);
        }
    }
    cells.push_back(trim(cell));
    return cells;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path, char delimiter) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        rows.push_back(split_row(line, delimiter));
    }
    if (rows.empty()) throw DataError("empty file: " + path);
    return rows;
}

double parse_cell(const std::string& token, std::size_t row, std::size_t col,
                  const std::string& row_id, const std::string& col_id) {
    auto where = [&] {
        std::ostringstream os;
        os << "row " << row << ", column " << col << " ('" << row_id << "' x '" << col_id << "')";
        return os.str();
    };
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw DataError("non-numeric cell at " + where() + ": '" + token + "'");
    if (!std::isfinite(v))
        throw DataError("non-finite value at " + where() + ": '" + token + "'");
    return v;
}

void check_unique(const std::vector<std::string>& ids, const char* what) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!seen.insert(ids[i]).second)
            throw DataError(std::string("duplicate ") + what + " id '" + ids[i] + "' at position " +
                            std::to_string(i));
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

ExpressionDataset make_dataset(std::vector<std::string> feature_ids,
                               std::vector<std::string> sample_ids,
                               std::vector<std::vector<double>> values,
                               std::vector<std::string> labels) {
    if (values.size() != feature_ids.size())
        throw DataError("value matrix has " + std::to_string(values.size()) + " rows, expected " +
                        std::to_string(feature_ids.size()) + " features");
    for (std::size_t f = 0; f < values.size(); ++f) {
        if (values[f].size() != sample_ids.size())
            throw DataError("feature '" + feature_ids[f] + "' has " + std::to_string(values[f].size()) +
                            " values, expected " + std::to_string(sample_ids.size()));
        for (std::size_t s = 0; s < values[f].size(); ++s)
            if (!std::isfinite(values[f][s]))
                throw DataError("non-finite value for feature '" + feature_ids[f] + "', sample '" +
                                sample_ids[s] + "'");
    }
    if (labels.size() != sample_ids.size())
        throw DataError("label count " + std::to_string(labels.size()) + " does not match sample count " +
                        std::to_string(sample_ids.size()));
    check_unique(feature_ids, "feature");
    check_unique(sample_ids, "sample");
    return ExpressionDataset{std::move(feature_ids), std::move(sample_ids), std::move(values),
                             std::move(labels)};
}

ExpressionDataset load_csv(const std::string& path, Orientation orientation,
                           const std::string& label_id, char delimiter) {
    auto rows = read_rows(path, delimiter);
    const auto& header = rows.front();
    if (header.size() < 2) throw DataError("header row needs at least one data column: " + path);

    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != header.size())
            throw DataError("dimension mismatch at row " + std::to_string(r) + " ('" + rows[r].front() +
                            "'): " + std::to_string(rows[r].size()) + " cells, header has " +
                            std::to_string(header.size()));
    }

    std::vector<std::string> feature_ids, sample_ids, labels;
    std::vector<std::vector<double>> values;

    if (orientation == Orientation::RowsAreFeatures) {
        sample_ids.assign(header.begin() + 1, header.end());
        std::size_t label_row = 0;
        for (std::size_t r = 1; r < rows.size(); ++r)
            if (rows[r].front() == label_id) { label_row = r; break; }
        if (label_row == 0) throw DataError("missing label row '" + label_id + "' in " + path);
        labels.assign(rows[label_row].begin() + 1, rows[label_row].end());
        for (std::size_t r = 1; r < rows.size(); ++r) {
            if (r == label_row) continue;
            feature_ids.push_back(rows[r].front());
            std::vector<double> feature(header.size() - 1);
            for (std::size_t c = 1; c < rows[r].size(); ++c)
                feature[c - 1] = parse_cell(rows[r][c], r, c, rows[r].front(), header[c]);
            values.push_back(std::move(feature));
        }
    } else {
        std::size_t label_col = 0;
        for (std::size_t c = 1; c < header.size(); ++c)
            if (header[c] == label_id) { label_col = c; break; }
        if (label_col == 0) throw DataError("missing label column '" + label_id + "' in " + path);
        for (std::size_t c = 1; c < header.size(); ++c)
            if (c != label_col) feature_ids.push_back(header[c]);
        values.assign(feature_ids.size(), {});
        for (auto& v : values) v.resize(rows.size() - 1);
        for (std::size_t r = 1; r < rows.size(); ++r) {
            sample_ids.push_back(rows[r].front());
            labels.push_back(rows[r][label_col]);
            std::size_t f = 0;
            for (std::size_t c = 1; c < rows[r].size(); ++c) {
                if (c == label_col) continue;
                values[f][r - 1] = parse_cell(rows[r][c], r, c, rows[r].front(), header[c]);
                ++f;
            }
        }
    }
    return make_dataset(std::move(feature_ids), std::move(sample_ids), std::move(values),
                        std::move(labels));
}

void write_csv(std::ostream& out, const ExpressionDataset& ds, const std::string& label_id,
               char delimiter) {
    out << "id";
    for (const auto& s : ds.sample_ids) out << delimiter << s;
    out << '\n' << label_id;
    for (const auto& l : ds.labels) out << delimiter << l;
    out << '\n';
    for (std::size_t f = 0; f < ds.feature_count(); ++f) {
        out << ds.feature_ids[f];
        for (double v : ds.values[f]) out << delimiter << format_double(v);
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const ExpressionDataset& ds,
                    const std::string& label_id, char delimiter) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    write_csv(out, ds, label_id, delimiter);
}

FeatureSubsetView::FeatureSubsetView(const ExpressionDataset& parent,
                                     std::vector<std::size_t> indices)
    : parent_(&parent), selected_(std::move(indices)) {
    std::unordered_set<std::size_t> seen;
    for (std::size_t idx : selected_) {
        if (idx >= parent.feature_count())
            throw DataError("feature index " + std::to_string(idx) + " out of range (have " +
                            std::to_string(parent.feature_count()) + " features)");
        if (!seen.insert(idx).second)
            throw DataError("duplicate feature index " + std::to_string(idx) + " in subset");
    }
}

std::vector<double> FeatureSubsetView::sample_vector(std::size_t s) const {
    std::vector<double> v(selected_.size());
    for (std::size_t f = 0; f < selected_.size(); ++f) v[f] = parent_->values[selected_[f]][s];
    return v;
}

FeatureSubsetView subset_features(const ExpressionDataset& ds, std::vector<std::size_t> indices) {
    return FeatureSubsetView(ds, std::move(indices));
}

DecisionTable build_decision_table(const FeatureSubsetView& view,
                                   const std::vector<std::vector<int>>& labels_per_feature) {
    if (labels_per_feature.size() != view.feature_count())
        throw DataError("expected " + std::to_string(view.feature_count()) +
                        " discrete label vectors, got " + std::to_string(labels_per_feature.size()));
    const std::size_t n = view.sample_count();
    for (std::size_t f = 0; f < labels_per_feature.size(); ++f) {
        if (labels_per_feature[f].size() != n)
            throw DataError("discrete labels for feature '" + view.feature_id(f) + "' have length " +
                            std::to_string(labels_per_feature[f].size()) + ", expected " +
                            std::to_string(n));
    }

    DecisionTable table;
    table.object_ids = view.parent().sample_ids;
    for (std::size_t f = 0; f < view.feature_count(); ++f)
        table.attribute_ids.push_back(view.feature_id(f));

    table.cells.assign(n, std::vector<int>(view.feature_count()));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t f = 0; f < view.feature_count(); ++f)
            table.cells[s][f] = labels_per_feature[f][s];

    // decision indices in first-appearance order of the label strings
    std::unordered_map<std::string, int> class_index;
    table.decision.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        const std::string& label = view.parent().labels[s];
        auto it = class_index.find(label);
        if (it == class_index.end()) {
            it = class_index.emplace(label, static_cast<int>(table.class_names.size())).first;
            table.class_names.push_back(label);
        }
        table.decision[s] = it->second;
    }
    return table;
}

DecisionTable load_decision_table(const std::string& path, const std::string& label_id,
                                  char delimiter) {
    auto rows = read_rows(path, delimiter);
    const auto& header = rows.front();
    if (header.size() < 2) throw DataError("decision table needs at least the decision column: " + path);

    std::size_t label_col = 0;
    for (std::size_t c = 1; c < header.size(); ++c)
        if (header[c] == label_id) { label_col = c; break; }
    if (label_col == 0) throw DataError("missing decision column '" + label_id + "' in " + path);

    DecisionTable table;
    for (std::size_t c = 1; c < header.size(); ++c)
        if (c != label_col) table.attribute_ids.push_back(header[c]);

    std::unordered_map<std::string, int> class_index;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != header.size())
            throw DataError("dimension mismatch at row " + std::to_string(r) + " ('" + rows[r].front() +
                            "') in " + path);
        table.object_ids.push_back(rows[r].front());
        std::vector<int> cells;
        for (std::size_t c = 1; c < rows[r].size(); ++c) {
            if (c == label_col) continue;
            int v = 0;
            const std::string& tok = rows[r][c];
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
                throw DataError("bad discrete cell at row " + std::to_string(r) + ", column " +
                                std::to_string(c) + ": '" + tok + "'");
            cells.push_back(v);
        }
        table.cells.push_back(std::move(cells));
        const std::string& label = rows[r][label_col];
        auto it = class_index.find(label);
        if (it == class_index.end()) {
            it = class_index.emplace(label, static_cast<int>(table.class_names.size())).first;
            table.class_names.push_back(label);
        }
        table.decision.push_back(it->second);
    }
    check_unique(table.object_ids, "object");

    // densify each attribute's labels to 0..b-1 in ascending numeric order
    for (std::size_t a = 0; a < table.attribute_count(); ++a) {
        std::map<int, int> remap;
        for (const auto& row : table.cells) remap[row[a]] = 0;
        int next = 0;
        for (auto& [value, dense] : remap) dense = next++;
        for (auto& row : table.cells) row[a] = remap[row[a]];
    }
    return table;
}

void write_decision_table(std::ostream& out, const DecisionTable& table,
                          const std::string& label_id, char delimiter) {
    out << "id";
    for (const auto& a : table.attribute_ids) out << delimiter << a;
    out << delimiter << label_id << '\n';
    for (std::size_t o = 0; o < table.object_count(); ++o) {
        out << table.object_ids[o];
        for (int v : table.cells[o]) out << delimiter << v;
        out << delimiter << table.class_names[table.decision[o]] << '\n';
    }
}

}  // namespace fcmqr
