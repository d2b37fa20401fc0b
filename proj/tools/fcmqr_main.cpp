#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcmqr/acv.hpp"
#include "fcmqr/classify.hpp"
#include "fcmqr/dataset.hpp"
#include "fcmqr/discretize.hpp"
#include "fcmqr/errors.hpp"
#include "fcmqr/fcm.hpp"
#include "fcmqr/oracles.hpp"
#include "fcmqr/pipeline.hpp"
#include "fcmqr/rng.hpp"
#include "fcmqr/roughset.hpp"
#include "fcmqr/synthetic.hpp"
#include "fcmqr/version.hpp"

using nlohmann::json;

namespace {

// ============================================================
// logging (FCMQR_LOG=debug|info|warn|error, default warn)
// ============================================================

int log_level() {
    static int level = [] {
        const char* env = std::getenv("FCMQR_LOG");
        std::string v = env ? env : "warn";
        if (v == "debug") return 0;
        if (v == "info") return 1;
        if (v == "warn") return 2;
        return 3;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() <= 1) std::cerr << "[info] " << msg << "\n";
}

// ============================================================
// shared option bundles
// ============================================================

struct CommonOptions {
    std::string out_path;
    std::string format = "json";
    bool no_timestamp = false;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
};

struct DataOptions {
    std::string data_path;
    std::string label = "class";
    std::string orientation = "rows-are-features";
    std::string delimiter = ",";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_seed = true) {
    cmd->add_option("--out", opts.out_path, "Write the report to this path instead of stdout");
    cmd->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--no-timestamp", opts.no_timestamp,
                  "Omit timestamps so identical runs emit identical bytes");
    if (with_seed) cmd->add_option("--seed", opts.seed, "Base RNG seed");
    cmd->add_option("--threads", opts.threads, "Worker pool cap")->check(CLI::PositiveNumber);
}

void add_data(CLI::App* cmd, DataOptions& opts) {
    cmd->add_option("--data", opts.data_path, "Expression CSV")->required();
    cmd->add_option("--label", opts.label, "Label row/column id (default: class)");
    cmd->add_option("--orientation", opts.orientation, "CSV orientation")
        ->check(CLI::IsMember({"rows-are-features", "rows-are-samples"}));
    cmd->add_option("--delimiter", opts.delimiter, "Cell delimiter (default: ,)");
}

fcmqr::Orientation parse_orientation(const std::string& s) {
    return s == "rows-are-samples" ? fcmqr::Orientation::RowsAreSamples
                                   : fcmqr::Orientation::RowsAreFeatures;
}

char parse_delimiter(const std::string& s) {
    if (s.size() != 1) throw fcmqr::DataError("delimiter must be a single character");
    return s[0];
}

fcmqr::ExpressionDataset load_dataset(const DataOptions& opts) {
    log_info("loading " + opts.data_path);
    return fcmqr::load_csv(opts.data_path, parse_orientation(opts.orientation), opts.label,
                           parse_delimiter(opts.delimiter));
}

// ============================================================
// manifest
// ============================================================

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fcmqr::DataError("cannot open file for digest: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string bytes = buffer.str();
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fcmqr::rng::fnv1a64(bytes.data(), bytes.size())));
    return hex;
}

std::string iso_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

json make_manifest(const std::string& command, const CommonOptions& common,
                   const std::vector<std::string>& input_paths, const json& config) {
    json manifest;
    manifest["tool"] = "fcmqr";
    manifest["version"] = fcmqr::kVersion;
    manifest["command"] = command;
    manifest["config"] = config;
    manifest["inputs"] = json::array();
    for (const auto& path : input_paths)
        manifest["inputs"].push_back({{"path", path}, {"fnv1a64", file_digest(path)}});
    if (!common.no_timestamp) manifest["timestamp"] = iso_timestamp();
    if (!common.out_path.empty()) manifest["outputs"] = json::array({common.out_path});
    return manifest;
}

void emit(const CommonOptions& common, const std::string& text) {
    if (common.out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(common.out_path);
        if (!out) throw fcmqr::DataError("cannot write output file: " + common.out_path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }
}

void emit_json(const CommonOptions& common, json report) {
    emit(common, report.dump(2));
}

// ============================================================
// small loaders / converters
// ============================================================

std::vector<std::vector<double>> load_matrix(const std::string& path, char delimiter) {
    std::ifstream in(path);
    if (!in) throw fcmqr::DataError("cannot open matrix file: " + path);
    std::vector<std::vector<double>> matrix;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::vector<double> values;
        std::stringstream ss(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(ss, cell, delimiter)) {
            ++col;
            try {
                std::size_t pos = 0;
                double v = std::stod(cell, &pos);
                while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
                if (pos != cell.size()) throw std::invalid_argument(cell);
                values.push_back(v);
            } catch (const std::exception&) {
                throw fcmqr::DataError("non-numeric matrix cell at row " + std::to_string(row) +
                                       ", column " + std::to_string(col) + ": '" + cell + "'");
            }
        }
        matrix.push_back(std::move(values));
    }
    if (matrix.empty()) throw fcmqr::DataError("empty matrix file: " + path);
    for (const auto& r : matrix)
        if (r.size() != matrix.front().size())
            throw fcmqr::DataError("ragged matrix in " + path);
    return matrix;
}

std::vector<std::size_t> parse_index_list(const std::string& csv) {
    std::vector<std::size_t> indices;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        indices.push_back(std::stoull(tok));
    }
    return indices;
}

std::vector<double> parse_value_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        values.push_back(std::stod(tok));
    }
    return values;
}

std::vector<std::size_t> resolve_feature_ids(const fcmqr::ExpressionDataset& ds,
                                             const std::string& csv) {
    std::vector<std::size_t> indices;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto it = std::find(ds.feature_ids.begin(), ds.feature_ids.end(), tok);
        if (it == ds.feature_ids.end())
            throw fcmqr::DataError("unknown feature id: '" + tok + "'");
        indices.push_back(static_cast<std::size_t>(it - ds.feature_ids.begin()));
    }
    if (indices.empty()) throw fcmqr::DataError("no feature ids given");
    return indices;
}

json acv_to_json(const fcmqr::AcvReport& report) {
    return json{{"row_term", report.row_term}, {"col_term", report.col_term},
                {"acv", report.acv},           {"rows", report.rows},
                {"cols", report.cols},         {"degenerate_pairs", report.degenerate_pairs}};
}

json eval_to_json(const fcmqr::EvalReport& report) {
    return json{{"classifier", fcmqr::classifier_name(report.kind)},
                {"accuracy", report.accuracy_percent},
                {"accuracy_display", fcmqr::format_accuracy(report.accuracy_percent)},
                {"confusion", report.confusion},
                {"split", report.split_description},
                {"features", report.feature_ids},
                {"classes", report.class_names}};
}

json pipeline_to_json(const fcmqr::PipelineReport& report, const fcmqr::ExpressionDataset& ds) {
    auto ids = [&](const std::vector<std::size_t>& genes) {
        std::vector<std::string> out;
        for (std::size_t g : genes) out.push_back(ds.feature_ids[g]);
        return out;
    };
    json k_runs = json::array();
    for (const auto& k_run : report.k_runs) {
        json clusters = json::array();
        for (const auto& record : k_run.clusters) {
            json c{{"i", record.cluster_index},
                   {"size", record.member_genes.size()},
                   {"reduct", ids(record.reduct_genes)},
                   {"acv", record.acv_score},
                   {"significant", record.significant},
                   {"reached_full", record.reduct.reached_full}};
            if (!record.note.empty()) c["note"] = record.note;
            if (record.acv_report) c["acv_report"] = acv_to_json(*record.acv_report);
            clusters.push_back(std::move(c));
        }
        k_runs.push_back(json{{"k", k_run.k}, {"clusters", clusters}, {"pool", ids(k_run.pool)}});
    }
    return json{{"k_runs", k_runs},
                {"intersection", ids(report.intersection)},
                {"g_best", report.g_best_id},
                {"g_best_loocv", report.g_best_loocv_percent},
                {"fallback", report.fallback}};
}

std::string join_args(int argc, char** argv) {
    std::string joined;
    for (int i = 0; i < argc; ++i) {
        if (i) joined += ' ';
        joined += argv[i];
    }
    return joined;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FCMQR gene selection: fuzzy clustering + rough-set reduction + ACV filtering"};
    app.require_subcommand(1);
    const std::string command_line = join_args(argc, argv);

    // --- ingest ---------------------------------------------------------
    auto* ingest = app.add_subcommand("ingest", "Validate a dataset and print a summary");
    DataOptions ingest_data;
    CommonOptions ingest_common;
    add_data(ingest, ingest_data);
    add_common(ingest, ingest_common, false);

    // --- cluster --------------------------------------------------------
    auto* cluster = app.add_subcommand("cluster", "Fuzzy C-Means clustering of genes");
    DataOptions cluster_data;
    CommonOptions cluster_common;
    std::size_t cluster_k = 5;
    double cluster_fuzzifier = 2.0, cluster_epsilon = 1e-6;
    std::size_t cluster_max_iters = 300;
    bool cluster_trace = false, cluster_standardize = false;
    add_data(cluster, cluster_data);
    add_common(cluster, cluster_common);
    cluster->add_option("--k", cluster_k, "Cluster count")->required();
    cluster->add_option("--fuzzifier", cluster_fuzzifier, "Fuzzifier m > 1 (default 2.0)");
    cluster->add_option("--epsilon", cluster_epsilon, "Centroid displacement tolerance");
    cluster->add_option("--max-iters", cluster_max_iters, "Iteration cap");
    cluster->add_flag("--trace", cluster_trace, "Include the objective trace");
    cluster->add_flag("--standardize", cluster_standardize, "Z-score features before clustering");

    // --- discretize -----------------------------------------------------
    auto* discretize = app.add_subcommand("discretize", "K-means discretization to a decision table");
    DataOptions disc_data;
    CommonOptions disc_common;
    std::size_t disc_bins = 3, disc_max_iters = 100;
    add_data(discretize, disc_data);
    add_common(discretize, disc_common);
    discretize->add_option("--bins", disc_bins, "Bins per attribute (default 3)");
    discretize->add_option("--disc-max-iters", disc_max_iters, "Discretizer iteration cap");

    // --- reduct ---------------------------------------------------------
    auto* reduct = app.add_subcommand("reduct", "Quick Reduct over a discrete decision table");
    CommonOptions reduct_common;
    std::string reduct_table, reduct_label = "class";
    reduct->add_option("--table", reduct_table, "Decision table CSV")->required();
    reduct->add_option("--label", reduct_label, "Decision column id (default: class)");
    add_common(reduct, reduct_common, false);

    // --- acv ------------------------------------------------------------
    auto* acv_cmd = app.add_subcommand("acv", "Average Correlation Value of a numeric matrix");
    CommonOptions acv_common;
    std::string acv_matrix;
    acv_cmd->add_option("--matrix", acv_matrix, "Headerless numeric CSV")->required();
    add_common(acv_cmd, acv_common, false);

    // --- evaluate -------------------------------------------------------
    auto* evaluate = app.add_subcommand("evaluate", "Classifier accuracy on a feature subset");
    DataOptions eval_data;
    CommonOptions eval_common;
    std::string eval_features, eval_classifier = "all", eval_scheme, eval_test_data;
    add_data(evaluate, eval_data);
    add_common(evaluate, eval_common, false);
    evaluate->add_option("--features", eval_features, "Comma-separated feature ids")->required();
    evaluate->add_option("--classifier", eval_classifier,
                         "all | naive-bayes | decision-table | tree | nearest-neighbor");
    evaluate->add_option("--scheme", eval_scheme,
                         "loocv | split (default: split when --test-data is given, else loocv)")
        ->check(CLI::IsMember({"loocv", "split"}));
    evaluate->add_option("--test-data", eval_test_data, "Independent test CSV for split scheme");

    // --- pipeline -------------------------------------------------------
    auto* pipeline = app.add_subcommand("pipeline", "Full FCMQR run");
    DataOptions pipe_data;
    CommonOptions pipe_common;
    std::string pipe_k = "5,7";
    fcmqr::PipelineConfig pipe_config;
    add_data(pipeline, pipe_data);
    add_common(pipeline, pipe_common);
    pipeline->add_option("--k", pipe_k, "Comma-separated cluster counts (default 5,7)");
    pipeline->add_option("--bins", pipe_config.disc.bins, "Discretizer bins (default 3)");
    pipeline->add_option("--disc-max-iters", pipe_config.disc.max_iters, "Discretizer iteration cap");
    pipeline->add_option("--fuzzifier", pipe_config.fcm.fuzzifier, "Fuzzifier m > 1 (default 2.0)");
    pipeline->add_option("--epsilon", pipe_config.fcm.epsilon, "FCM convergence tolerance");
    pipeline->add_option("--max-iters", pipe_config.fcm.max_iters, "FCM iteration cap");
    pipeline->add_option("--acv-tol", pipe_config.acv_tolerance,
                         "Significance tolerance: acv >= 1 - tol (default 1e-6)");
    bool pipe_standardize = false;
    pipeline->add_flag("--standardize", pipe_standardize, "Z-score features before clustering");

    // --- oracle ---------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference checks");
    oracle->require_subcommand(1);
    auto* oracle_reducts = oracle->add_subcommand("reducts", "Exhaustive reduct enumeration");
    CommonOptions oracle_reducts_common;
    std::string oracle_reducts_table, oracle_reducts_label = "class";
    std::size_t oracle_max_attrs = 20;
    oracle_reducts->add_option("--table", oracle_reducts_table, "Decision table CSV")->required();
    oracle_reducts->add_option("--label", oracle_reducts_label, "Decision column id");
    oracle_reducts->add_option("--max-attrs", oracle_max_attrs, "Subset enumeration guard");
    add_common(oracle_reducts, oracle_reducts_common, false);

    auto* oracle_gamma = oracle->add_subcommand("gamma", "Brute-force dependency degree");
    CommonOptions oracle_gamma_common;
    std::string oracle_gamma_table, oracle_gamma_label = "class", oracle_gamma_attrs;
    oracle_gamma->add_option("--table", oracle_gamma_table, "Decision table CSV")->required();
    oracle_gamma->add_option("--label", oracle_gamma_label, "Decision column id");
    oracle_gamma->add_option("--attrs", oracle_gamma_attrs,
                             "Comma-separated attribute indices (default: all)");
    add_common(oracle_gamma, oracle_gamma_common, false);

    auto* oracle_acv = oracle->add_subcommand("acv", "Literal ordered-pair ACV evaluation");
    CommonOptions oracle_acv_common;
    std::string oracle_acv_matrix;
    oracle_acv->add_option("--matrix", oracle_acv_matrix, "Headerless numeric CSV")->required();
    add_common(oracle_acv, oracle_acv_common, false);

    auto* oracle_kmeans = oracle->add_subcommand("kmeans1d", "Exhaustive contiguous 1-D partition");
    CommonOptions oracle_kmeans_common;
    std::string oracle_kmeans_values;
    std::size_t oracle_kmeans_bins = 3;
    oracle_kmeans->add_option("--values", oracle_kmeans_values, "Comma-separated reals")->required();
    oracle_kmeans->add_option("--bins", oracle_kmeans_bins, "Bin count");
    add_common(oracle_kmeans, oracle_kmeans_common, false);

    // --- synth ----------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "Planted synthetic dataset generator");
    CommonOptions synth_common;
    fcmqr::SyntheticConfig synth_config;
    bool synth_no_planted = false;
    synth->add_option("--genes", synth_config.n_genes, "Gene count (default 100)");
    synth->add_option("--samples", synth_config.n_samples, "Sample count (default 30)");
    synth->add_flag("--no-planted", synth_no_planted, "Noise only, no planted pair");
    add_common(synth, synth_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // usage text on stderr, exit 1 on error
    }

    try {
        if (*ingest) {
            auto ds = load_dataset(ingest_data);
            std::map<std::string, int> class_counts;
            for (const auto& l : ds.labels) ++class_counts[l];
            json report{{"features", ds.feature_count()},
                        {"samples", ds.sample_count()},
                        {"classes", class_counts}};
            report["manifest"] = make_manifest(command_line, ingest_common,
                                               {ingest_data.data_path}, json::object());
            emit_json(ingest_common, report);
        } else if (*cluster) {
            auto ds = load_dataset(cluster_data);
            fcmqr::FcmConfig config{cluster_k, cluster_fuzzifier, cluster_epsilon,
                                    cluster_max_iters,
                                    fcmqr::rng::derive_seed(cluster_common.seed, "fcm", cluster_k)};
            std::vector<std::vector<double>> points = ds.values;
            if (cluster_standardize) {
                fcmqr::PipelineConfig helper;  // reuse the pipeline's standardization path
                helper.standardize = true;
                // standardization is internal to pipeline; inline the z-score here
                for (auto& feature : points) {
                    double mean = 0.0;
                    for (double v : feature) mean += v;
                    mean /= static_cast<double>(feature.size());
                    double var = 0.0;
                    for (double v : feature) var += (v - mean) * (v - mean);
                    var /= static_cast<double>(feature.size());
                    double sd = var > 0.0 ? std::sqrt(var) : 1.0;
                    for (double& v : feature) v = (v - mean) / sd;
                }
            }
            auto result = fcmqr::fit(points, config);
            std::vector<std::vector<std::string>> members(cluster_k);
            for (std::size_t g = 0; g < ds.feature_count(); ++g)
                members[result.hard_assignment[g]].push_back(ds.feature_ids[g]);
            json clusters = json::array();
            for (std::size_t j = 0; j < cluster_k; ++j)
                clusters.push_back({{"i", j}, {"size", members[j].size()}, {"genes", members[j]}});
            json report{{"k", cluster_k},
                        {"iterations", result.iterations},
                        {"converged", result.converged},
                        {"clusters", clusters}};
            if (cluster_trace) report["objective_trace"] = result.objective_trace;
            json config_json{{"k", cluster_k},         {"fuzzifier", cluster_fuzzifier},
                             {"epsilon", cluster_epsilon}, {"max_iters", cluster_max_iters},
                             {"seed", cluster_common.seed}, {"standardize", cluster_standardize}};
            report["manifest"] = make_manifest(command_line, cluster_common,
                                               {cluster_data.data_path}, config_json);
            emit_json(cluster_common, report);
        } else if (*discretize) {
            auto ds = load_dataset(disc_data);
            std::vector<std::size_t> all(ds.feature_count());
            for (std::size_t f = 0; f < all.size(); ++f) all[f] = f;
            auto view = fcmqr::subset_features(ds, all);
            fcmqr::DiscretizerConfig config{disc_bins, disc_max_iters, disc_common.seed};
            auto table = fcmqr::discretize_table(view, config);
            std::ostringstream out;
            fcmqr::write_decision_table(out, table, disc_data.label);
            emit(disc_common, out.str());
        } else if (*reduct) {
            auto table = fcmqr::load_decision_table(reduct_table, reduct_label);
            auto result = fcmqr::quick_reduct(table);
            std::vector<std::string> attr_ids;
            for (std::size_t a : result.attributes) attr_ids.push_back(table.attribute_ids[a]);
            json report{{"attributes", result.attributes},
                        {"attribute_ids", attr_ids},
                        {"gamma_trace", result.gamma_trace},
                        {"gamma_full", result.gamma_full},
                        {"reached_full", result.reached_full}};
            report["manifest"] =
                make_manifest(command_line, reduct_common, {reduct_table}, json::object());
            emit_json(reduct_common, report);
        } else if (*acv_cmd) {
            auto matrix = load_matrix(acv_matrix, ',');
            json report = acv_to_json(fcmqr::acv(matrix));
            report["manifest"] =
                make_manifest(command_line, acv_common, {acv_matrix}, json::object());
            emit_json(acv_common, report);
        } else if (*evaluate) {
            auto ds = load_dataset(eval_data);
            auto indices = resolve_feature_ids(ds, eval_features);
            auto view = fcmqr::subset_features(ds, indices);

            std::optional<fcmqr::ExpressionDataset> test_ds;
            std::string scheme = eval_scheme;
            if (scheme.empty()) scheme = eval_test_data.empty() ? "loocv" : "split";
            if (scheme == "split") {
                if (eval_test_data.empty())
                    throw fcmqr::DataError("--scheme split requires --test-data");
                DataOptions test_opts = eval_data;
                test_opts.data_path = eval_test_data;
                test_ds = load_dataset(test_opts);
            }

            std::vector<fcmqr::ClassifierKind> kinds;
            if (eval_classifier == "all")
                kinds = {fcmqr::ClassifierKind::NaiveBayes, fcmqr::ClassifierKind::DecisionTable,
                         fcmqr::ClassifierKind::Tree, fcmqr::ClassifierKind::NearestNeighbor};
            else
                kinds = {fcmqr::classifier_from_name(eval_classifier)};

            json results = json::array();
            std::ostringstream csv;
            csv << "classifier,accuracy,split,features\n";
            for (auto kind : kinds) {
                fcmqr::EvalReport report;
                if (scheme == "split") {
                    std::vector<std::size_t> test_indices;
                    for (std::size_t idx : indices) {
                        const std::string& id = ds.feature_ids[idx];
                        auto it = std::find(test_ds->feature_ids.begin(),
                                            test_ds->feature_ids.end(), id);
                        if (it == test_ds->feature_ids.end())
                            throw fcmqr::DataError("feature '" + id + "' missing from test data");
                        test_indices.push_back(
                            static_cast<std::size_t>(it - test_ds->feature_ids.begin()));
                    }
                    auto test_view = fcmqr::subset_features(*test_ds, test_indices);
                    report = fcmqr::evaluate_split(kind, view, test_view);
                } else {
                    report = fcmqr::evaluate_loocv(kind, view);
                }
                results.push_back(eval_to_json(report));
                csv << fcmqr::classifier_name(kind) << ','
                    << fcmqr::format_accuracy(report.accuracy_percent) << ','
                    << report.split_description << ',' << eval_features << '\n';
            }
            if (eval_common.format == "csv") {
                emit(eval_common, csv.str());
            } else {
                std::vector<std::string> inputs{eval_data.data_path};
                if (!eval_test_data.empty()) inputs.push_back(eval_test_data);
                json config_json{{"features", eval_features},
                                 {"classifier", eval_classifier},
                                 {"scheme", scheme}};
                json report{{"results", results}};
                report["manifest"] = make_manifest(command_line, eval_common, inputs, config_json);
                emit_json(eval_common, report);
            }
        } else if (*pipeline) {
            auto ds = load_dataset(pipe_data);
            pipe_config.k_values = parse_index_list(pipe_k);
            pipe_config.seed = pipe_common.seed;
            pipe_config.threads = pipe_common.threads;
            pipe_config.standardize = pipe_standardize;
            log_info("pipeline over " + std::to_string(pipe_config.k_values.size()) + " k values");
            auto report = fcmqr::run(ds, pipe_config);
            if (pipe_common.format == "csv") {
                std::ostringstream out;
                fcmqr::write_report_csv(out, report, ds);
                emit(pipe_common, out.str());
            } else {
                json config_json{{"k_values", pipe_config.k_values},
                                 {"bins", pipe_config.disc.bins},
                                 {"fuzzifier", pipe_config.fcm.fuzzifier},
                                 {"epsilon", pipe_config.fcm.epsilon},
                                 {"max_iters", pipe_config.fcm.max_iters},
                                 {"acv_tolerance", pipe_config.acv_tolerance},
                                 {"seed", pipe_config.seed},
                                 {"standardize", pipe_config.standardize},
                                 {"seed_derivation", "per-stage: derive_seed(seed, stage, k)"}};
                json out = pipeline_to_json(report, ds);
                out["manifest"] =
                    make_manifest(command_line, pipe_common, {pipe_data.data_path}, config_json);
                emit_json(pipe_common, out);
            }
        } else if (*oracle_reducts) {
            auto table = fcmqr::load_decision_table(oracle_reducts_table, oracle_reducts_label);
            auto result = fcmqr::exhaustive_reducts(table, oracle_max_attrs);
            json report{{"all_reducts", result.all_reducts},
                        {"min_reducts", result.min_reducts},
                        {"core", result.core},
                        {"gamma_full", fcmqr::gamma(table, [&] {
                                           std::vector<std::size_t> all(table.attribute_count());
                                           for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
                                           return all;
                                       }()).value()}};
            report["manifest"] = make_manifest(command_line, oracle_reducts_common,
                                               {oracle_reducts_table}, json::object());
            emit_json(oracle_reducts_common, report);
        } else if (*oracle_gamma) {
            auto table = fcmqr::load_decision_table(oracle_gamma_table, oracle_gamma_label);
            std::vector<std::size_t> attrs;
            if (oracle_gamma_attrs.empty()) {
                attrs.resize(table.attribute_count());
                for (std::size_t a = 0; a < attrs.size(); ++a) attrs[a] = a;
            } else {
                attrs = parse_index_list(oracle_gamma_attrs);
            }
            auto g = fcmqr::oracle::gamma_bruteforce(table, attrs);
            json report{{"attrs", attrs},
                        {"positive_count", g.positive_count},
                        {"universe", g.universe},
                        {"gamma", g.value()}};
            report["manifest"] = make_manifest(command_line, oracle_gamma_common,
                                               {oracle_gamma_table}, json::object());
            emit_json(oracle_gamma_common, report);
        } else if (*oracle_acv) {
            auto matrix = load_matrix(oracle_acv_matrix, ',');
            json report = acv_to_json(fcmqr::oracle::acv_direct(matrix));
            report["manifest"] = make_manifest(command_line, oracle_acv_common,
                                               {oracle_acv_matrix}, json::object());
            emit_json(oracle_acv_common, report);
        } else if (*oracle_kmeans) {
            auto values = parse_value_list(oracle_kmeans_values);
            auto result = fcmqr::oracle::best_contiguous_partition(values, oracle_kmeans_bins);
            json report{{"sse", result.sse}, {"labels", result.labels}};
            report["manifest"] =
                make_manifest(command_line, oracle_kmeans_common, {}, json::object());
            emit_json(oracle_kmeans_common, report);
        } else if (*synth) {
            synth_config.planted_pair = !synth_no_planted;
            synth_config.seed = synth_common.seed;
            auto ds = fcmqr::generate_synthetic(synth_config);
            std::ostringstream out;
            fcmqr::write_csv(out, ds, "class");
            emit(synth_common, out.str());
        }
    } catch (const fcmqr::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
