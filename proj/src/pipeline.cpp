#include "fcmqr/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <ostream>
#include <set>
#include <thread>

#include "fcmqr/classify.hpp"
#include "fcmqr/rng.hpp"

namespace fcmqr {

namespace {

// Runs tasks indexed 0..count-1 on at most `threads` workers; results land in
// caller-owned slots by index, so the outcome is identical to the sequential
// order. The lowest-index exception is rethrown.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < threads; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    task(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<std::vector<double>> clustering_points(const ExpressionDataset& ds, bool standardize) {
    std::vector<std::vector<double>> points = ds.values;
    if (!standardize) return points;
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
    return points;
}

ClusterRecord analyze_cluster(const ExpressionDataset& ds, std::size_t k, std::size_t index,
                              std::vector<std::size_t> members, const PipelineConfig& config) {
    ClusterRecord record;
    record.k = k;
    record.cluster_index = index;
    record.member_genes = std::move(members);

    if (record.member_genes.empty()) {
        record.note = "empty-cluster";
        return record;
    }

    FeatureSubsetView view = subset_features(ds, record.member_genes);
    DiscretizerConfig disc = config.disc;
    disc.seed = rng::derive_seed(config.seed, "disc", k);
    DecisionTable table = discretize_table(view, disc);

    record.reduct = quick_reduct(table);
    for (std::size_t local : record.reduct.attributes)
        record.reduct_genes.push_back(record.member_genes[local]);
    std::sort(record.reduct_genes.begin(), record.reduct_genes.end());
    if (!record.reduct.reached_full) record.note = "reduct-stalled";

    if (record.reduct_genes.empty()) {
        record.acv_score = 0.0;
        record.significant = false;
        return record;
    }
    if (record.reduct_genes.size() == 1) {
        // a single non-constant gene is trivially self-coherent
        record.acv_score = 1.0;
        record.significant = true;
        record.note = record.note.empty() ? "singleton-reduct" : record.note + ",singleton-reduct";
        return record;
    }

    std::vector<std::vector<double>> submatrix;
    for (std::size_t gene : record.reduct_genes) submatrix.push_back(ds.values[gene]);
    record.acv_report = acv(submatrix);
    record.acv_score = record.acv_report->acv;
    record.significant = record.acv_score >= 1.0 - config.acv_tolerance;
    return record;
}

// LOOCV accuracy of the single-gene stump, the ranking criterion for g_best
double stump_loocv_percent(const ExpressionDataset& ds, std::size_t gene) {
    FeatureSubsetView view = subset_features(ds, {gene});
    return evaluate_loocv(ClassifierKind::DecisionTable, view).accuracy_percent;
}

}  // namespace

KRun run_for_k(const ExpressionDataset& ds, std::size_t k, const PipelineConfig& config) {
    if (k == 0) throw DataError("pipeline: k must be at least 1");
    if (k > ds.feature_count())
        throw DataError("pipeline: k = " + std::to_string(k) + " exceeds gene count " +
                        std::to_string(ds.feature_count()));

    FcmConfig fcm_config = config.fcm;
    fcm_config.cluster_count = k;
    fcm_config.seed = rng::derive_seed(config.seed, "fcm", k);
    FcmResult clustering = fit(clustering_points(ds, config.standardize), fcm_config);

    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t gene = 0; gene < ds.feature_count(); ++gene)
        members[clustering.hard_assignment[gene]].push_back(gene);

    KRun run;
    run.k = k;
    run.clusters.resize(k);
    parallel_for(k, config.threads, [&](std::size_t i) {
        run.clusters[i] = analyze_cluster(ds, k, i, std::move(members[i]), config);
    });

    std::set<std::size_t> pool;
    for (const auto& record : run.clusters)
        if (record.significant)
            pool.insert(record.reduct_genes.begin(), record.reduct_genes.end());
    run.pool.assign(pool.begin(), pool.end());
    return run;
}

PipelineReport run(const ExpressionDataset& ds, const PipelineConfig& config) {
    if (config.k_values.empty()) throw DataError("pipeline: k_values must be non-empty");
    if (!(config.acv_tolerance >= 0.0)) throw DataError("pipeline: acv tolerance must be >= 0");

    PipelineReport report;
    report.k_runs.resize(config.k_values.size());
    parallel_for(config.k_values.size(), config.threads, [&](std::size_t i) {
        report.k_runs[i] = run_for_k(ds, config.k_values[i], config);
    });

    // intersection of the per-k pools
    std::vector<std::size_t> common = report.k_runs.front().pool;
    for (const auto& k_run : report.k_runs) {
        std::vector<std::size_t> kept;
        std::set_intersection(common.begin(), common.end(), k_run.pool.begin(), k_run.pool.end(),
                              std::back_inserter(kept));
        common = std::move(kept);
    }
    report.intersection = common;

    std::vector<std::size_t> candidates = report.intersection;
    if (candidates.empty()) {
        report.fallback = true;
        std::set<std::size_t> united;
        for (const auto& k_run : report.k_runs) united.insert(k_run.pool.begin(), k_run.pool.end());
        candidates.assign(united.begin(), united.end());
    }
    if (candidates.empty())
        throw EmptyResultError("pipeline: every k produced an empty significant pool", report);

    std::size_t best_gene = candidates.front();
    double best_accuracy = -1.0;
    for (std::size_t gene : candidates) {  // ascending: lowest gene wins ties
        double accuracy = stump_loocv_percent(ds, gene);
        if (accuracy > best_accuracy) {
            best_accuracy = accuracy;
            best_gene = gene;
        }
    }
    report.g_best = best_gene;
    report.g_best_id = ds.feature_ids[best_gene];
    report.g_best_loocv_percent = best_accuracy;
    return report;
}

void write_report_csv(std::ostream& out, const PipelineReport& report, const ExpressionDataset& ds) {
    auto id_list = [&](const std::vector<std::size_t>& genes) {
        std::string s;
        for (std::size_t i = 0; i < genes.size(); ++i) {
            if (i) s += ' ';
            s += ds.feature_ids[genes[i]];
        }
        return s;
    };

    out << "k,cluster,all_genes,qr_selected_genes,acv,significant,note\n";
    for (const auto& k_run : report.k_runs) {
        for (const auto& record : k_run.clusters) {
            out << k_run.k << ',' << (record.cluster_index + 1) << ',' << record.member_genes.size()
                << ',' << id_list(record.reduct_genes) << ',';
            if (record.member_genes.empty())
                out << "";
            else
                out << record.acv_score;
            out << ',' << (record.significant ? "yes" : "no") << ',' << record.note << '\n';
        }
        out << k_run.k << ",pool,," << id_list(k_run.pool) << ",,,\n";
    }
    out << "intersection,,," << id_list(report.intersection) << ",,,\n";
    out << "g_best,,," << report.g_best_id << ",,"
        << (report.fallback ? "fallback" : "intersection") << ",\n";
}

}  // namespace fcmqr
