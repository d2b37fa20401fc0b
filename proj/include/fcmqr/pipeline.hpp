#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fcmqr/acv.hpp"
#include "fcmqr/dataset.hpp"
#include "fcmqr/discretize.hpp"
#include "fcmqr/errors.hpp"
#include "fcmqr/fcm.hpp"
#include "fcmqr/roughset.hpp"

namespace fcmqr {

struct PipelineConfig {
    std::vector<std::size_t> k_values = {5, 7};
    FcmConfig fcm;  // cluster_count is overridden by each k
    DiscretizerConfig disc;
    double acv_tolerance = 1e-6;  // significant iff acv >= 1 - tolerance
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    bool standardize = false;  // z-score features before clustering only
};

// Per-cluster outcome for one k: members, reduct, homogeneity score.
struct ClusterRecord {
    std::size_t k = 0;
    std::size_t cluster_index = 0;
    std::vector<std::size_t> member_genes;  // dataset feature indices, ascending
    std::vector<std::size_t> reduct_genes;  // subset of member_genes
    ReductResult reduct;                    // trace in cluster-local attribute indices
    std::optional<AcvReport> acv_report;    // absent for empty clusters and singleton reducts
    double acv_score = 0.0;
    bool significant = false;
    std::string note;  // "", "empty-cluster", "singleton-reduct", "reduct-stalled"
};

struct KRun {
    std::size_t k = 0;
    std::vector<ClusterRecord> clusters;
    std::vector<std::size_t> pool;  // union of reduct genes over significant clusters
};

struct PipelineReport {
    std::vector<KRun> k_runs;
    std::vector<std::size_t> intersection;  // of the per-k pools, ascending
    std::size_t g_best = 0;                 // dataset feature index
    std::string g_best_id;
    double g_best_loocv_percent = 0.0;
    bool fallback = false;  // g_best drawn from the pool union because the intersection was empty
};

// Raised when every k produced an empty significant pool; carries the
// partial report for inspection.
class EmptyResultError : public DataError {
public:
    EmptyResultError(const std::string& what, PipelineReport report)
        : DataError(what), report(std::move(report)) {}
    PipelineReport report;
};

// One clustering pass: FCM over genes, then per non-empty cluster
// discretization, Quick Reduct, and ACV of the reduct genes' raw submatrix.
KRun run_for_k(const ExpressionDataset& ds, std::size_t k, const PipelineConfig& config);

// Full run over config.k_values; g_best is the intersection member with the
// best single-gene stump LOOCV accuracy (lowest index on ties), falling back
// to the pool union when the intersection is empty.
PipelineReport run(const ExpressionDataset& ds, const PipelineConfig& config);

void write_report_csv(std::ostream& out, const PipelineReport& report, const ExpressionDataset& ds);

}  // namespace fcmqr
