#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fcmqr {

struct FcmConfig {
    std::size_t cluster_count = 2;  // c
    double fuzzifier = 2.0;         // m, > 1; conventional range [1.25, 2]
    double epsilon = 1e-6;          // convergence tolerance on max centroid displacement
    std::size_t max_iters = 300;
    std::uint64_t seed = 0;
};

// Cluster-by-point fuzzy memberships; every point's column sums to 1.
struct MembershipMatrix {
    std::vector<std::vector<double>> mu;  // [cluster][point]

    std::size_t cluster_count() const { return mu.size(); }
    std::size_t point_count() const { return mu.empty() ? 0 : mu.front().size(); }
};

struct FcmResult {
    std::vector<std::vector<double>> centroids;  // [cluster][dimension]
    MembershipMatrix memberships;
    std::vector<std::size_t> hard_assignment;    // argmax membership, lowest index on ties
    std::size_t iterations = 0;
    std::vector<double> objective_trace;         // sum_ji mu^m * d^2, one value per iteration
    bool converged = false;
};

// Random positive memberships, each column normalized to sum 1.
// Deterministic for a fixed seed.
MembershipMatrix init_membership(std::size_t n_points, std::size_t clusters, std::uint64_t seed);

// C_j = sum_i mu_ji^m x_i / sum_i mu_ji^m. Throws DataError when a cluster's
// weight mass is zero (degenerate cluster).
std::vector<std::vector<double>> compute_centroids(const std::vector<std::vector<double>>& points,
                                                   const MembershipMatrix& mu, double fuzzifier);

// mu_ji = (1/d_ji^2)^(1/(m-1)) normalized over clusters, d = Euclidean
// distance. A point at zero distance from a centroid takes membership 1 on
// the lowest-index zero-distance cluster and 0 elsewhere.
MembershipMatrix update_membership(const std::vector<std::vector<double>>& points,
                                   const std::vector<std::vector<double>>& centroids,
                                   double fuzzifier);

double fcm_objective(const std::vector<std::vector<double>>& points,
                     const std::vector<std::vector<double>>& centroids,
                     const MembershipMatrix& mu, double fuzzifier);

// Alternates centroid and membership updates until the max centroid
// displacement drops below epsilon or max_iters is reached. Non-convergence
// is reported via the converged flag, not an error.
FcmResult fit(const std::vector<std::vector<double>>& points, const FcmConfig& config);

// Same, but starting from a caller-supplied membership matrix.
FcmResult fit_from(const std::vector<std::vector<double>>& points, MembershipMatrix initial,
                   const FcmConfig& config);

}  // namespace fcmqr
