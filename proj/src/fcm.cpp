#include "fcmqr/fcm.hpp"

#include <algorithm>
#include <cmath>

#include "fcmqr/errors.hpp"
#include "fcmqr/rng.hpp"

namespace fcmqr {

namespace {

void check_points(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw DataError("fcm: no points");
    const std::size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw DataError("fcm: points of mixed dimension");
}

double sq_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        double diff = a[d] - b[d];
        s += diff * diff;
    }
    return s;
}

}  // namespace

MembershipMatrix init_membership(std::size_t n_points, std::size_t clusters, std::uint64_t seed) {
    if (clusters == 0) throw DataError("fcm: cluster count must be at least 1");
    if (clusters > n_points)
        throw DataError("fcm: cluster count " + std::to_string(clusters) + " exceeds point count " +
                        std::to_string(n_points));
    rng::Engine engine(seed);
    MembershipMatrix mm;
    mm.mu.assign(clusters, std::vector<double>(n_points));
    for (std::size_t i = 0; i < n_points; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < clusters; ++j) {
            mm.mu[j][i] = engine.uniform_pos();
            sum += mm.mu[j][i];
        }
        for (std::size_t j = 0; j < clusters; ++j) mm.mu[j][i] /= sum;
    }
    return mm;
}

std::vector<std::vector<double>> compute_centroids(const std::vector<std::vector<double>>& points,
                                                   const MembershipMatrix& mu, double fuzzifier) {
    check_points(points);
    const std::size_t c = mu.cluster_count();
    const std::size_t n = points.size();
    const std::size_t dim = points.front().size();
    if (mu.point_count() != n) throw DataError("fcm: membership/point count mismatch");

    std::vector<std::vector<double>> centroids(c, std::vector<double>(dim, 0.0));
    for (std::size_t j = 0; j < c; ++j) {
        double mass = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double w = std::pow(mu.mu[j][i], fuzzifier);
            mass += w;
            for (std::size_t d = 0; d < dim; ++d) centroids[j][d] += w * points[i][d];
        }
        if (mass == 0.0)
            throw DataError("fcm: degenerate cluster " + std::to_string(j) + " (zero weight mass)");
        for (std::size_t d = 0; d < dim; ++d) centroids[j][d] /= mass;
    }
    return centroids;
}

MembershipMatrix update_membership(const std::vector<std::vector<double>>& points,
                                   const std::vector<std::vector<double>>& centroids,
                                   double fuzzifier) {
    check_points(points);
    if (centroids.empty()) throw DataError("fcm: no centroids");
    if (fuzzifier <= 1.0) throw DataError("fcm: fuzzifier must be > 1");
    const std::size_t c = centroids.size();
    const std::size_t n = points.size();
    const double power = 1.0 / (fuzzifier - 1.0);  // applied to squared distances

    MembershipMatrix mm;
    mm.mu.assign(c, std::vector<double>(n, 0.0));
    std::vector<double> d2(c);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t zero_at = c;
        for (std::size_t j = 0; j < c; ++j) {
            d2[j] = sq_distance(points[i], centroids[j]);
            if (d2[j] == 0.0 && zero_at == c) zero_at = j;
        }
        if (zero_at < c) {
            mm.mu[zero_at][i] = 1.0;  // coincident with a centroid
            continue;
        }
        for (std::size_t j = 0; j < c; ++j) {
            double denom = 0.0;
            for (std::size_t k = 0; k < c; ++k) denom += std::pow(d2[j] / d2[k], power);
            mm.mu[j][i] = 1.0 / denom;
        }
    }
    return mm;
}

double fcm_objective(const std::vector<std::vector<double>>& points,
                     const std::vector<std::vector<double>>& centroids,
                     const MembershipMatrix& mu, double fuzzifier) {
    double total = 0.0;
    for (std::size_t j = 0; j < centroids.size(); ++j)
        for (std::size_t i = 0; i < points.size(); ++i)
            total += std::pow(mu.mu[j][i], fuzzifier) * sq_distance(points[i], centroids[j]);
    return total;
}

FcmResult fit_from(const std::vector<std::vector<double>>& points, MembershipMatrix initial,
                   const FcmConfig& config) {
    check_points(points);
    if (config.fuzzifier <= 1.0) throw DataError("fcm: fuzzifier must be > 1");
    if (config.epsilon <= 0.0) throw DataError("fcm: epsilon must be positive");
    if (config.max_iters == 0) throw DataError("fcm: max_iters must be positive");

    FcmResult result;
    result.memberships = std::move(initial);

    std::vector<std::vector<double>> previous;
    for (std::size_t it = 1; it <= config.max_iters; ++it) {
        result.centroids = compute_centroids(points, result.memberships, config.fuzzifier);
        result.memberships = update_membership(points, result.centroids, config.fuzzifier);
        result.objective_trace.push_back(
            fcm_objective(points, result.centroids, result.memberships, config.fuzzifier));
        result.iterations = it;

        if (!previous.empty()) {
            double displacement = 0.0;
            for (std::size_t j = 0; j < result.centroids.size(); ++j)
                displacement = std::max(
                    displacement, std::sqrt(sq_distance(result.centroids[j], previous[j])));
            if (displacement < config.epsilon) {
                result.converged = true;
                break;
            }
        }
        previous = result.centroids;
    }

    // hard assignment by maximal membership, lowest cluster index on ties
    const std::size_t n = points.size();
    result.hard_assignment.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < result.memberships.cluster_count(); ++j)
            if (result.memberships.mu[j][i] > result.memberships.mu[best][i]) best = j;
        result.hard_assignment[i] = best;
    }
    return result;
}

FcmResult fit(const std::vector<std::vector<double>>& points, const FcmConfig& config) {
    check_points(points);
    return fit_from(points, init_membership(points.size(), config.cluster_count, config.seed),
                    config);
}

}  // namespace fcmqr
