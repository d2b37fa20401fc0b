#pragma once

#include <cstddef>
#include <vector>

#include "fcmqr/acv.hpp"
#include "fcmqr/dataset.hpp"
#include "fcmqr/roughset.hpp"

// Brute-force reference implementations, deliberately written along different
// code paths than the production modules they check. Exposed both to the test
// suites and to the `fcmqr oracle` subcommands.
namespace fcmqr::oracle {

struct ContiguousPartition {
    double sse = 0.0;
    std::vector<int> labels;  // over the original (unsorted) values
};

// Exhaustive search over all contiguous splits of the sorted values.
// Guarded: throws DataError for more than max_values values.
ContiguousPartition best_contiguous_partition(const std::vector<double>& values, std::size_t bins,
                                              std::size_t max_values = 64);

double within_cluster_sse(const std::vector<double>& values, const std::vector<int>& labels);

// Pairwise tuple scan, no hashing: an object is positive iff every object
// agreeing with it on attrs shares its decision.
std::vector<int> positive_region_bruteforce(const DecisionTable& table,
                                            const std::vector<std::size_t>& attrs);

GammaValue gamma_bruteforce(const DecisionTable& table, const std::vector<std::size_t>& attrs);

// Literal ordered-pair evaluation (diagonal included, minus the matrix
// dimension) with a one-pass product-moment Pearson.
AcvReport acv_direct(const std::vector<std::vector<double>>& matrix);

}  // namespace fcmqr::oracle
