#pragma once

#include <cstddef>
#include <vector>

#include "fcmqr/dataset.hpp"

namespace fcmqr {

// Indiscernibility partition: disjoint non-empty blocks of object indices
// covering the whole universe, ordered by first occurrence.
struct Partition {
    std::vector<std::vector<int>> blocks;
};

// Dependency degree as an exact integer ratio |POS_R(D)| / |U|. Comparisons
// inside the reduct search use the integer form; value() exposes the real.
struct GammaValue {
    long long positive_count = 0;
    long long universe = 0;

    double value() const { return universe == 0 ? 0.0 : static_cast<double>(positive_count) / static_cast<double>(universe); }
    friend bool operator==(const GammaValue& a, const GammaValue& b) = default;
};

// Groups objects by identical label tuples over attrs; the empty attribute
// set yields a single block.
Partition partition(const DecisionTable& table, const std::vector<std::size_t>& attrs);

// Sorted indices of objects whose attrs-block is decision-pure (union of the
// lower approximations of all decision classes).
std::vector<int> positive_region(const DecisionTable& table, const std::vector<std::size_t>& attrs);

GammaValue gamma(const DecisionTable& table, const std::vector<std::size_t>& attrs);

struct ReductResult {
    std::vector<std::size_t> attributes;  // in order of addition
    std::vector<double> gamma_trace;      // dependency after each addition, strictly increasing
    double gamma_full = 0.0;              // dependency of the full attribute set
    bool reached_full = false;            // trace reached gamma_full
};

// Greedy forward selection: each round adds the attribute with the largest
// dependency gain (lowest index on ties) and stops at full dependency or at
// a stall, i.e. when no attribute strictly increases the dependency. A stall
// short of full dependency sets reached_full = false; discretized tables can
// be inconsistent even with every attribute present.
ReductResult quick_reduct(const DecisionTable& table);

struct ReductSetResult {
    std::vector<std::vector<std::size_t>> all_reducts;  // every X with gamma_X = gamma_C, no removable member
    std::vector<std::vector<std::size_t>> min_reducts;  // the minimum-cardinality subset of all_reducts
    std::vector<std::size_t> core;                      // intersection of all_reducts
};

// Exhaustive enumeration over attribute subsets. Guarded: throws DataError
// when the table has more than max_attrs attributes.
ReductSetResult exhaustive_reducts(const DecisionTable& table, std::size_t max_attrs = 20);

}  // namespace fcmqr
