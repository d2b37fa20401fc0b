#include "fcmqr/roughset.hpp"

#include <algorithm>
#include <unordered_map>

#include "fcmqr/errors.hpp"
#include "fcmqr/rng.hpp"

namespace fcmqr {

namespace {

struct TupleKey {
    std::vector<int> labels;
    bool operator==(const TupleKey& other) const = default;
};

struct TupleKeyHash {
    std::size_t operator()(const TupleKey& key) const {
        return static_cast<std::size_t>(
            rng::fnv1a64(key.labels.data(), key.labels.size() * sizeof(int)));
    }
};

void check_attrs(const DecisionTable& table, const std::vector<std::size_t>& attrs) {
    for (std::size_t a : attrs)
        if (a >= table.attribute_count())
            throw DataError("attribute index " + std::to_string(a) + " out of range (have " +
                            std::to_string(table.attribute_count()) + ")");
}

// |POS_attrs(D)| without materializing blocks: per tuple-group, track whether
// all decisions agree.
long long positive_count(const DecisionTable& table, const std::vector<std::size_t>& attrs) {
    struct GroupState {
        int decision;
        long long size;
        bool pure;
    };
    std::unordered_map<TupleKey, GroupState, TupleKeyHash> groups;
    TupleKey key;
    key.labels.resize(attrs.size());
    for (std::size_t o = 0; o < table.object_count(); ++o) {
        for (std::size_t i = 0; i < attrs.size(); ++i) key.labels[i] = table.cells[o][attrs[i]];
        auto [it, inserted] = groups.try_emplace(key, GroupState{table.decision[o], 0, true});
        ++it->second.size;
        if (it->second.decision != table.decision[o]) it->second.pure = false;
    }
    long long count = 0;
    for (const auto& [k, g] : groups)
        if (g.pure) count += g.size;
    return count;
}

}  // namespace

Partition partition(const DecisionTable& table, const std::vector<std::size_t>& attrs) {
    check_attrs(table, attrs);
    Partition result;
    std::unordered_map<TupleKey, std::size_t, TupleKeyHash> block_of;
    TupleKey key;
    key.labels.resize(attrs.size());
    for (std::size_t o = 0; o < table.object_count(); ++o) {
        for (std::size_t i = 0; i < attrs.size(); ++i) key.labels[i] = table.cells[o][attrs[i]];
        auto [it, inserted] = block_of.try_emplace(key, result.blocks.size());
        if (inserted) result.blocks.emplace_back();
        result.blocks[it->second].push_back(static_cast<int>(o));
    }
    return result;
}

std::vector<int> positive_region(const DecisionTable& table, const std::vector<std::size_t>& attrs) {
    Partition p = partition(table, attrs);
    std::vector<int> region;
    for (const auto& block : p.blocks) {
        int decision = table.decision[block.front()];
        bool pure = std::all_of(block.begin(), block.end(),
                                [&](int o) { return table.decision[o] == decision; });
        if (pure) region.insert(region.end(), block.begin(), block.end());
    }
    std::sort(region.begin(), region.end());
    return region;
}

GammaValue gamma(const DecisionTable& table, const std::vector<std::size_t>& attrs) {
    check_attrs(table, attrs);
    return GammaValue{positive_count(table, attrs), static_cast<long long>(table.object_count())};
}

ReductResult quick_reduct(const DecisionTable& table) {
    if (table.object_count() == 0) throw DataError("quick reduct needs a non-empty table");
    const std::size_t n_attrs = table.attribute_count();
    const long long universe = static_cast<long long>(table.object_count());

    std::vector<std::size_t> all_attrs(n_attrs);
    for (std::size_t a = 0; a < n_attrs; ++a) all_attrs[a] = a;
    const long long pos_full = positive_count(table, all_attrs);

    ReductResult result;
    result.gamma_full = GammaValue{pos_full, universe}.value();

    std::vector<bool> chosen(n_attrs, false);
    std::vector<std::size_t> current;
    long long pos_current = positive_count(table, {});

    while (pos_current < pos_full) {
        long long best_pos = pos_current;
        std::size_t best_attr = n_attrs;
        current.push_back(0);  // slot for the candidate
        for (std::size_t x = 0; x < n_attrs; ++x) {
            if (chosen[x]) continue;
            current.back() = x;
            long long pos = positive_count(table, current);
            if (pos > best_pos) {  // strict: lowest index wins ties
                best_pos = pos;
                best_attr = x;
            }
        }
        current.pop_back();
        if (best_attr == n_attrs) break;  // stall: nothing strictly increases gamma
        chosen[best_attr] = true;
        current.push_back(best_attr);
        pos_current = best_pos;
        result.attributes.push_back(best_attr);
        result.gamma_trace.push_back(GammaValue{pos_current, universe}.value());
    }
    result.reached_full = (pos_current == pos_full);
    return result;
}

ReductSetResult exhaustive_reducts(const DecisionTable& table, std::size_t max_attrs) {
    const std::size_t n = table.attribute_count();
    if (n > max_attrs || n > 62)
        throw DataError("exhaustive reduct search guard exceeded: " + std::to_string(n) +
                        " attributes > limit " + std::to_string(std::min<std::size_t>(max_attrs, 62)));

    auto attrs_of = [&](std::uint64_t mask) {
        std::vector<std::size_t> attrs;
        for (std::size_t a = 0; a < n; ++a)
            if (mask & (1ULL << a)) attrs.push_back(a);
        return attrs;
    };

    std::vector<std::size_t> all_attrs = attrs_of((1ULL << n) - 1);
    const long long pos_full = positive_count(table, all_attrs);

    ReductSetResult result;
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        auto attrs = attrs_of(mask);
        if (positive_count(table, attrs) != pos_full) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < attrs.size() && minimal; ++i) {
            std::vector<std::size_t> reduced = attrs;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
            if (positive_count(table, reduced) == pos_full) minimal = false;
        }
        if (minimal) result.all_reducts.push_back(std::move(attrs));
    }

    std::size_t min_size = static_cast<std::size_t>(-1);
    for (const auto& r : result.all_reducts) min_size = std::min(min_size, r.size());
    for (const auto& r : result.all_reducts)
        if (r.size() == min_size) result.min_reducts.push_back(r);

    if (!result.all_reducts.empty()) {
        result.core = result.all_reducts.front();
        for (const auto& r : result.all_reducts) {
            std::vector<std::size_t> kept;
            std::set_intersection(result.core.begin(), result.core.end(), r.begin(), r.end(),
                                  std::back_inserter(kept));
            result.core = std::move(kept);
        }
    }
    return result;
}

}  // namespace fcmqr
