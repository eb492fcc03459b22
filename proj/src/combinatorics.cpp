#include "fsrec/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fsrec/errors.hpp"

namespace fsrec {

int degree(const Configuration& cfg, int rank) {
    int d = 0;
    const auto entries = cfg.entries();
    for (int p = 0; p < static_cast<int>(entries.size()); ++p)
        d += degree_of_position(p, rank) * entries[p];
    return d;
}

WeightVector weight(const Configuration& cfg, int rank) {
    std::vector<int> n(rank, 0);
    const auto entries = cfg.entries();
    for (int p = 0; p < static_cast<int>(entries.size()); ++p)
        n[color_of_position(p, rank) - 1] += entries[p];
    return WeightVector(std::move(n));
}

bool satisfies_difference(const Configuration& cfg, int rank, int level) {
    const auto entries = cfg.entries();
    const int n = static_cast<int>(entries.size());
    // sliding window of length rank+1; windows starting past the support are empty
    int window = 0;
    for (int p = 0; p < n; ++p) {
        window += entries[p];
        if (p > rank) window -= entries[p - rank - 1];
        if (window > level) return false;
    }
    return true;
}

bool satisfies_initial(const Configuration& cfg, const LevelComposition& K) {
    int prefix = 0;
    for (int j = 0; j < K.rank(); ++j) {
        prefix += cfg.at(j);
        if (prefix > K.partial_sum(j)) return false;
    }
    return true;
}

bool is_admissible(const Configuration& cfg, const LevelComposition& K) {
    return satisfies_initial(cfg, K) && satisfies_difference(cfg, K.rank(), K.level());
}

namespace {

class RegionWalker {
public:
    RegionWalker(int rank, int level, std::span<const int> bounds, int max_degree,
                 const RegionVisitor& visit)
        : rank_(rank),
          level_(level),
          bounds_(bounds),
          max_degree_(max_degree),
          entries_(static_cast<std::size_t>(rank) * std::max(max_degree, 0), 0),
          visit_(visit) {}

    void run() {
        if (max_degree_ < 0) return;
        walk(0, max_degree_, 0, 0);
    }

private:
    // window holds the sum of the rank entries preceding `position`
    void walk(int position, int budget, int prefix, int window) {
        const int j = degree_of_position(position, rank_);
        if (position >= static_cast<int>(entries_.size()) || j > budget) {
            // everything from here on is forced to zero
            if (position < rank_) {
                for (int p = position; p < rank_; ++p)
                    if (prefix > bounds_[p]) return;
            }
            visit_(std::span<const int>(entries_.data(), position), max_degree_ - budget);
            return;
        }
        int cap = std::min(budget / j, level_ - window);
        if (position < rank_) cap = std::min(cap, bounds_[position] - prefix);
        const int leaving = position >= rank_ ? entries_[position - rank_] : 0;
        for (int v = 0; v <= cap; ++v) {
            entries_[position] = v;
            walk(position + 1, budget - v * j, prefix + v, window + v - leaving);
        }
        entries_[position] = 0;
    }

    int rank_;
    int level_;
    std::span<const int> bounds_;
    int max_degree_;
    std::vector<int> entries_;
    const RegionVisitor& visit_;
};

std::vector<int> composition_bounds(const LevelComposition& K) {
    std::vector<int> bounds(K.rank());
    for (int j = 0; j < K.rank(); ++j) bounds[j] = K.partial_sum(j);
    return bounds;
}

} // namespace

void for_each_in_region(int rank, int level, std::span<const int> prefix_bounds, int max_degree,
                        const RegionVisitor& visit) {
    if (rank < 1) throw InvalidArgumentError("rank must be >= 1");
    if (static_cast<int>(prefix_bounds.size()) != rank)
        throw RankMismatchError("prefix bounds must have one entry per color");
    RegionWalker(rank, level, prefix_bounds, max_degree, visit).run();
}

void sort_canonical(std::vector<Configuration>& cfgs, int rank) {
    std::stable_sort(cfgs.begin(), cfgs.end(), [rank](const Configuration& a, const Configuration& b) {
        const int da = degree(a, rank);
        const int db = degree(b, rank);
        if (da != db) return da < db;
        return a < b;
    });
}

std::vector<Configuration> enumerate_admissible(const LevelComposition& K, int max_degree,
                                                EnumerationLimits limits) {
    std::vector<Configuration> out;
    const auto bounds = composition_bounds(K);
    for_each_in_region(K.rank(), K.level(), bounds, max_degree,
                       [&](std::span<const int> entries, int) {
                           if (out.size() >= limits.max_outputs)
                               throw ResourceLimitError("enumeration exceeded output cap of " +
                                                        std::to_string(limits.max_outputs));
                           out.emplace_back(std::vector<int>(entries.begin(), entries.end()));
                       });
    sort_canonical(out, K.rank());
    return out;
}

std::map<Grade, std::vector<Configuration>> enumerate_by_grade(const LevelComposition& K,
                                                               int max_degree,
                                                               EnumerationLimits limits) {
    std::map<Grade, std::vector<Configuration>> out;
    for (auto& cfg : enumerate_admissible(K, max_degree, limits)) {
        Grade g{degree(cfg, K.rank()), weight(cfg, K.rank())};
        out[g].push_back(std::move(cfg));
    }
    return out;
}

std::vector<Configuration> enumerate_all_configurations(int rank, int max_degree,
                                                        EnumerationLimits limits) {
    // no difference or initial constraint: a level and bounds that never bind
    const int unbounded = std::numeric_limits<int>::max() / 4;
    std::vector<int> bounds(rank, unbounded);
    std::vector<Configuration> out;
    for_each_in_region(rank, unbounded, bounds, max_degree, [&](std::span<const int> entries, int) {
        if (out.size() >= limits.max_outputs)
            throw ResourceLimitError("enumeration exceeded output cap of " +
                                     std::to_string(limits.max_outputs));
        out.emplace_back(std::vector<int>(entries.begin(), entries.end()));
    });
    sort_canonical(out, rank);
    return out;
}

} // namespace fsrec
