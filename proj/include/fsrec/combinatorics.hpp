#ifndef FSREC_COMBINATORICS_HPP
#define FSREC_COMBINATORICS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "fsrec/types.hpp"

namespace fsrec {

// Degree index j (>= 1) of a support position.
inline int degree_of_position(int position, int rank) { return position / rank + 1; }
// Color r in 1..rank of a support position.
inline int color_of_position(int position, int rank) { return position % rank + 1; }

int degree(const Configuration& cfg, int rank);
WeightVector weight(const Configuration& cfg, int rank);

/// Every window a_i + ... + a_{i+rank} is at most `level`.
bool satisfies_difference(const Configuration& cfg, int rank, int level);
/// a_0 + ... + a_j <= k_0 + ... + k_j for j < rank.
bool satisfies_initial(const Configuration& cfg, const LevelComposition& K);
bool is_admissible(const Configuration& cfg, const LevelComposition& K);

struct EnumerationLimits {
    std::size_t max_outputs = 5'000'000;
};

/// Visits (untrimmed entries, degree) for every sequence satisfying the
/// difference conditions at `level` and a_0 + ... + a_j <= prefix_bounds[j]
/// (j < rank), with degree <= max_degree. Depth-first, values ascending, so
/// visits come in entry-lexicographic order.
using RegionVisitor = std::function<void(std::span<const int> entries, int degree)>;
void for_each_in_region(int rank, int level, std::span<const int> prefix_bounds,
                        int max_degree, const RegionVisitor& visit);

/// Admissible configurations for K with degree <= max_degree, ordered by
/// degree and then entry-lexicographically.
std::vector<Configuration> enumerate_admissible(const LevelComposition& K, int max_degree,
                                                EnumerationLimits limits = {});

std::map<Grade, std::vector<Configuration>> enumerate_by_grade(const LevelComposition& K,
                                                               int max_degree,
                                                               EnumerationLimits limits = {});

/// Every configuration (no admissibility constraint) with degree <= max_degree,
/// in the same canonical order.
std::vector<Configuration> enumerate_all_configurations(int rank, int max_degree,
                                                        EnumerationLimits limits = {});

/// Sorts into the canonical (degree, entries) order.
void sort_canonical(std::vector<Configuration>& cfgs, int rank);

} // namespace fsrec

#endif
