#ifndef FSREC_INDEX_SETS_HPP
#define FSREC_INDEX_SETS_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "fsrec/types.hpp"

namespace fsrec {

/// Strictly increasing subset of {0, ..., ℓ-1}. Ordered by size, then
/// lexicographically, which fixes the block order of every φ matrix.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> elements);

    std::span<const int> elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool empty() const { return elements_.empty(); }
    bool contains(int i) const;
    bool is_subset_of(const IndexSet& other) const;

    IndexSet with(int i) const;
    IndexSet united(const IndexSet& other) const;

    std::string to_string() const;

    std::strong_ordering operator<=>(const IndexSet& other) const;
    bool operator==(const IndexSet& other) const = default;

private:
    std::vector<int> elements_;
};

/// D(K) split by cardinality: by_size[t] = D_t(K).
struct IndexFamily {
    std::vector<std::vector<IndexSet>> by_size;

    int m() const { return static_cast<int>(by_size.size()) - 1; }
    const IndexSet& top() const { return by_size.back().front(); }
    // every member, size-major
    std::vector<IndexSet> all() const;
};

/// Number of nonzero parts among k_0..k_{ℓ-1}.
int m_of(const LevelComposition& K);
IndexFamily d_family(const LevelComposition& K);

/// Throws InvalidIndexError unless every element i of I has 0 <= i < ℓ and k_i != 0.
void validate_index_set(const LevelComposition& K, const IndexSet& I);

/// k'_i = k_i - [i in I] + [i-1 in I]. Validity is checked against K itself.
LevelComposition apply_index_set(const LevelComposition& K, const IndexSet& I);

/// (k_ℓ, k_0, ..., k_{ℓ-1})
LevelComposition cyclic_shift(const LevelComposition& K);

/// Partial-sum bounds of the region B_A: k_0 + ... + k_j - [j in A].
std::vector<int> region_prefix_bounds(const LevelComposition& K, const IndexSet& A);

/// Membership in B_A through the inequality system directly.
bool in_region(const Configuration& cfg, const LevelComposition& K, const IndexSet& A);
/// Membership in B_A as admissibility for apply_index_set(K, A).
bool in_region_via_composition(const Configuration& cfg, const LevelComposition& K,
                               const IndexSet& A);

/// B^B through the partial-sum equalities on I_m \ B.
bool in_sharp_region(const Configuration& cfg, const LevelComposition& K, const IndexSet& B);
/// B^B = B_B minus every B_C with C a strict superset of B in D(K).
bool in_sharp_region_definitional(const Configuration& cfg, const LevelComposition& K,
                                  const IndexSet& B);

/// (-1)^p with p the rank of i inside the sorted union I ∪ {i}.
int position_sign(const IndexSet& I, int i);

} // namespace fsrec

#endif
