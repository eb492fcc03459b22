#include "fsrec/index_sets.hpp"

#include <algorithm>

#include "fsrec/combinatorics.hpp"
#include "fsrec/errors.hpp"

namespace fsrec {

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw DuplicateElementError("index set has a repeated element");
    if (!elements_.empty() && elements_.front() < 0)
        throw InvalidIndexError("index set elements must be nonnegative");
}

bool IndexSet::contains(int i) const {
    return std::binary_search(elements_.begin(), elements_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

IndexSet IndexSet::with(int i) const {
    if (contains(i)) throw DuplicateElementError("element " + std::to_string(i) + " already in set");
    std::vector<int> e(elements_);
    e.push_back(i);
    return IndexSet(std::move(e));
}

IndexSet IndexSet::united(const IndexSet& other) const {
    std::vector<int> e;
    std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                   other.elements_.end(), std::back_inserter(e));
    return IndexSet(std::move(e));
}

std::string IndexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(elements_[i]);
    }
    return out + "}";
}

std::strong_ordering IndexSet::operator<=>(const IndexSet& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return elements_ <=> other.elements_;
}

std::vector<IndexSet> IndexFamily::all() const {
    std::vector<IndexSet> out;
    for (const auto& level : by_size) out.insert(out.end(), level.begin(), level.end());
    return out;
}

int m_of(const LevelComposition& K) {
    int m = 0;
    for (int i = 0; i < K.rank(); ++i)
        if (K[i] != 0) ++m;
    return m;
}

IndexFamily d_family(const LevelComposition& K) {
    std::vector<int> support;
    for (int i = 0; i < K.rank(); ++i)
        if (K[i] != 0) support.push_back(i);
    const int m = static_cast<int>(support.size());

    IndexFamily family;
    family.by_size.resize(m + 1);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> e;
        for (int b = 0; b < m; ++b)
            if (mask & (1u << b)) e.push_back(support[b]);
        family.by_size[e.size()].emplace_back(std::move(e));
    }
    for (auto& level : family.by_size) std::sort(level.begin(), level.end());
    return family;
}

void validate_index_set(const LevelComposition& K, const IndexSet& I) {
    for (int i : I.elements()) {
        if (i >= K.rank())
            throw InvalidIndexError("index " + std::to_string(i) + " out of range for rank " +
                                    std::to_string(K.rank()));
        if (K[i] == 0)
            throw InvalidIndexError("index " + std::to_string(i) + " selects a zero part of " +
                                    K.to_string());
    }
}

LevelComposition apply_index_set(const LevelComposition& K, const IndexSet& I) {
    validate_index_set(K, I);
    std::vector<int> parts(K.parts().begin(), K.parts().end());
    for (int i : I.elements()) {
        --parts[i];
        ++parts[i + 1];
    }
    return LevelComposition(std::move(parts));
}

LevelComposition cyclic_shift(const LevelComposition& K) {
    std::vector<int> parts(K.parts().begin(), K.parts().end());
    std::rotate(parts.rbegin(), parts.rbegin() + 1, parts.rend());
    return LevelComposition(std::move(parts));
}

std::vector<int> region_prefix_bounds(const LevelComposition& K, const IndexSet& A) {
    validate_index_set(K, A);
    std::vector<int> bounds(K.rank());
    for (int j = 0; j < K.rank(); ++j) bounds[j] = K.partial_sum(j) - (A.contains(j) ? 1 : 0);
    return bounds;
}

bool in_region(const Configuration& cfg, const LevelComposition& K, const IndexSet& A) {
    const auto bounds = region_prefix_bounds(K, A);
    if (!satisfies_difference(cfg, K.rank(), K.level())) return false;
    int prefix = 0;
    for (int j = 0; j < K.rank(); ++j) {
        prefix += cfg.at(j);
        if (prefix > bounds[j]) return false;
    }
    return true;
}

bool in_region_via_composition(const Configuration& cfg, const LevelComposition& K,
                               const IndexSet& A) {
    return is_admissible(cfg, apply_index_set(K, A));
}

bool in_sharp_region(const Configuration& cfg, const LevelComposition& K, const IndexSet& B) {
    if (!in_region(cfg, K, B)) return false;
    const IndexSet top = d_family(K).top();
    int prefix = 0;
    for (int j = 0; j < K.rank(); ++j) {
        prefix += cfg.at(j);
        if (top.contains(j) && !B.contains(j) && prefix != K.partial_sum(j)) return false;
    }
    return true;
}

bool in_sharp_region_definitional(const Configuration& cfg, const LevelComposition& K,
                                  const IndexSet& B) {
    if (!in_region(cfg, K, B)) return false;
    for (const auto& C : d_family(K).all()) {
        if (C != B && B.is_subset_of(C) && in_region(cfg, K, C)) return false;
    }
    return true;
}

int position_sign(const IndexSet& I, int i) {
    if (I.contains(i)) throw DuplicateElementError("element " + std::to_string(i) + " already in set");
    const auto e = I.elements();
    const auto p = std::lower_bound(e.begin(), e.end(), i) - e.begin();
    return p % 2 == 0 ? 1 : -1;
}

} // namespace fsrec
