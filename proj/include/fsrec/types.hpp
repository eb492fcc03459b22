#ifndef FSREC_TYPES_HPP
#define FSREC_TYPES_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fsrec {

/// Highest weight k_0 Λ_0 + ... + k_ℓ Λ_ℓ, stored as its ℓ+1 multiplicities.
/// The level is always derived from the parts.
class LevelComposition {
public:
    explicit LevelComposition(std::vector<int> parts);

    int rank() const { return static_cast<int>(parts_.size()) - 1; }
    int level() const;
    int operator[](std::size_t i) const { return parts_[i]; }
    std::span<const int> parts() const { return parts_; }

    // k_0 + ... + k_j
    int partial_sum(int j) const;

    std::string to_string() const;

    auto operator<=>(const LevelComposition&) const = default;

private:
    std::vector<int> parts_;
};

/// All compositions of `level` into rank+1 nonnegative parts, in
/// lexicographically descending order: (k,0,...,0) first, (0,...,0,k) last.
std::vector<LevelComposition> compositions_of(int rank, int level);

/// Exponent sequence (a_0, a_1, ...) of a monomial. Position ℓ(j-1)+r-1
/// holds the exponent of color r at degree j. Always trailing-zero trimmed.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<int> entries);

    std::span<const int> entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    // zero past the support
    int at(int position) const;
    int particle_count() const;

    std::string to_string() const;

    auto operator<=>(const Configuration&) const = default;

private:
    std::vector<int> entries_;
};

/// Color weight (n_1, ..., n_ℓ). Ordered by total first, then lexicographically;
/// this is the canonical order for character tables.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> components);
    static WeightVector zero(int rank);

    int size() const { return static_cast<int>(components_.size()); }
    int operator[](std::size_t i) const { return components_[i]; }
    std::span<const int> components() const { return components_; }
    int total() const;
    bool is_nonnegative() const;

    std::string to_string() const;

    friend WeightVector operator+(const WeightVector& a, const WeightVector& b);
    friend WeightVector operator-(const WeightVector& a, const WeightVector& b);

    std::strong_ordering operator<=>(const WeightVector& other) const;
    bool operator==(const WeightVector& other) const = default;

private:
    std::vector<int> components_;
};

/// (degree, weight) pair indexing the graded pieces W^{d, n}.
struct Grade {
    int degree = 0;
    WeightVector weight;

    std::strong_ordering operator<=>(const Grade& other) const;
    bool operator==(const Grade& other) const = default;
};

/// All weight vectors of the given rank with nonnegative components and
/// total at most max_total, in canonical order.
std::vector<WeightVector> weights_up_to(int rank, int max_total);

} // namespace fsrec

#endif
