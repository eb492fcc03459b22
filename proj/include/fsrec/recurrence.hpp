#ifndef FSREC_RECURRENCE_HPP
#define FSREC_RECURRENCE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fsrec/index_sets.hpp"
#include "fsrec/qseries.hpp"
#include "fsrec/types.hpp"

namespace fsrec {

/// Character by exhaustive enumeration of admissible configurations. This is
/// the reference every other route is checked against.
Character compute_character(const LevelComposition& K, int truncation_order);

using CharacterProvider = std::function<Character(const LevelComposition&, int)>;

/// Memoizes a provider (compute_character by default) per composition at a
/// fixed truncation order.
class CharacterTable {
public:
    explicit CharacterTable(int truncation_order, CharacterProvider provider = compute_character);

    int truncation_order() const { return truncation_order_; }
    const Character& get(const LevelComposition& K);

private:
    int truncation_order_;
    CharacterProvider provider_;
    std::map<LevelComposition, Character> cache_;
};

/// Σ_{I ∈ D(K)} (-1)^{|I|} χ(W_I)
Character recurrence_lhs(const LevelComposition& K, int truncation_order);
Character recurrence_lhs(const LevelComposition& K, CharacterTable& table);

/// q^{|n|} χ(W_shift)^{n - (k_0..k_{ℓ-1})}
Character recurrence_rhs(const LevelComposition& K, CharacterTable& table);

struct Counterexample {
    LevelComposition K;
    std::vector<IndexSet> index_sets;
    WeightVector weight;
    int q_power = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

struct CompositionOutcome {
    LevelComposition K;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

struct VerificationReport {
    int rank = 0;
    int level = 0;
    int truncation_order = 0;
    std::vector<CompositionOutcome> outcomes;

    bool passed() const;
};

/// First mismatch of two characters in canonical (weight, q-power) order.
std::optional<std::pair<WeightVector, int>> first_mismatch(const Character& a, const Character& b);

/// Checks the character recurrence for every composition of `level` (or only
/// `only`) coefficientwise through q^M.
VerificationReport verify_recurrence(int rank, int level, int truncation_order,
                                     const std::optional<LevelComposition>& only = std::nullopt,
                                     CharacterProvider provider = compute_character);

/// Degree-1 layer (a_0, ..., a_{ℓ-1}) of a configuration.
struct FirstBlock {
    std::vector<int> entries;

    int total() const;
    bool is_zero() const { return total() == 0; }
    bool operator==(const FirstBlock&) const = default;
};

/// a_0 + ... + a_j <= k_0 + ... + k_j - [j in I] for all j < ℓ.
bool block_in_region(const FirstBlock& a, const LevelComposition& K, const IndexSet& I = {});

/// All blocks in the region of K, ordered by total, then lexicographically descending.
std::vector<FirstBlock> enumerate_first_blocks(const LevelComposition& K);

/// Composition (k - |a|, a_0, ..., a_{ℓ-1}) of what remains after stripping block a.
LevelComposition block_remainder(const FirstBlock& a, int level);
/// (n_1 - a_0, ..., n_ℓ - a_{ℓ-1})
WeightVector subtract_block(const WeightVector& n, const FirstBlock& a);

/// Σ over nonempty I ∈ D(K) with a in the region of I, of (-1)^{|I|-1}.
int block_cancellation_factor(const FirstBlock& a, const LevelComposition& K);

/// Recursive coefficient solver: A_K^n from the geometric-factor recursion,
/// memoized per (composition, weight). Negative weights are zero. Not
/// thread-safe; confine an instance to one thread.
class CoefficientSolver {
public:
    explicit CoefficientSolver(int truncation_order);

    int truncation_order() const { return truncation_order_; }
    QPolynomial solve(const LevelComposition& K, const WeightVector& n);
    Character solve_character(const LevelComposition& K);
    std::size_t memo_size() const { return memo_.size(); }

private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    QPolynomial compute(const LevelComposition& K, const WeightVector& n);

    int truncation_order_;
    std::map<Key, QPolynomial> memo_;
    std::map<LevelComposition, std::vector<FirstBlock>> inner_blocks_;
    std::map<LevelComposition, std::vector<FirstBlock>> outer_blocks_;
};

QPolynomial solve_coefficient(const LevelComposition& K, const WeightVector& n, int truncation_order);
Character solve_character(const LevelComposition& K, int truncation_order);

/// A_K^n = q^{|n|} Σ_{a in region of K} A_{(k-|a|, a)}^{n-a}, both sides from
/// `table` (oracle values), compared through q^M.
bool verify_equality_identity(const LevelComposition& K, const WeightVector& n,
                              CharacterTable& table);
bool verify_equality_identity(const LevelComposition& K, const WeightVector& n,
                              int truncation_order);

} // namespace fsrec

#endif
