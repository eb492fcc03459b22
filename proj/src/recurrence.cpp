#include "fsrec/recurrence.hpp"

#include <algorithm>
#include <numeric>

#include "fsrec/combinatorics.hpp"
#include "fsrec/errors.hpp"

namespace fsrec {

Character compute_character(const LevelComposition& K, int truncation_order) {
    if (truncation_order < 0) throw DomainError("truncation order must be >= 0");
    const int rank = K.rank();
    std::map<WeightVector, std::vector<std::int64_t>> counts;
    std::vector<int> n(rank);
    std::vector<int> bounds(rank);
    for (int j = 0; j < rank; ++j) bounds[j] = K.partial_sum(j);

    for_each_in_region(rank, K.level(), bounds, truncation_order,
                       [&](std::span<const int> entries, int d) {
                           std::fill(n.begin(), n.end(), 0);
                           for (std::size_t p = 0; p < entries.size(); ++p)
                               n[p % rank] += entries[p];
                           auto& c = counts[WeightVector(n)];
                           if (c.empty()) c.assign(truncation_order + 1, 0);
                           ++c[d];
                       });

    Character ch(K, truncation_order);
    for (auto& [w, c] : counts) ch.set(w, QPolynomial(truncation_order, std::move(c)));
    return ch;
}

CharacterTable::CharacterTable(int truncation_order, CharacterProvider provider)
    : truncation_order_(truncation_order), provider_(std::move(provider)) {}

const Character& CharacterTable::get(const LevelComposition& K) {
    auto it = cache_.find(K);
    if (it == cache_.end()) it = cache_.emplace(K, provider_(K, truncation_order_)).first;
    return it->second;
}

Character recurrence_lhs(const LevelComposition& K, CharacterTable& table) {
    Character lhs(K, table.truncation_order());
    for (const auto& I : d_family(K).all()) {
        const auto& ch = table.get(apply_index_set(K, I));
        for (const auto& [n, poly] : ch.table()) {
            if (I.size() % 2 == 0) lhs.add(n, poly);
            else lhs.add(n, QPolynomial(table.truncation_order()) - poly);
        }
    }
    return lhs;
}

Character recurrence_lhs(const LevelComposition& K, int truncation_order) {
    CharacterTable table(truncation_order);
    return recurrence_lhs(K, table);
}

Character recurrence_rhs(const LevelComposition& K, CharacterTable& table) {
    return shift_substitute(table.get(cyclic_shift(K)), K);
}

bool VerificationReport::passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(),
                       [](const CompositionOutcome& o) { return o.passed; });
}

std::optional<std::pair<WeightVector, int>> first_mismatch(const Character& a, const Character& b) {
    std::vector<WeightVector> keys;
    for (const auto& [n, _] : a.table()) keys.push_back(n);
    for (const auto& [n, _] : b.table()) keys.push_back(n);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    const int M = std::min(a.truncation_order(), b.truncation_order());
    for (const auto& n : keys) {
        const auto pa = a.at(n);
        const auto pb = b.at(n);
        for (int d = 0; d <= M; ++d)
            if (pa[d] != pb[d]) return std::make_pair(n, d);
    }
    return std::nullopt;
}

VerificationReport verify_recurrence(int rank, int level, int truncation_order,
                                     const std::optional<LevelComposition>& only,
                                     CharacterProvider provider) {
    if (only && (only->rank() != rank || only->level() != level))
        throw RankMismatchError("composition " + only->to_string() + " does not match rank/level");
    VerificationReport report;
    report.rank = rank;
    report.level = level;
    report.truncation_order = truncation_order;

    CharacterTable table(truncation_order, std::move(provider));
    const auto compositions = only ? std::vector<LevelComposition>{*only} : compositions_of(rank, level);
    for (const auto& K : compositions) {
        const auto lhs = recurrence_lhs(K, table);
        const auto rhs = recurrence_rhs(K, table);
        CompositionOutcome outcome{K, true, std::nullopt};
        if (const auto miss = first_mismatch(lhs, rhs)) {
            outcome.passed = false;
            outcome.counterexample = Counterexample{K,
                                                    d_family(K).all(),
                                                    miss->first,
                                                    miss->second,
                                                    lhs.at(miss->first)[miss->second],
                                                    rhs.at(miss->first)[miss->second]};
        }
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

int FirstBlock::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

bool block_in_region(const FirstBlock& a, const LevelComposition& K, const IndexSet& I) {
    if (static_cast<int>(a.entries.size()) != K.rank())
        throw RankMismatchError("first block must have one entry per color");
    const auto bounds = region_prefix_bounds(K, I);
    int prefix = 0;
    for (int j = 0; j < K.rank(); ++j) {
        prefix += a.entries[j];
        if (prefix > bounds[j]) return false;
    }
    return true;
}

std::vector<FirstBlock> enumerate_first_blocks(const LevelComposition& K) {
    const int rank = K.rank();
    std::vector<FirstBlock> out;
    std::vector<int> current(rank, 0);
    // prefix sums bounded by k_0 + ... + k_j; walk position by position
    std::function<void(int, int)> walk = [&](int j, int prefix) {
        if (j == rank) {
            out.push_back(FirstBlock{current});
            return;
        }
        for (int v = 0; prefix + v <= K.partial_sum(j); ++v) {
            current[j] = v;
            walk(j + 1, prefix + v);
        }
        current[j] = 0;
    };
    walk(0, 0);
    std::sort(out.begin(), out.end(), [](const FirstBlock& a, const FirstBlock& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.entries > b.entries;
    });
    return out;
}

LevelComposition block_remainder(const FirstBlock& a, int level) {
    std::vector<int> parts;
    parts.reserve(a.entries.size() + 1);
    parts.push_back(level - a.total());
    parts.insert(parts.end(), a.entries.begin(), a.entries.end());
    return LevelComposition(std::move(parts));
}

WeightVector subtract_block(const WeightVector& n, const FirstBlock& a) {
    return n - WeightVector(a.entries);
}

int block_cancellation_factor(const FirstBlock& a, const LevelComposition& K) {
    int factor = 0;
    for (const auto& I : d_family(K).all()) {
        if (I.empty() || !block_in_region(a, K, I)) continue;
        factor += I.size() % 2 == 1 ? 1 : -1;
    }
    return factor;
}

CoefficientSolver::CoefficientSolver(int truncation_order) : truncation_order_(truncation_order) {
    if (truncation_order < 0) throw DomainError("truncation order must be >= 0");
}

QPolynomial CoefficientSolver::solve(const LevelComposition& K, const WeightVector& n) {
    if (n.size() != K.rank()) throw RankMismatchError("weight rank does not match composition");
    if (!n.is_nonnegative() || n.total() > truncation_order_) return QPolynomial(truncation_order_);
    if (n.total() == 0) return QPolynomial::constant(truncation_order_, 1);

    Key key{std::vector<int>(K.parts().begin(), K.parts().end()),
            std::vector<int>(n.components().begin(), n.components().end())};
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto value = compute(K, n);
    memo_.emplace(std::move(key), value);
    return value;
}

QPolynomial CoefficientSolver::compute(const LevelComposition& K, const WeightVector& n) {
    const int M = truncation_order_;
    const int k = K.level();

    auto inner = inner_blocks_.find(K);
    if (inner == inner_blocks_.end()) {
        // split the blocks of (k, 0, ..., 0) into those inside the region of K and the rest
        std::vector<int> top(K.rank() + 1, 0);
        top[0] = k;
        std::vector<FirstBlock> in, out;
        for (auto& a : enumerate_first_blocks(LevelComposition(std::move(top)))) {
            if (a.is_zero()) continue;
            (block_in_region(a, K) ? in : out).push_back(std::move(a));
        }
        inner = inner_blocks_.emplace(K, std::move(in)).first;
        outer_blocks_.emplace(K, std::move(out));
    }
    const auto& outer = outer_blocks_.at(K);

    QPolynomial inside(M);
    for (const auto& a : inner->second) inside += solve(block_remainder(a, k), subtract_block(n, a));
    QPolynomial outside(M);
    for (const auto& a : outer) outside += solve(block_remainder(a, k), subtract_block(n, a));

    return geometric_factor(n.total(), M) * (inside + outside.shifted(n.total()));
}

Character CoefficientSolver::solve_character(const LevelComposition& K) {
    Character ch(K, truncation_order_);
    for (const auto& n : weights_up_to(K.rank(), truncation_order_)) ch.set(n, solve(K, n));
    return ch;
}

QPolynomial solve_coefficient(const LevelComposition& K, const WeightVector& n, int truncation_order) {
    return CoefficientSolver(truncation_order).solve(K, n);
}

Character solve_character(const LevelComposition& K, int truncation_order) {
    return CoefficientSolver(truncation_order).solve_character(K);
}

bool verify_equality_identity(const LevelComposition& K, const WeightVector& n, CharacterTable& table) {
    if (!n.is_nonnegative()) throw DomainError("equality identity needs a nonnegative weight");
    const int M = table.truncation_order();
    const auto lhs = table.get(K).at(n);
    QPolynomial sum(M);
    for (const auto& a : enumerate_first_blocks(K)) {
        const auto rest = subtract_block(n, a);
        if (!rest.is_nonnegative()) continue;
        sum += table.get(block_remainder(a, K.level())).at(rest);
    }
    return lhs == sum.shifted(n.total());
}

bool verify_equality_identity(const LevelComposition& K, const WeightVector& n, int truncation_order) {
    CharacterTable table(truncation_order);
    return verify_equality_identity(K, n, table);
}

} // namespace fsrec
