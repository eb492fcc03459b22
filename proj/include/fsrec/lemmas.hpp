#ifndef FSREC_LEMMAS_HPP
#define FSREC_LEMMAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsrec/index_sets.hpp"
#include "fsrec/types.hpp"

namespace fsrec {

struct LemmaViolation {
    LevelComposition K;
    Configuration cfg;
    std::vector<IndexSet> index_sets;
};

struct LemmaOutcome {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t violations = 0;
    std::optional<LemmaViolation> first_violation;
};

struct LemmaReport {
    int rank = 0;
    int level = 0;
    int max_degree = 0;
    std::vector<LevelComposition> compositions;
    std::vector<LemmaOutcome> lemmas;

    bool passed() const;
};

/// Checks the region lemmas on every configuration of degree <= max_degree
/// (admissible or not) for every composition of `level` into rank+1 parts,
/// or only for `only` when given:
///   monotonicity     A ⊆ B  ⇒  B_B ⊆ B_A
///   intersection     B_{B1} ∩ B_{B2} = B_{B1 ∪ B2}
///   sharp_region     equality characterization of B^B agrees with its definition
///   disjoint_cover   each cfg in B_A lies in exactly one B^B with B ⊇ A
///   region_duality   inequality system agrees with admissibility for K_A
LemmaReport check_lemmas(int rank, int level, int max_degree,
                         const std::optional<LevelComposition>& only = std::nullopt);

} // namespace fsrec

#endif
