#ifndef FSREC_EXACTNESS_HPP
#define FSREC_EXACTNESS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fsrec/exact_rank.hpp"
#include "fsrec/index_sets.hpp"
#include "fsrec/types.hpp"

namespace fsrec {

/// Simple current on basis labels: prepend the block (k_0, ..., k_{ℓ-1}) and
/// move every particle of cfg up one degree. cfg must be admissible for
/// cyclic_shift(K).
Configuration omega_image(const Configuration& cfg, const LevelComposition& K);

/// Degree and weight of the ω-preimage space feeding grade `g` of W:
/// (d - |n|, n - (k_0, ..., k_{ℓ-1})).
Grade omega_source_grade(const Grade& g, const LevelComposition& K);

struct GradedBasis {
    LevelComposition composition;
    IndexSet index_set;
    Grade grade;
    std::vector<Configuration> vectors;
};

GradedBasis build_graded_basis(const LevelComposition& K, const IndexSet& I, const Grade& grade);

struct BasisLabel {
    IndexSet index_set;
    Configuration cfg;

    auto operator<=>(const BasisLabel&) const = default;
};

/// Matrix of a map between direct sums of graded pieces; columns are the
/// source basis, rows the target basis.
struct SignMatrix {
    std::vector<BasisLabel> rows;
    std::vector<BasisLabel> cols;
    IntMatrix entries;
};

/// True when every product of consecutive maps vanishes.
bool is_complex(std::span<const SignMatrix> maps);

struct GradeRecord {
    Grade grade;
    // [ω source, node_0, ..., node_m]
    std::vector<std::size_t> dims;
    // [rank ω, rank φ_0, ..., rank φ_{m-1}]
    std::vector<std::size_t> ranks;
    bool omega_injective = true;
    bool image_is_kernel = true;
    bool image_characterized = true;
    bool complex = true;
    bool exact_middle = true;
    bool surjective = true;
    std::int64_t euler_sum = 0;
    std::string witness;

    bool passed() const;
};

struct ExactnessReport {
    LevelComposition composition;
    int max_degree = 0;
    int m = 0;
    std::vector<GradeRecord> grades;

    bool passed() const;
};

/// Graded bases of W_I for every I ∈ D(K) and of W_{shift}, up to a degree
/// bound, with the maps of the sequence built per grade.
class ExactnessLab {
public:
    ExactnessLab(LevelComposition K, int max_degree);

    const LevelComposition& composition() const { return composition_; }
    int m() const { return family_.m(); }
    const IndexFamily& family() const { return family_; }

    // every grade where some node is nonzero, canonical order
    std::vector<Grade> grades() const;

    const std::vector<Configuration>& basis(const IndexSet& I, const Grade& g) const;
    const std::vector<Configuration>& omega_sources(const Grade& g) const;

    std::vector<BasisLabel> node_labels(int t, const Grade& g) const;
    SignMatrix omega_matrix(const Grade& g) const;
    SignMatrix phi_matrix(int t, const Grade& g) const;

    GradeRecord check(const Grade& g) const;
    ExactnessReport run() const;

private:
    using GradedMap = std::map<Grade, std::vector<Configuration>>;

    LevelComposition composition_;
    int max_degree_;
    IndexFamily family_;
    std::map<IndexSet, GradedMap> node_bases_;
    GradedMap shift_bases_;
};

SignMatrix build_phi_matrix(const LevelComposition& K, int t, const Grade& grade);
bool verify_complex(const LevelComposition& K, const Grade& grade);
ExactnessReport verify_exactness(const LevelComposition& K, int max_degree);

} // namespace fsrec

#endif
