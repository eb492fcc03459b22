#include "fsrec/exactness.hpp"

#include <algorithm>
#include <set>

#include "fsrec/combinatorics.hpp"
#include "fsrec/errors.hpp"

namespace fsrec {

namespace {

WeightVector first_block_weight(const LevelComposition& K) {
    return WeightVector(std::vector<int>(K.parts().begin(), K.parts().end() - 1));
}

std::map<Grade, std::vector<Configuration>> graded_region(const LevelComposition& K,
                                                          const IndexSet& I, int max_degree) {
    std::map<Grade, std::vector<Configuration>> out;
    const auto bounds = region_prefix_bounds(K, I);
    for_each_in_region(K.rank(), K.level(), bounds, max_degree, [&](std::span<const int> e, int d) {
        Configuration cfg(std::vector<int>(e.begin(), e.end()));
        auto w = weight(cfg, K.rank());
        out[Grade{d, std::move(w)}].push_back(std::move(cfg));
    });
    // the walk visits in entry-lexicographic order, so each list is already canonical
    return out;
}

const std::vector<Configuration>& empty_list() {
    static const std::vector<Configuration> none;
    return none;
}

} // namespace

Configuration omega_image(const Configuration& cfg, const LevelComposition& K) {
    if (!is_admissible(cfg, cyclic_shift(K)))
        throw PreconditionError("configuration " + cfg.to_string() + " is not admissible for " +
                                cyclic_shift(K).to_string());
    std::vector<int> entries(K.parts().begin(), K.parts().end() - 1);
    entries.insert(entries.end(), cfg.entries().begin(), cfg.entries().end());
    return Configuration(std::move(entries));
}

Grade omega_source_grade(const Grade& g, const LevelComposition& K) {
    return Grade{g.degree - g.weight.total(), g.weight - first_block_weight(K)};
}

GradedBasis build_graded_basis(const LevelComposition& K, const IndexSet& I, const Grade& grade) {
    GradedBasis basis{K, I, grade, {}};
    if (grade.weight.size() != K.rank()) throw RankMismatchError("grade weight rank mismatch");
    if (grade.degree < 0) return basis;
    auto graded = graded_region(K, I, grade.degree);
    if (auto it = graded.find(grade); it != graded.end()) basis.vectors = std::move(it->second);
    return basis;
}

bool is_complex(std::span<const SignMatrix> maps) {
    for (std::size_t t = 0; t + 1 < maps.size(); ++t) {
        if (maps[t].entries.cols() == 0 || maps[t + 1].entries.rows() == 0) continue;
        if (!multiply(maps[t + 1].entries, maps[t].entries).is_zero()) return false;
    }
    return true;
}

bool GradeRecord::passed() const {
    return omega_injective && image_is_kernel && image_characterized && complex && exact_middle &&
           surjective && euler_sum == 0;
}

bool ExactnessReport::passed() const {
    return std::all_of(grades.begin(), grades.end(), [](const GradeRecord& r) { return r.passed(); });
}

ExactnessLab::ExactnessLab(LevelComposition K, int max_degree)
    : composition_(std::move(K)), max_degree_(max_degree), family_(d_family(composition_)) {
    if (max_degree < 0) throw DomainError("max degree must be >= 0");
    for (const auto& I : family_.all()) node_bases_.emplace(I, graded_region(composition_, I, max_degree));
    shift_bases_ = graded_region(cyclic_shift(composition_), IndexSet{}, max_degree);
}

std::vector<Grade> ExactnessLab::grades() const {
    std::set<Grade> all;
    for (const auto& [_, graded] : node_bases_)
        for (const auto& [g, _] : graded) all.insert(g);
    return {all.begin(), all.end()};
}

const std::vector<Configuration>& ExactnessLab::basis(const IndexSet& I, const Grade& g) const {
    const auto node = node_bases_.find(I);
    if (node == node_bases_.end()) throw InvalidIndexError("index set " + I.to_string() + " not in D(K)");
    const auto it = node->second.find(g);
    return it == node->second.end() ? empty_list() : it->second;
}

const std::vector<Configuration>& ExactnessLab::omega_sources(const Grade& g) const {
    const auto src = omega_source_grade(g, composition_);
    if (src.degree < 0 || !src.weight.is_nonnegative()) return empty_list();
    const auto it = shift_bases_.find(src);
    return it == shift_bases_.end() ? empty_list() : it->second;
}

std::vector<BasisLabel> ExactnessLab::node_labels(int t, const Grade& g) const {
    std::vector<BasisLabel> labels;
    for (const auto& I : family_.by_size.at(t))
        for (const auto& cfg : basis(I, g)) labels.push_back(BasisLabel{I, cfg});
    return labels;
}

SignMatrix ExactnessLab::omega_matrix(const Grade& g) const {
    SignMatrix mat;
    mat.rows = node_labels(0, g);
    for (const auto& cfg : omega_sources(g)) mat.cols.push_back(BasisLabel{IndexSet{}, cfg});
    mat.entries = IntMatrix(mat.rows.size(), mat.cols.size());
    for (std::size_t c = 0; c < mat.cols.size(); ++c) {
        const BasisLabel image{IndexSet{}, omega_image(mat.cols[c].cfg, composition_)};
        const auto it = std::find(mat.rows.begin(), mat.rows.end(), image);
        if (it != mat.rows.end()) mat.entries(it - mat.rows.begin(), c) = 1;
    }
    return mat;
}

SignMatrix ExactnessLab::phi_matrix(int t, const Grade& g) const {
    if (t < 0 || t >= m())
        throw DomainError("stage " + std::to_string(t) + " out of range for m = " + std::to_string(m()));
    SignMatrix mat;
    mat.cols = node_labels(t, g);
    mat.rows = node_labels(t + 1, g);
    mat.entries = IntMatrix(mat.rows.size(), mat.cols.size());
    std::map<BasisLabel, std::size_t> row_of;
    for (std::size_t r = 0; r < mat.rows.size(); ++r) row_of.emplace(mat.rows[r], r);

    const auto& support = family_.by_size.at(1);
    for (std::size_t c = 0; c < mat.cols.size(); ++c) {
        const auto& [I, cfg] = mat.cols[c];
        for (const auto& single : support) {
            const int i = single.elements()[0];
            if (I.contains(i)) continue;
            // outside the target region the monomial vector is zero
            const auto it = row_of.find(BasisLabel{I.with(i), cfg});
            if (it != row_of.end()) mat.entries(it->second, c) = position_sign(I, i);
        }
    }
    return mat;
}

GradeRecord ExactnessLab::check(const Grade& g) const {
    GradeRecord rec;
    rec.grade = g;
    const int m_ = m();

    const auto omega = omega_matrix(g);
    std::vector<SignMatrix> maps{omega};
    for (int t = 0; t < m_; ++t) maps.push_back(phi_matrix(t, g));

    rec.dims.push_back(omega.cols.size());
    for (int t = 0; t <= m_; ++t) rec.dims.push_back(t == 0 ? omega.rows.size() : maps[t].rows.size());
    for (const auto& map : maps) rec.ranks.push_back(exact_rank(map.entries));

    const std::size_t sources = rec.dims[0];
    auto fail = [&rec](const std::string& what) {
        if (rec.witness.empty()) rec.witness = what;
    };

    // ω: every source lands on a distinct basis vector of W
    std::set<Configuration> images;
    bool all_landed = true;
    for (std::size_t c = 0; c < omega.cols.size(); ++c) {
        images.insert(omega_image(omega.cols[c].cfg, composition_));
        std::int64_t column_sum = 0;
        for (std::size_t r = 0; r < omega.rows.size(); ++r) column_sum += omega.entries(r, c);
        all_landed = all_landed && column_sum == 1;
    }
    rec.omega_injective = all_landed && images.size() == sources && rec.ranks[0] == sources;
    if (!rec.omega_injective)
        fail("omega: rank " + std::to_string(rec.ranks[0]) + " < " + std::to_string(sources) + " sources");

    // image of ω = configurations of W whose first block is (k_0, ..., k_{ℓ-1})
    std::set<Configuration> pinned;
    const int rank = composition_.rank();
    for (const auto& cfg : basis(IndexSet{}, g)) {
        bool match = true;
        for (int j = 0; j < rank; ++j) match = match && cfg.at(j) == composition_[j];
        if (match) pinned.insert(cfg);
    }
    rec.image_characterized = pinned == images;
    if (!rec.image_characterized) fail("omega image differs from the pinned-first-block set");

    rec.complex = is_complex(maps);
    if (!rec.complex) fail("a composite of consecutive maps is nonzero");

    // ker φ_0 = im ω; when m = 0 this says ω is onto W
    const std::size_t dim_w = rec.dims[1];
    const std::size_t rank_phi0 = m_ > 0 ? rec.ranks[1] : 0;
    rec.image_is_kernel = dim_w - rank_phi0 == sources;
    if (!rec.image_is_kernel)
        fail("dim ker phi_0 = " + std::to_string(dim_w - rank_phi0) + " but " + std::to_string(sources) +
             " omega sources");

    for (int t = 0; t + 1 < m_; ++t) {
        const std::size_t kernel = rec.dims[t + 2] - rec.ranks[t + 2];
        if (kernel != rec.ranks[t + 1]) {
            rec.exact_middle = false;
            fail("node " + std::to_string(t + 1) + ": dim ker phi_" + std::to_string(t + 1) + " = " +
                 std::to_string(kernel) + " != rank phi_" + std::to_string(t) + " = " +
                 std::to_string(rec.ranks[t + 1]));
        }
    }

    if (m_ > 0) {
        rec.surjective = rec.ranks[m_] == rec.dims[m_ + 1];
        if (!rec.surjective) fail("phi_" + std::to_string(m_ - 1) + " is not onto the last node");
    }

    std::int64_t euler = static_cast<std::int64_t>(sources);
    for (int t = 0; t <= m_; ++t) {
        const auto d = static_cast<std::int64_t>(rec.dims[t + 1]);
        euler += t % 2 == 0 ? -d : d;
    }
    rec.euler_sum = euler;
    if (euler != 0) fail("alternating dimension sum is " + std::to_string(euler));
    return rec;
}

ExactnessReport ExactnessLab::run() const {
    ExactnessReport report{composition_, max_degree_, m(), {}};
    for (const auto& g : grades()) report.grades.push_back(check(g));
    return report;
}

SignMatrix build_phi_matrix(const LevelComposition& K, int t, const Grade& grade) {
    const int m = m_of(K);
    if (t < 0 || t >= m)
        throw DomainError("stage " + std::to_string(t) + " out of range for m = " + std::to_string(m));
    return ExactnessLab(K, std::max(grade.degree, 0)).phi_matrix(t, grade);
}

bool verify_complex(const LevelComposition& K, const Grade& grade) {
    ExactnessLab lab(K, std::max(grade.degree, 0));
    std::vector<SignMatrix> maps{lab.omega_matrix(grade)};
    for (int t = 0; t < lab.m(); ++t) maps.push_back(lab.phi_matrix(t, grade));
    return is_complex(maps);
}

ExactnessReport verify_exactness(const LevelComposition& K, int max_degree) {
    return ExactnessLab(K, max_degree).run();
}

} // namespace fsrec
