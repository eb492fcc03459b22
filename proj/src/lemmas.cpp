#include "fsrec/lemmas.hpp"

#include <algorithm>

#include "fsrec/combinatorics.hpp"

namespace fsrec {

bool LemmaReport::passed() const {
    return std::all_of(lemmas.begin(), lemmas.end(),
                       [](const LemmaOutcome& l) { return l.violations == 0; });
}

namespace {

void record(LemmaOutcome& outcome, bool ok, const LevelComposition& K, const Configuration& cfg,
            std::vector<IndexSet> sets) {
    ++outcome.checks;
    if (ok) return;
    ++outcome.violations;
    if (!outcome.first_violation) outcome.first_violation = LemmaViolation{K, cfg, std::move(sets)};
}

} // namespace

LemmaReport check_lemmas(int rank, int level, int max_degree,
                         const std::optional<LevelComposition>& only) {
    LemmaReport report;
    report.rank = rank;
    report.level = level;
    report.max_degree = max_degree;
    report.compositions = only ? std::vector<LevelComposition>{*only} : compositions_of(rank, level);

    LemmaOutcome monotonicity{"monotonicity", 0, 0, std::nullopt};
    LemmaOutcome intersection{"intersection", 0, 0, std::nullopt};
    LemmaOutcome sharp{"sharp_region", 0, 0, std::nullopt};
    LemmaOutcome cover{"disjoint_cover", 0, 0, std::nullopt};
    LemmaOutcome duality{"region_duality", 0, 0, std::nullopt};

    const auto cfgs = enumerate_all_configurations(rank, max_degree);
    for (const auto& K : report.compositions) {
        const auto family = d_family(K).all();
        const std::size_t n = family.size();
        for (const auto& cfg : cfgs) {
            std::vector<char> in(n);
            for (std::size_t a = 0; a < n; ++a) {
                in[a] = in_region(cfg, K, family[a]);
                record(duality, in[a] == in_region_via_composition(cfg, K, family[a]), K, cfg,
                       {family[a]});
                record(sharp,
                       in_sharp_region(cfg, K, family[a]) ==
                           in_sharp_region_definitional(cfg, K, family[a]),
                       K, cfg, {family[a]});
            }
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    const auto& A = family[a];
                    const auto& B = family[b];
                    if (A.is_subset_of(B)) record(monotonicity, !in[b] || in[a], K, cfg, {A, B});
                    const auto U = A.united(B);
                    const auto u = std::find(family.begin(), family.end(), U) - family.begin();
                    record(intersection, (in[a] && in[b]) == static_cast<bool>(in[u]), K, cfg,
                           {A, B});
                }
                if (!in[a]) continue;
                int hits = 0;
                for (std::size_t b = 0; b < n; ++b)
                    if (family[a].is_subset_of(family[b]) && in_sharp_region(cfg, K, family[b]))
                        ++hits;
                record(cover, hits == 1, K, cfg, {family[a]});
            }
        }
    }
    report.lemmas = {monotonicity, intersection, sharp, cover, duality};
    return report;
}

} // namespace fsrec
