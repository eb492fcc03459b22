// Runs the eight acceptance checks and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fsrec/cli.hpp"
#include "fsrec/combinatorics.hpp"
#include "fsrec/exactness.hpp"
#include "fsrec/index_sets.hpp"
#include "fsrec/json_io.hpp"
#include "fsrec/lemmas.hpp"
#include "fsrec/recurrence.hpp"
#include "oracles.hpp"

using namespace fsrec;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome recurrence_instance() {
    const auto start = Clock::now();
    const auto report = verify_recurrence(2, 2, 10);
    const double t = seconds_since(start);
    Outcome o;
    o.passed = report.passed() && report.outcomes.size() == 6 && t < 10.0;
    std::ostringstream d;
    d << report.outcomes.size() << " compositions, " << (report.passed() ? "all hold" : "mismatch") << ", " << t << " s";
    o.detail = d.str();
    return o;
}

Outcome exactness_instance() {
    const auto start = Clock::now();
    std::size_t grades = 0, failing = 0;
    const auto compositions = compositions_of(2, 2);
    for (const auto& K : compositions) {
        const auto report = verify_exactness(K, 8);
        grades += report.grades.size();
        for (const auto& g : report.grades) failing += !g.passed();
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << compositions.size() << " sequences, " << grades << " grades, " << failing << " failing, " << t << " s";
    return {failing == 0 && compositions.size() == 6 && t < 30.0, d.str()};
}

Outcome oracle_solver_equivalence() {
    const auto start = Clock::now();
    int checked = 0, mismatched = 0;
    std::string first;
    for (int rank = 1; rank <= 3; ++rank)
        for (int level = 1; level <= 3; ++level)
            for (const auto& K : compositions_of(rank, level)) {
                ++checked;
                if (canonical_dump(json(solve_character(K, 8))) != canonical_dump(json(compute_character(K, 8)))) {
                    if (!mismatched) first = " first " + K.to_string();
                    ++mismatched;
                }
            }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << checked << " compositions, " << mismatched << " mismatched" << first << ", " << t << " s";
    return {mismatched == 0 && t < 120.0, d.str()};
}

Outcome equality_identity() {
    int checked = 0, failed = 0;
    std::string first;
    for (int rank = 1; rank <= 2; ++rank)
        for (int level = 1; level <= 3; ++level) {
            CharacterTable table(8);
            for (const auto& K : compositions_of(rank, level))
                for (const auto& n : weights_up_to(rank, 5)) {
                    ++checked;
                    if (!verify_equality_identity(K, n, table)) {
                        if (!failed) first = " first " + K.to_string() + " n=" + n.to_string();
                        ++failed;
                    }
                }
        }
    std::ostringstream d;
    d << checked << " (K, n) pairs, " << failed << " failed" << first;
    return {failed == 0, d.str()};
}

Outcome lemma_suite() {
    std::int64_t checks = 0, violations = 0;
    for (int rank = 1; rank <= 3; ++rank)
        for (int level = 1; level <= 3; ++level) {
            const auto report = check_lemmas(rank, level, 6);
            for (const auto& lemma : report.lemmas) {
                checks += lemma.checks;
                violations += lemma.violations;
            }
        }
    std::ostringstream d;
    d << checks << " checks, " << violations << " violations";
    return {violations == 0 && checks > 0, d.str()};
}

Outcome rogers_ramanujan() {
    const int D = 20;
    int mismatches = 0;
    for (const auto& [parts, min_part] : std::vector<std::pair<std::vector<int>, int>>{{{1, 0}, 1}, {{0, 1}, 2}}) {
        const auto ch = compute_character(LevelComposition(parts), D);
        for (int d = 0; d <= D; ++d) {
            std::int64_t total = 0;
            for (const auto& [n, p] : ch.table()) total += p[d];
            mismatches += total != oracle::gap_two_partitions(d, min_part);
        }
    }
    return {mismatches == 0, "degrees 0.." + std::to_string(D) + ", " + std::to_string(mismatches) + " mismatches"};
}

Outcome block_cancellation() {
    int blocks = 0, wrong = 0;
    for (int rank = 1; rank <= 3; ++rank)
        for (int level = 1; level <= 3; ++level)
            for (const auto& K : compositions_of(rank, level)) {
                const std::vector<int> top(K.parts().begin(), K.parts().end() - 1);
                for (const auto& a : enumerate_first_blocks(K)) {
                    if (a.entries == top) continue;
                    ++blocks;
                    wrong += block_cancellation_factor(a, K) != 1;
                }
            }
    return {wrong == 0 && blocks > 0, std::to_string(blocks) + " blocks, " + std::to_string(wrong) + " wrong"};
}

Outcome cli_determinism() {
    const auto cache = std::filesystem::temp_directory_path() / "fsrec_acceptance_cache";
    std::filesystem::remove_all(cache);
    const std::vector<std::vector<std::string>> commands{
        {"enumerate", "--ell", "2", "--K", "1,1,0", "--max-degree", "6"},
        {"character", "--ell", "2", "--K", "1,0,1", "--M", "8", "--method", "enum"},
        {"character", "--ell", "2", "--K", "1,0,1", "--M", "8", "--method", "solve"},
        {"character", "--ell", "2", "--K", "1,0,1", "--M", "8", "--method", "both"},
        {"character", "--ell", "2", "--K", "2,0,0", "--M", "8", "--cache-dir", cache.string()},
        {"solve", "--ell", "3", "--K", "1,0,1,0", "--M", "6"},
        {"verify-recurrence", "--ell", "2", "--k", "2", "--M", "10"},
        {"verify-exactness", "--ell", "2", "--k", "2", "--max-degree", "8"},
        {"verify-exactness", "--ell", "2", "--k", "2", "--max-degree", "6", "--format", "csv"},
        {"lemmas", "--ell", "2", "--k", "3", "--max-degree", "6"},
    };
    int differing = 0;
    for (const auto& args : commands) {
        std::ostringstream out1, err1, out2, err2;
        const int c1 = run_cli(args, out1, err1);
        const int c2 = run_cli(args, out2, err2);
        differing += c1 != c2 || out1.str() != out2.str() || out1.str().empty();
    }
    std::filesystem::remove_all(cache);
    return {differing == 0, std::to_string(commands.size()) + " commands, " + std::to_string(differing) + " differing"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"recurrence system at rank 2, level 2, M=10", recurrence_instance},
        {"exact sequences at rank 2, level 2, degree <= 8", exactness_instance},
        {"solver equals oracle for rank, level in 1..3, M=8", oracle_solver_equivalence},
        {"equality identity for rank <= 2, level <= 3, total <= 5", equality_identity},
        {"region lemmas for rank <= 3, level <= 3, degree <= 6", lemma_suite},
        {"Rogers-Ramanujan counts through degree 20", rogers_ramanujan},
        {"block cancellation factor for rank <= 3, level <= 3", block_cancellation},
        {"CLI output is byte deterministic", cli_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
