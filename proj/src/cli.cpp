#include "fsrec/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fsrec/cache.hpp"
#include "fsrec/combinatorics.hpp"
#include "fsrec/errors.hpp"
#include "fsrec/exactness.hpp"
#include "fsrec/json_io.hpp"
#include "fsrec/lemmas.hpp"
#include "fsrec/recurrence.hpp"

namespace fsrec {

namespace {

struct RunConfig {
    int rank = 0;
    std::optional<int> level;
    std::string composition_text;
    int truncation_order = -1;
    int max_degree = -1;
    std::string method = "enum";
    std::string format = "json";
    std::string cache_dir;
    std::size_t output_cap = EnumerationLimits{}.max_outputs;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::optional<LevelComposition> parse_composition(const RunConfig& cfg) {
    if (cfg.composition_text.empty()) return std::nullopt;
    std::vector<int> parts;
    std::stringstream in(cfg.composition_text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--K expects comma-separated integers, got '" + cfg.composition_text + "'");
        }
    }
    if (static_cast<int>(parts.size()) != cfg.rank + 1)
        throw UsageError("--K has " + std::to_string(parts.size()) + " parts but --ell " +
                         std::to_string(cfg.rank) + " needs " + std::to_string(cfg.rank + 1));
    if (std::any_of(parts.begin(), parts.end(), [](int k) { return k < 0; }))
        throw UsageError("--K parts must be nonnegative");
    LevelComposition K(std::move(parts));
    if (cfg.level && *cfg.level != K.level())
        throw UsageError("--K sums to " + std::to_string(K.level()) + " but --k is " +
                         std::to_string(*cfg.level));
    return K;
}

void validate(const RunConfig& cfg) {
    if (cfg.rank < 1) throw UsageError("--ell must be >= 1");
    if (cfg.level && *cfg.level < 0) throw UsageError("--k must be >= 0");
}

LevelComposition require_composition(const RunConfig& cfg) {
    auto K = parse_composition(cfg);
    if (!K) throw UsageError("--K is required");
    return *K;
}

int require_level(const RunConfig& cfg, const std::optional<LevelComposition>& K) {
    if (cfg.level) return *cfg.level;
    if (K) return K->level();
    throw UsageError("--k (or --K) is required");
}

std::string cache_key(const LevelComposition& K, int M, const std::string& method) {
    std::ostringstream key;
    key << "fsrec-" << kVersion << "|ell=" << K.rank() << "|k=" << K.level() << "|K=";
    for (std::size_t i = 0; i < K.parts().size(); ++i) key << (i ? "," : "") << K[i];
    key << "|M=" << M << "|method=" << method;
    return key.str();
}

std::string resolve_cache_dir(const RunConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* env = std::getenv(kCacheDirEnv)) return env;
    return {};
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    const auto K = require_composition(cfg);
    if (cfg.max_degree < 0) throw UsageError("--max-degree must be >= 0");
    const auto cfgs = enumerate_admissible(K, cfg.max_degree, EnumerationLimits{cfg.output_cap});
    for (const auto& c : cfgs) {
        const json line{{"entries", c}, {"degree", degree(c, K.rank())}, {"weight", weight(c, K.rank())}};
        out << canonical_dump(line) << '\n';
    }
    return exit_code::ok;
}

int cmd_character(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto K = require_composition(cfg);
    if (cfg.truncation_order < 0) throw UsageError("--M must be >= 0");
    const int M = cfg.truncation_order;

    std::optional<ResultCache> cache;
    if (const auto dir = resolve_cache_dir(cfg); !dir.empty()) cache.emplace(dir);
    const auto key = cache_key(K, M, cfg.method);
    if (cache) {
        if (const auto hit = cache->load(key)) {
            err << "cache: hit " << cache->path_for(key).filename().string() << '\n';
            out << *hit;
            return hit->find("\"verdict\":\"mismatch\"") == std::string::npos ? exit_code::ok
                                                                             : exit_code::verification_failed;
        }
    }

    int code = exit_code::ok;
    std::string payload;
    if (cfg.method == "enum") {
        payload = canonical_dump(json(compute_character(K, M))) + '\n';
    } else if (cfg.method == "solve") {
        payload = canonical_dump(json(solve_character(K, M))) + '\n';
    } else {
        const auto oracle = compute_character(K, M);
        const auto solved = solve_character(K, M);
        const bool match = canonical_dump(json(oracle)) == canonical_dump(json(solved));
        payload = canonical_dump(json{{"enum", oracle}, {"solve", solved}, {"verdict", match ? "match" : "mismatch"}}) +
                  '\n';
        code = match ? exit_code::ok : exit_code::verification_failed;
    }
    if (cache) {
        cache->store(key, payload);
        err << "cache: stored " << cache->path_for(key).filename().string() << '\n';
    }
    out << payload;
    return code;
}

int cmd_verify_recurrence(const RunConfig& cfg, std::ostream& out) {
    const auto K = parse_composition(cfg);
    const int k = require_level(cfg, K);
    if (cfg.truncation_order < 0) throw UsageError("--M must be >= 0");
    const auto report = verify_recurrence(cfg.rank, k, cfg.truncation_order, K);
    out << json(report).dump(2) << '\n';
    return report.passed() ? exit_code::ok : exit_code::verification_failed;
}

int cmd_verify_exactness(const RunConfig& cfg, std::ostream& out) {
    const auto K = parse_composition(cfg);
    const int k = require_level(cfg, K);
    if (cfg.max_degree < 0) throw UsageError("--max-degree must be >= 0");
    std::vector<ExactnessReport> reports;
    const auto compositions = K ? std::vector<LevelComposition>{*K} : compositions_of(cfg.rank, k);
    for (const auto& c : compositions) reports.push_back(verify_exactness(c, cfg.max_degree));
    const bool passed = std::all_of(reports.begin(), reports.end(),
                                    [](const ExactnessReport& r) { return r.passed(); });
    if (cfg.format == "csv") {
        out << exactness_csv(reports);
    } else {
        const json doc{{"ell", cfg.rank},
                       {"k", k},
                       {"max_degree", cfg.max_degree},
                       {"passed", passed},
                       {"sequences", reports}};
        out << doc.dump(2) << '\n';
    }
    return passed ? exit_code::ok : exit_code::verification_failed;
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out) {
    const auto K = parse_composition(cfg);
    const int k = require_level(cfg, K);
    if (cfg.max_degree < 0) throw UsageError("--max-degree must be >= 0");
    const auto report = check_lemmas(cfg.rank, k, cfg.max_degree, K);
    out << json(report).dump(2) << '\n';
    return report.passed() ? exit_code::ok : exit_code::verification_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characters, recurrences and exact sequences for Feigin-Stoyanovsky type subspaces"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_rank = [&](CLI::App* sub) {
        sub->add_option("--ell", cfg.rank, "rank ℓ of A_ℓ")->required();
    };
    auto add_level = [&](CLI::App* sub) {
        sub->add_option_function<int>("--k", [&](const int& k) { cfg.level = k; }, "level k");
    };
    auto add_K = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--K", cfg.composition_text, "composition k0,k1,...,kℓ");
        if (required) opt->required();
    };

    auto* enumerate = app.add_subcommand("enumerate", "list admissible configurations as JSON lines");
    add_rank(enumerate);
    add_level(enumerate);
    add_K(enumerate, true);
    enumerate->add_option("--max-degree", cfg.max_degree, "degree bound")->required();
    enumerate->add_option("--cap", cfg.output_cap, "abort past this many configurations");

    auto* character = app.add_subcommand("character", "character table through q^M");
    auto* solve = app.add_subcommand("solve", "alias of character --method solve");
    for (auto* sub : {character, solve}) {
        add_rank(sub);
        add_level(sub);
        add_K(sub, true);
        sub->add_option("--M", cfg.truncation_order, "truncation order")->required();
        sub->add_option("--cache-dir", cfg.cache_dir, std::string("cache directory (default: $") + kCacheDirEnv + ")");
    }
    character->add_option("--method", cfg.method, "enum | solve | both")
        ->check(CLI::IsMember({"enum", "solve", "both"}));

    auto* recurrence = app.add_subcommand("verify-recurrence", "check the character recurrence system");
    add_rank(recurrence);
    add_level(recurrence);
    add_K(recurrence, false);
    recurrence->add_option("--M", cfg.truncation_order, "truncation order")->required();

    auto* exactness = app.add_subcommand("verify-exactness", "check the exact sequences grade by grade");
    add_rank(exactness);
    add_level(exactness);
    add_K(exactness, false);
    exactness->add_option("--max-degree", cfg.max_degree, "degree bound")->required();
    exactness->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    auto* lemmas = app.add_subcommand("lemmas", "check the region lemmas on all small configurations");
    add_rank(lemmas);
    add_level(lemmas);
    add_K(lemmas, false);
    lemmas->add_option("--max-degree", cfg.max_degree, "degree bound")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        validate(cfg);
        if (enumerate->parsed()) return cmd_enumerate(cfg, out);
        if (character->parsed()) return cmd_character(cfg, out, err);
        if (solve->parsed()) {
            cfg.method = "solve";
            return cmd_character(cfg, out, err);
        }
        if (recurrence->parsed()) return cmd_verify_recurrence(cfg, out);
        if (exactness->parsed()) return cmd_verify_exactness(cfg, out);
        if (lemmas->parsed()) return cmd_lemmas(cfg, out);
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::resource_cap;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

} // namespace fsrec
