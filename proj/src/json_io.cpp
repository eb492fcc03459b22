#include "fsrec/json_io.hpp"

#include <sstream>

#include "fsrec/errors.hpp"

namespace fsrec {

namespace {

json ints(std::span<const int> values) { return json(std::vector<int>(values.begin(), values.end())); }

template <class T>
std::string joined(const std::vector<T>& values, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out << sep;
        out << values[i];
    }
    return out.str();
}

} // namespace

void to_json(json& j, const LevelComposition& K) { j = ints(K.parts()); }
void to_json(json& j, const Configuration& cfg) { j = ints(cfg.entries()); }
void to_json(json& j, const WeightVector& n) { j = ints(n.components()); }
void to_json(json& j, const IndexSet& I) { j = ints(I.elements()); }

void to_json(json& j, const IndexFamily& family) {
    j = json::object();
    for (std::size_t t = 0; t < family.by_size.size(); ++t) j[std::to_string(t)] = family.by_size[t];
}

void to_json(json& j, const QPolynomial& p) {
    j = json{{"M", p.truncation_order()},
             {"coeffs", std::vector<std::int64_t>(p.coefficients().begin(), p.coefficients().end())}};
}

void to_json(json& j, const Character& ch) {
    json table = json::array();
    for (const auto& [n, poly] : ch.table()) table.push_back(json{{"n", n}, {"poly", poly}});
    j = json{{"K", ch.composition()}, {"M", ch.truncation_order()}, {"table", std::move(table)}};
}

void to_json(json& j, const Counterexample& c) {
    j = json{{"K", c.K},     {"index_sets", c.index_sets}, {"weight", c.weight},
             {"q_power", c.q_power}, {"lhs", c.lhs},       {"rhs", c.rhs}};
}

void to_json(json& j, const VerificationReport& r) {
    json outcomes = json::array();
    for (const auto& o : r.outcomes) {
        json entry{{"K", o.K}, {"passed", o.passed}};
        entry["counterexample"] = o.counterexample ? json(*o.counterexample) : json(nullptr);
        outcomes.push_back(std::move(entry));
    }
    j = json{{"ell", r.rank},      {"k", r.level},       {"M", r.truncation_order},
             {"passed", r.passed()}, {"compositions", std::move(outcomes)}};
}

void to_json(json& j, const GradeRecord& r) {
    j = json{{"degree", r.grade.degree},
             {"weight", r.grade.weight},
             {"dims", r.dims},
             {"ranks", r.ranks},
             {"omega_injective", r.omega_injective},
             {"image_is_kernel", r.image_is_kernel},
             {"image_characterized", r.image_characterized},
             {"complex", r.complex},
             {"exact_middle", r.exact_middle},
             {"surjective", r.surjective},
             {"euler_sum", r.euler_sum},
             {"passed", r.passed()}};
    if (!r.witness.empty()) j["witness"] = r.witness;
}

void to_json(json& j, const ExactnessReport& r) {
    std::size_t failing = 0;
    for (const auto& g : r.grades) failing += g.passed() ? 0 : 1;
    j = json{{"K", r.composition},
             {"shift", cyclic_shift(r.composition)},
             {"max_degree", r.max_degree},
             {"m", r.m},
             {"index_sets", d_family(r.composition)},
             {"grades", r.grades},
             {"failing_grades", failing},
             {"passed", r.passed()}};
}

void to_json(json& j, const LemmaReport& r) {
    json lemmas = json::array();
    for (const auto& l : r.lemmas) {
        json entry{{"name", l.name}, {"checks", l.checks}, {"violations", l.violations}};
        if (l.first_violation) {
            entry["first_violation"] = json{{"K", l.first_violation->K},
                                            {"cfg", l.first_violation->cfg},
                                            {"index_sets", l.first_violation->index_sets}};
        }
        lemmas.push_back(std::move(entry));
    }
    j = json{{"ell", r.rank},
             {"k", r.level},
             {"max_degree", r.max_degree},
             {"compositions", r.compositions},
             {"lemmas", std::move(lemmas)},
             {"passed", r.passed()}};
}

QPolynomial qpolynomial_from_json(const json& j) {
    return QPolynomial(j.at("M").get<int>(), j.at("coeffs").get<std::vector<std::int64_t>>());
}

LevelComposition composition_from_json(const json& j) {
    return LevelComposition(j.get<std::vector<int>>());
}

Character character_from_json(const json& j) {
    Character ch(composition_from_json(j.at("K")), j.at("M").get<int>());
    for (const auto& entry : j.at("table"))
        ch.set(WeightVector(entry.at("n").get<std::vector<int>>()), qpolynomial_from_json(entry.at("poly")));
    return ch;
}

std::string canonical_dump(const json& j) { return j.dump(); }

std::string exactness_csv(const std::vector<ExactnessReport>& reports) {
    std::ostringstream out;
    out << "K,degree,weight,dims,ranks,euler_sum,passed\n";
    for (const auto& r : reports) {
        const auto K = std::vector<int>(r.composition.parts().begin(), r.composition.parts().end());
        for (const auto& g : r.grades) {
            const auto w = std::vector<int>(g.grade.weight.components().begin(),
                                            g.grade.weight.components().end());
            out << joined(K, ';') << ',' << g.grade.degree << ',' << joined(w, ';') << ','
                << joined(g.dims, ';') << ',' << joined(g.ranks, ';') << ',' << g.euler_sum << ','
                << (g.passed() ? "true" : "false") << '\n';
        }
    }
    return out.str();
}

} // namespace fsrec
