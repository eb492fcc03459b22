#ifndef FSREC_JSON_IO_HPP
#define FSREC_JSON_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "fsrec/exactness.hpp"
#include "fsrec/index_sets.hpp"
#include "fsrec/lemmas.hpp"
#include "fsrec/qseries.hpp"
#include "fsrec/recurrence.hpp"
#include "fsrec/types.hpp"

namespace fsrec {

using nlohmann::json;

void to_json(json& j, const LevelComposition& K);
void to_json(json& j, const Configuration& cfg);
void to_json(json& j, const WeightVector& n);
void to_json(json& j, const IndexSet& I);
void to_json(json& j, const IndexFamily& family);
void to_json(json& j, const QPolynomial& p);
void to_json(json& j, const Character& ch);
void to_json(json& j, const Counterexample& c);
void to_json(json& j, const VerificationReport& r);
void to_json(json& j, const GradeRecord& r);
void to_json(json& j, const ExactnessReport& r);
void to_json(json& j, const LemmaReport& r);

QPolynomial qpolynomial_from_json(const json& j);
Character character_from_json(const json& j);
LevelComposition composition_from_json(const json& j);

/// Compact, key-sorted serialization used for output and caching.
std::string canonical_dump(const json& j);

/// One header line plus one row per grade.
std::string exactness_csv(const std::vector<ExactnessReport>& reports);

} // namespace fsrec

#endif
