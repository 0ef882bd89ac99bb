#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fpure/experiments.hpp"
#include "fpure/invariants.hpp"

namespace fpure {

using Json = nlohmann::json;

Json to_json(const Interval& interval);
Json to_json(const ThetaValue& theta);
/// Keys sorted; every numeric claim is paired with the formula that produced it.
Json to_json(const InvariantReport& report);
Json to_json(const FedderWitness& witness, const Ring& ring);
Json to_json(const StratumRecord& stratum);
Json to_json(const VerdictRecord& verdict);

std::string render_interval(const Interval& interval);
std::string render_text(const InvariantReport& report);
/// Aligned table, one row per stratum and level.
std::string render_table(const std::vector<StratumRecord>& strata);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace fpure
