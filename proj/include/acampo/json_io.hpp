#pragma once

#include <string>

#include <json.hpp>

#include "acampo/generate.hpp"
#include "acampo/monodromy.hpp"
#include "acampo/report.hpp"

namespace acampo {

using json = nlohmann::json;

GermSpec germ_from_json(const json& j);
GermSpec germ_from_file(const std::string& path);
json germ_to_json(const GermSpec& g);

Divide divide_from_json(const json& j);
Divide divide_from_file(const std::string& path);
json divide_to_json(const Divide& d);

json validation_to_json(const ValidationReport& r);
json invariants_to_json(const GermInvariants& inv);
json dynkin_to_json(const DynkinGraph& g);
DynkinGraph dynkin_from_json(const json& j);
DynkinGraph dynkin_from_file(const std::string& path);
json classes_to_json(const std::vector<InvariantClass>& cs, const CycleLattice& lat);
json strata_to_json(const std::vector<StratumRecord>& records,
                    const std::vector<MultiplicityResult>& mults, long long n);
json monodromy_to_json(const SymplecticQuotient& sq, const IntMatrix& rad,
                       const SpEvidenceReport* evidence);
json decompose_to_json(const DecomposeReport& rep);
json limit_to_json(const HomologyLimitReport& rep);
json generated_to_json(const GeneratedDivide& gd);

}  // namespace acampo
