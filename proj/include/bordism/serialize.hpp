#pragma once

#include "json.hpp"

#include "bordism/bordism.hpp"
#include "bordism/theorems.hpp"

namespace bordism {

// Field order is fixed so reports can be diffed byte for byte.
using Json = nlohmann::ordered_json;

// {"manifold": "RP(2)", "dim": 2, "partitions": [[2],[1,1]], "bits": "11"}
Json profile_to_json(const ManifoldExpr& M, const SwProfile& profile);

// Array of candidate records: manifold, dim, bounds, covered_by, parameters,
// dold_matches.
Json scan_report_to_json(const ScanReport& report);

Json family_report_to_json(const FamilyReport& report);
Json predicate_report_to_json(const PredicateReport& report);
Json prop5_report_to_json(const Prop5Report& report);

Json parameters_to_json(const FamilyParameters& params);

} // namespace bordism
