#include "bordism/serialize.hpp"

namespace bordism {

Json profile_to_json(const ManifoldExpr& M, const SwProfile& profile) {
    Json j;
    j["manifold"] = M.to_string();
    j["dim"] = profile.dim;
    Json parts = Json::array();
    for (const auto& p : partitions(profile.dim))
        parts.push_back(p.parts);
    j["partitions"] = std::move(parts);
    j["bits"] = profile.bit_string();
    return j;
}

Json parameters_to_json(const FamilyParameters& params) {
    Json j = Json::object();
    if (params.alpha)
        j["alpha"] = *params.alpha;
    if (params.B)
        j["B"] = *params.B;
    if (params.m)
        j["m"] = *params.m;
    if (params.n)
        j["n"] = *params.n;
    return j;
}

Json scan_report_to_json(const ScanReport& report) {
    Json j = Json::array();
    for (const auto& c : report.candidates) {
        Json row;
        row["manifold"] = c.manifold.to_string();
        row["dim"] = c.dim;
        row["bounds"] = c.bounds;
        if (c.covered_by)
            row["covered_by"] = family_tag_name(*c.covered_by);
        else
            row["covered_by"] = nullptr;
        row["parameters"] = c.covered_by ? parameters_to_json(c.parameters) : Json();
        Json matches = Json::array();
        for (const auto& d : c.dold_matches)
            matches.push_back(d.to_string());
        row["dold_matches"] = std::move(matches);
        j.push_back(std::move(row));
    }
    return j;
}

Json family_report_to_json(const FamilyReport& report) {
    Json j;
    j["suite"] = family_tag_name(report.tag);
    j["max_dim"] = report.dim_cap;
    j["pairs"] = report.pairs;
    j["failures"] = Json::array();
    for (const auto& f : report.failures) {
        Json row;
        row["milnor"] = f.pair.milnor.to_string();
        row["partner"] = f.pair.partner.to_string();
        row["parameters"] = parameters_to_json(f.pair.parameters);
        Json mism = Json::array();
        for (const auto& p : f.mismatches)
            mism.push_back(p.parts);
        row["mismatched_partitions"] = std::move(mism);
        j["failures"].push_back(std::move(row));
    }
    j["passed"] = report.passed();
    return j;
}

Json predicate_report_to_json(const PredicateReport& report) {
    Json j;
    j["suite"] = report.name;
    j["max_dim"] = report.dim_cap;
    j["checked"] = report.checked;
    j["mismatches"] = report.mismatches;
    j["passed"] = report.passed();
    return j;
}

Json prop5_report_to_json(const Prop5Report& report) {
    Json j;
    j["suite"] = "prop5";
    j["max_dim"] = report.dim_cap;
    j["candidates"] = report.candidates;
    j["dold_comparisons"] = report.dold_comparisons;
    j["violations"] = report.violations;
    j["passed"] = report.passed();
    return j;
}

} // namespace bordism
