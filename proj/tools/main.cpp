// Command-line front end: descriptor computations, verification suites and
// the conjecture scan. Exit status: 0 success, 1 failed verification,
// 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bordism/bordism.hpp"
#include "bordism/parallel.hpp"
#include "bordism/serialize.hpp"
#include "bordism/theorems.hpp"

namespace {

using namespace bordism;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ManifoldExpr parse_descriptor(const std::string& text) {
    try {
        return parse_manifold(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + " (descriptor: \"" + text + "\")");
    }
}

struct Options {
    std::string format = "text";
    std::string out_path;
    std::string cache_path;
    int jobs = default_jobs();
    int max_dim = 16;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write output file: " + opt.out_path);
    out << text;
}

std::string render_json(const Json& j) {
    return j.dump(2) + "\n";
}

int cmd_sw_class(const Options& opt, const std::string& descriptor) {
    const ManifoldExpr M = parse_descriptor(descriptor);
    const auto model = cohomology_model(M);
    const Gf2Poly w = total_sw_class(M, model);
    if (opt.format == "json") {
        Json j;
        j["manifold"] = M.to_string();
        j["dim"] = M.dimension();
        Json gens = Json::array();
        for (const auto& g : model.ring->generators())
            gens.push_back({{"name", g.name}, {"degree", g.degree}, {"truncation", g.truncation}});
        j["generators"] = std::move(gens);
        Json terms = Json::array();
        std::vector<std::uint64_t> order(w.packed_terms());
        std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
            const int da = model.ring->degree_of_code(a);
            const int db = model.ring->degree_of_code(b);
            return da != db ? da < db : a < b;
        });
        for (const auto code : order)
            terms.push_back(model.ring->monomial_text(code));
        j["terms"] = std::move(terms);
        write_output(opt, render_json(j));
    } else {
        std::ostringstream os;
        os << "manifold: " << M.to_string() << "\n";
        os << "dim: " << M.dimension() << "\n";
        os << "W = " << w.to_string() << "\n";
        write_output(opt, os.str());
    }
    return 0;
}

int cmd_sw_numbers(const Options& opt, ProfileCache& cache, const std::string& descriptor) {
    const ManifoldExpr M = parse_descriptor(descriptor);
    const auto profile = cache.get_or_compute(M, opt.jobs);
    if (opt.format == "json") {
        write_output(opt, render_json(profile_to_json(M, *profile)));
    } else {
        std::ostringstream os;
        os << "manifold: " << M.to_string() << "\n";
        os << "dim: " << profile->dim << "\n";
        const auto parts = partitions(profile->dim);
        for (std::size_t i = 0; i < parts.size(); ++i)
            os << parts[i].to_string() << " " << int(profile->bits[i]) << "\n";
        os << "bits: " << profile->bit_string() << "\n";
        write_output(opt, os.str());
    }
    return 0;
}

int cmd_bounds(const Options& opt, ProfileCache& cache, const std::string& descriptor) {
    const ManifoldExpr M = parse_descriptor(descriptor);
    const bool b = cache.get_or_compute(M, opt.jobs)->all_zero();
    if (opt.format == "json") {
        Json j;
        j["manifold"] = M.to_string();
        j["bounds"] = b;
        write_output(opt, render_json(j));
    } else {
        write_output(opt, std::string(b ? "true" : "false") + "\n");
    }
    return 0;
}

int cmd_bordant(const Options& opt, ProfileCache& cache, const std::string& left,
                const std::string& right) {
    const ManifoldExpr M = parse_descriptor(left);
    const ManifoldExpr N = parse_descriptor(right);
    BordismComparison cmp;
    if (M.dimension() != N.dimension()) {
        cmp.dimension_mismatch = true;
    } else {
        const auto pm = cache.get_or_compute(M, opt.jobs);
        const auto pn = cache.get_or_compute(N, opt.jobs);
        const auto parts = partitions(M.dimension());
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (pm->bits[i] != pn->bits[i])
                cmp.mismatches.push_back(parts[i]);
        cmp.bordant = cmp.mismatches.empty();
    }
    if (opt.format == "json") {
        Json j;
        j["left"] = M.to_string();
        j["right"] = N.to_string();
        j["left_dim"] = M.dimension();
        j["right_dim"] = N.dimension();
        j["bordant"] = cmp.bordant;
        j["dimension_mismatch"] = cmp.dimension_mismatch;
        Json mism = Json::array();
        for (const auto& p : cmp.mismatches)
            mism.push_back(p.parts);
        j["mismatched_partitions"] = std::move(mism);
        write_output(opt, render_json(j));
    } else {
        std::ostringstream os;
        os << (cmp.bordant ? "true" : "false") << "\n";
        if (cmp.dimension_mismatch)
            os << "dimension mismatch: " << M.dimension() << " vs " << N.dimension() << "\n";
        else
            for (const auto& p : cmp.mismatches)
                os << "mismatch at " << p.to_string() << "\n";
        write_output(opt, os.str());
    }
    return 0;
}

int cmd_euler(const Options& opt, ProfileCache& cache, const std::string& descriptor) {
    const ManifoldExpr M = parse_descriptor(descriptor);
    const int formula = euler_mod2(M);
    // The single-part partition [dim] is first in canonical order; for a
    // 0-manifold the empty partition plays the same role.
    const auto profile = cache.get_or_compute(M, opt.jobs);
    const int top_sw = int(profile->bits.at(0));
    const bool agree = formula == top_sw;
    if (opt.format == "json") {
        Json j;
        j["manifold"] = M.to_string();
        j["formula"] = formula;
        j["top_sw"] = top_sw;
        j["agree"] = agree;
        write_output(opt, render_json(j));
    } else {
        std::ostringstream os;
        os << "chi mod 2 (fibration formula): " << formula << "\n";
        os << "chi mod 2 (top SW number): " << top_sw << "\n";
        write_output(opt, os.str());
    }
    return agree ? 0 : 1;
}

int cmd_verify(const Options& opt, ProfileCache& cache, const std::string& suite) {
    std::ostringstream os;
    bool passed = false;
    Json j;
    if (const auto tag = family_tag_from_name(suite)) {
        const FamilyReport report = verify_family(*tag, opt.max_dim, cache, opt.jobs);
        passed = report.passed();
        j = family_report_to_json(report);
        os << "suite: " << suite << "\n";
        os << "max dim: " << report.dim_cap << "\n";
        os << "pairs: " << report.pairs << "\n";
        os << "failures: " << report.failures.size() << "\n";
        for (const auto& f : report.failures) {
            os << "FAIL " << f.pair.milnor.to_string() << " vs "
               << f.pair.partner.to_string() << " (" << f.pair.parameters.to_string() << ")";
            for (const auto& p : f.mismatches)
                os << " " << p.to_string();
            os << "\n";
        }
    } else if (suite == "prop5") {
        const Prop5Report report = prop5_check(opt.max_dim, cache, opt.jobs);
        passed = report.passed();
        j = prop5_report_to_json(report);
        os << "suite: prop5\n";
        os << "max dim: " << report.dim_cap << "\n";
        os << "candidates: " << report.candidates << "\n";
        os << "dold comparisons: " << report.dold_comparisons << "\n";
        os << "violations: " << report.violations.size() << "\n";
        for (const auto& v : report.violations)
            os << "FAIL " << v << "\n";
    } else if (suite == "result2" || suite == "result3") {
        const PredicateReport report = suite == "result2"
                                           ? check_milnor_bounds_predicate(opt.max_dim, cache, opt.jobs)
                                           : check_dold_bounds_predicate(opt.max_dim, cache, opt.jobs);
        passed = report.passed();
        j = predicate_report_to_json(report);
        os << "suite: " << suite << "\n";
        os << "max dim: " << report.dim_cap << "\n";
        os << "checked: " << report.checked << "\n";
        os << "mismatches: " << report.mismatches.size() << "\n";
        for (const auto& m : report.mismatches)
            os << "FAIL predicate disagrees with the profile for " << m << "\n";
    } else {
        throw UsageError("unknown verify suite '" + suite +
                         "' (expected remark1|prop1|prop2|prop3|prop4|prop5|result2|result3)");
    }
    os << "result: " << (passed ? "PASS" : "FAIL") << "\n";
    write_output(opt, opt.format == "json" ? render_json(j) : os.str());
    return passed ? 0 : 1;
}

int cmd_scan(const Options& opt, ProfileCache& cache) {
    const ScanReport report = conjecture_scan(opt.max_dim, cache, opt.jobs);
    const auto counterexamples = report.conjecture_counterexamples();
    if (opt.format == "json") {
        write_output(opt, render_json(scan_report_to_json(report)));
    } else {
        std::ostringstream os;
        os << "scan max dim: " << report.dim_cap << "\n";
        for (const auto& c : report.candidates) {
            os << c.manifold.to_string() << " dim=" << c.dim
               << " bounds=" << (c.bounds ? "yes" : "no") << " covered=";
            if (c.covered_by)
                os << family_tag_name(*c.covered_by) << "(" << c.parameters.to_string() << ")";
            else
                os << "none";
            os << " matches=";
            const bool searched = !c.bounds && (!c.covered_by || *c.covered_by == FamilyTag::Prop4);
            if (!searched) {
                os << "-";
            } else if (c.dold_matches.empty()) {
                os << "none";
            } else {
                for (std::size_t i = 0; i < c.dold_matches.size(); ++i)
                    os << (i ? "," : "") << c.dold_matches[i].to_string();
            }
            os << "\n";
        }
        os << "residual counterexamples: " << counterexamples.size() << "\n";
        write_output(opt, os.str());
    }
    return counterexamples.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stiefel-Whitney number calculator and unoriented-bordism "
                 "verifier for Dold and Milnor manifolds"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    if (const char* env = std::getenv("BORDISM_CACHE"))
        opt.cache_path = env;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "Write the report to a file instead of stdout");
    app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", opt.cache_path, "Profile cache file (default: $BORDISM_CACHE)");

    std::string descriptor, right, suite;

    auto* sw_class = app.add_subcommand("sw-class", "Total Stiefel-Whitney class");
    sw_class->add_option("manifold", descriptor)->required();

    auto* sw_numbers = app.add_subcommand("sw-numbers", "All Stiefel-Whitney numbers");
    sw_numbers->add_option("manifold", descriptor)->required();

    auto* bordant_cmd = app.add_subcommand("bordant", "Decide unoriented bordance");
    bordant_cmd->add_option("left", descriptor)->required();
    bordant_cmd->add_option("right", right)->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Decide whether the manifold bounds");
    bounds_cmd->add_option("manifold", descriptor)->required();

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic mod 2, two ways");
    euler_cmd->add_option("manifold", descriptor)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "remark1|prop1|prop2|prop3|prop4|prop5|result2|result3")
        ->required();
    verify_cmd->add_option("--max-dim", opt.max_dim, "Dimension cap")->capture_default_str();

    auto* scan_cmd = app.add_subcommand("scan", "Conjecture scan over all Milnor manifolds");
    scan_cmd->add_option("--max-dim", opt.max_dim, "Dimension cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ProfileCache cache;
        if (!opt.cache_path.empty())
            cache.load_file(opt.cache_path);
        int status = 0;
        if (sw_class->parsed())
            status = cmd_sw_class(opt, descriptor);
        else if (sw_numbers->parsed())
            status = cmd_sw_numbers(opt, cache, descriptor);
        else if (bordant_cmd->parsed())
            status = cmd_bordant(opt, cache, descriptor, right);
        else if (bounds_cmd->parsed())
            status = cmd_bounds(opt, cache, descriptor);
        else if (euler_cmd->parsed())
            status = cmd_euler(opt, cache, descriptor);
        else if (verify_cmd->parsed())
            status = cmd_verify(opt, cache, suite);
        else if (scan_cmd->parsed())
            status = cmd_scan(opt, cache);
        if (!opt.cache_path.empty())
            cache.append_new_entries(opt.cache_path);
        return status;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
