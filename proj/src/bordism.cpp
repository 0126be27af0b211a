#include "bordism/bordism.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "bordism/parallel.hpp"

namespace bordism {

bool SwProfile::all_zero() const noexcept {
    return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; });
}

std::string SwProfile::bit_string() const {
    std::string s;
    s.reserve(bits.size());
    for (const auto b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

namespace {

// Everything sw_number needs, computed once per manifold: the model, the
// total class and its graded components up to the dimension.
struct ClassContext {
    CohomologyModel model;
    std::vector<Gf2Poly> components; // index = degree, 0..dim

    explicit ClassContext(const ManifoldExpr& M) : model(cohomology_model(M)) {
        const Gf2Poly w = total_sw_class(M, model);
        const int dim = M.dimension();
        components.reserve(static_cast<std::size_t>(dim) + 1);
        for (int i = 0; i <= dim; ++i)
            components.push_back(graded_component(w, i));
    }

    int number(const Partition& omega) const {
        Gf2Poly product = Gf2Poly::one(model.ring);
        for (const int part : omega.parts) { // parts descend, big (often zero) first
            product = product * components[static_cast<std::size_t>(part)];
            if (product.is_zero())
                return 0;
        }
        return evaluate_pairing(model, product);
    }
};

} // namespace

int sw_number(const ManifoldExpr& M, const Partition& omega) {
    if (omega.weight() != M.dimension())
        throw std::invalid_argument("sw_number: partition weight " +
                                    std::to_string(omega.weight()) +
                                    " does not match dim " + M.to_string() + " = " +
                                    std::to_string(M.dimension()));
    for (std::size_t i = 0; i < omega.parts.size(); ++i) {
        if (omega.parts[i] < 1)
            throw std::invalid_argument("sw_number: partition parts must be positive");
        if (i > 0 && omega.parts[i] > omega.parts[i - 1])
            throw std::invalid_argument("sw_number: partition parts must be non-increasing");
    }
    return ClassContext(M).number(omega);
}

SwProfile sw_profile(const ManifoldExpr& M, int jobs) {
    const ClassContext ctx(M);
    const auto parts = partitions(M.dimension());
    SwProfile profile;
    profile.dim = M.dimension();
    profile.bits.assign(parts.size(), 0);
    parallel_for(parts.size(), jobs, [&](std::size_t i) {
        profile.bits[i] = static_cast<std::uint8_t>(ctx.number(parts[i]));
    });
    return profile;
}

bool bounds(const ManifoldExpr& M) {
    return sw_profile(M).all_zero();
}

BordismComparison compare_bordism(const ManifoldExpr& M, const ManifoldExpr& N, int jobs) {
    BordismComparison cmp;
    if (M.dimension() != N.dimension()) {
        cmp.dimension_mismatch = true;
        return cmp;
    }
    const SwProfile pm = sw_profile(M, jobs);
    const SwProfile pn = sw_profile(N, jobs);
    const auto parts = partitions(M.dimension());
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (pm.bits[i] != pn.bits[i])
            cmp.mismatches.push_back(parts[i]);
    cmp.bordant = cmp.mismatches.empty();
    return cmp;
}

bool bordant(const ManifoldExpr& M, const ManifoldExpr& N) {
    return compare_bordism(M, N).bordant;
}

std::shared_ptr<const SwProfile> ProfileCache::get_or_compute(const ManifoldExpr& M, int jobs) {
    const std::string key = M.to_string();
    {
        std::lock_guard<std::mutex> lock(mu_);
        const auto it = map_.find(key);
        if (it != map_.end())
            return it->second;
    }
    auto profile = std::make_shared<const SwProfile>(sw_profile(M, jobs));
    std::lock_guard<std::mutex> lock(mu_);
    const auto [it, inserted] = map_.emplace(key, std::move(profile));
    if (inserted)
        computed_keys_.push_back(key);
    return it->second;
}

std::size_t ProfileCache::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return 0;
    std::size_t accepted = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto warn = [&](const std::string& why) {
            std::cerr << "warning: ignoring cache line " << line_no << " of " << path << ": "
                      << why << "\n";
        };
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            warn("missing field separator");
            continue;
        }
        const std::string descriptor = line.substr(0, tab);
        const std::string bits = line.substr(tab + 1);
        SwProfile profile;
        try {
            const ManifoldExpr M = parse_manifold(descriptor);
            profile.dim = M.dimension();
        } catch (const std::exception& e) {
            warn(e.what());
            continue;
        }
        if (bits.size() != partition_count(profile.dim)) {
            warn("bit count does not match the partition count of dim " +
                 std::to_string(profile.dim));
            continue;
        }
        bool ok = true;
        profile.bits.reserve(bits.size());
        for (const char c : bits) {
            if (c != '0' && c != '1') {
                ok = false;
                break;
            }
            profile.bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        if (!ok) {
            warn("bits must be 0 or 1");
            continue;
        }
        const std::string key = parse_manifold(descriptor).to_string();
        std::lock_guard<std::mutex> lock(mu_);
        if (map_.emplace(key, std::make_shared<const SwProfile>(std::move(profile))).second)
            ++accepted;
    }
    return accepted;
}

std::size_t ProfileCache::append_new_entries(const std::string& path) const {
    std::vector<std::pair<std::string, std::shared_ptr<const SwProfile>>> fresh;
    {
        std::lock_guard<std::mutex> lock(mu_);
        fresh.reserve(computed_keys_.size());
        for (const auto& key : computed_keys_)
            fresh.emplace_back(key, map_.at(key));
    }
    std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) {
        if (a.second->dim != b.second->dim)
            return a.second->dim < b.second->dim;
        return a.first < b.first;
    });
    if (fresh.empty())
        return 0;
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot open cache file for append: " + path);
    for (const auto& [key, profile] : fresh)
        out << key << '\t' << profile->bit_string() << '\n';
    return fresh.size();
}

std::size_t ProfileCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

} // namespace bordism
