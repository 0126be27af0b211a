#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bordism/manifolds.hpp"
#include "bordism/partitions.hpp"

namespace bordism {

// The full vector of Stiefel-Whitney numbers of a manifold, one bit per
// partition of its dimension in canonical order.
struct SwProfile {
    int dim = 0;
    std::vector<std::uint8_t> bits;

    bool all_zero() const noexcept;
    std::string bit_string() const;

    bool operator==(const SwProfile&) const = default;
};

// Stiefel-Whitney number of M for the partition omega; throws
// std::invalid_argument when omega's weight differs from dim M.
int sw_number(const ManifoldExpr& M, const Partition& omega);

// All Stiefel-Whitney numbers; partitions may be evaluated on `jobs` threads.
SwProfile sw_profile(const ManifoldExpr& M, int jobs = 1);

// Thom's criterion: a closed manifold bounds iff every SW number vanishes.
bool bounds(const ManifoldExpr& M);

struct BordismComparison {
    bool bordant = false;
    bool dimension_mismatch = false;
    // Partitions of the common dimension whose SW numbers differ.
    std::vector<Partition> mismatches;
};

BordismComparison compare_bordism(const ManifoldExpr& M, const ManifoldExpr& N, int jobs = 1);

// True iff dim M = dim N and the profiles agree bit for bit. Manifolds of
// different dimension are never bordant here, even if both bound.
bool bordant(const ManifoldExpr& M, const ManifoldExpr& N);

// Profile memo keyed by the descriptor normal form, safe for concurrent use.
// Optionally backed by an append-only cache file of lines
// "<descriptor>\t<bits>"; malformed lines are skipped with a warning.
class ProfileCache {
public:
    std::shared_ptr<const SwProfile> get_or_compute(const ManifoldExpr& M, int jobs = 1);

    // Loads entries from a cache file; returns the number accepted. Missing
    // files load zero entries silently; corrupt lines warn on stderr.
    std::size_t load_file(const std::string& path);

    // Appends entries computed since loading, sorted by (dim, descriptor) so
    // repeated runs produce identical files. Returns the number written.
    std::size_t append_new_entries(const std::string& path) const;

    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::shared_ptr<const SwProfile>> map_;
    std::vector<std::string> computed_keys_; // not loaded from a file
};

} // namespace bordism
