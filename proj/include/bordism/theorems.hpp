#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bordism/bordism.hpp"

namespace bordism {

// 2-adic valuation; nullopt encodes +infinity for x = 0 (every power of two
// divides 0).
std::optional<int> nu2(std::uint64_t x);

// True iff 2^{nu2(x)} > bound, under the nu2(0) = +infinity convention.
bool pow2_nu2_exceeds(std::uint64_t x, std::uint64_t bound);

// Closed form for "H(m,n) bounds", 0 <= m <= n: m = n, or m = 1, or mn odd,
// or n = 2 (mod 4) with m+1 < 2^{nu2(n+2)}. Throws if m > n.
bool milnor_bounds_predicate(int m, int n);

// Closed form for "P(m,n) bounds": n odd, or (n even, m odd, m > n and
// 2^{nu2(m-n-1)} > n); m = n+1 hits the nu2(0) = +infinity convention.
bool dold_bounds_predicate(int m, int n);

enum class FamilyTag { Remark1, Prop1, Prop2, Prop3, Prop4 };

std::string family_tag_name(FamilyTag tag); // "remark1", "prop1", ...
std::optional<FamilyTag> family_tag_from_name(std::string_view name);

// Parameters instantiating a family statement; fields absent when a family
// does not use them.
struct FamilyParameters {
    std::optional<int> alpha;
    std::optional<int> B;
    std::optional<int> m;
    std::optional<int> n;

    std::string to_string() const; // e.g. "alpha=2,n=5"
};

// A Milnor manifold paired with the partner the family statement names
// (a Dold manifold, or a product of real projective spaces for Prop4).
struct FamilyPair {
    ManifoldExpr milnor;
    ManifoldExpr partner;
    FamilyTag tag = FamilyTag::Remark1;
    FamilyParameters parameters;
};

// Every instantiation of the tagged family with common dimension <= dim_cap,
// in deterministic parameter order. Degenerate sides are skipped.
std::vector<FamilyPair> enumerate_family_pairs(FamilyTag tag, int dim_cap);

struct PairVerification {
    FamilyPair pair;
    bool bordant = false;
    std::vector<Partition> mismatches; // empty iff bordant
};

PairVerification verify_pair(const FamilyPair& pair, ProfileCache& cache, int jobs = 1);

// Verification of one family: every enumerated pair, profile-compared.
struct FamilyReport {
    FamilyTag tag = FamilyTag::Remark1;
    int dim_cap = 0;
    std::size_t pairs = 0;
    std::vector<PairVerification> failures;

    bool passed() const noexcept { return failures.empty(); }
};

FamilyReport verify_family(FamilyTag tag, int dim_cap, ProfileCache& cache, int jobs = 1);

// Exhaustive agreement check of a closed-form bounding predicate against the
// exact all-zero-profile test.
struct PredicateReport {
    std::string name;
    int dim_cap = 0;
    std::size_t checked = 0;
    std::vector<std::string> mismatches; // descriptors where they disagree

    bool passed() const noexcept { return mismatches.empty(); }
};

PredicateReport check_milnor_bounds_predicate(int dim_cap, ProfileCache& cache, int jobs = 1);
PredicateReport check_dold_bounds_predicate(int dim_cap, ProfileCache& cache, int jobs = 1);

// The polynomial-ring generators of the bordism algebra realized by these
// families: RP^{2t} and H(2^k, 2t*2^k), t,k >= 1, up to dim_cap.
std::vector<ManifoldExpr> milnor_generators(int dim_cap);

// For every non-bounding H(m,n) with m odd, n even, m < n and dim <= dim_cap:
// checks chi(H) = 0 mod 2, chi = 1 for every non-bounding Dold of that
// dimension, and that no equal-dimension Dold has the same profile.
struct Prop5Report {
    int dim_cap = 0;
    std::size_t candidates = 0;
    std::size_t dold_comparisons = 0;
    std::vector<std::string> violations;

    bool passed() const noexcept { return violations.empty(); }
};

Prop5Report prop5_check(int dim_cap, ProfileCache& cache, int jobs = 1);

// One row of the conjecture scan.
struct ScanCandidate {
    ManifoldExpr manifold;
    int dim = 0;
    bool bounds = false;
    std::optional<FamilyTag> covered_by;
    FamilyParameters parameters;          // witness when covered
    std::vector<ManifoldExpr> dold_matches; // equal-dimension Dolds found bordant
};

struct ScanReport {
    int dim_cap = 0;
    std::vector<ScanCandidate> candidates; // ordered by (dim, m, n)

    // Non-bounding candidates outside every family whose match list is
    // nonempty would contradict the conjecture.
    std::vector<const ScanCandidate*> conjecture_counterexamples() const;
};

// Enumerates all H(m,n), 0 <= m <= n, dim <= dim_cap; marks each bounding,
// covered (first family that applies, with witness parameters) or residual.
// The Dold-match search runs for residual and Prop4-covered non-bounding
// candidates.
ScanReport conjecture_scan(int dim_cap, ProfileCache& cache, int jobs = 1);

} // namespace bordism
