#include "bordism/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bordism/parallel.hpp"

namespace bordism {

std::optional<int> nu2(std::uint64_t x) {
    if (x == 0)
        return std::nullopt;
    int v = 0;
    while ((x & 1) == 0) {
        x >>= 1;
        ++v;
    }
    return v;
}

bool pow2_nu2_exceeds(std::uint64_t x, std::uint64_t bound) {
    const auto v = nu2(x);
    if (!v)
        return true; // 2^infinity
    if (*v >= 63)
        return true;
    return (std::uint64_t{1} << *v) > bound;
}

bool milnor_bounds_predicate(int m, int n) {
    if (m < 0 || m > n)
        throw std::invalid_argument("milnor_bounds_predicate requires 0 <= m <= n");
    // Degenerate case first: H(0,n) = RP^{n-1}, which bounds iff n is even.
    // The (a)-(d) criterion below presupposes m >= 1; at m = 0 it misses
    // n = 0 (mod 4), e.g. H(0,4) = RP^3.
    if (m == 0)
        return n % 2 == 0;
    if (m == n)
        return true;
    if (m == 1)
        return true;
    if (m % 2 == 1 && n % 2 == 1)
        return true;
    if (n % 4 == 2) {
        const auto v = nu2(static_cast<std::uint64_t>(n) + 2);
        if (v && *v < 63 && static_cast<std::uint64_t>(m) + 1 < (std::uint64_t{1} << *v))
            return true;
    }
    return false;
}

bool dold_bounds_predicate(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("dold_bounds_predicate requires m, n >= 0");
    if (n % 2 == 1)
        return true;
    if (m % 2 == 1 && m > n)
        return pow2_nu2_exceeds(static_cast<std::uint64_t>(m - n - 1),
                                static_cast<std::uint64_t>(n));
    return false;
}

std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::Remark1: return "remark1";
    case FamilyTag::Prop1: return "prop1";
    case FamilyTag::Prop2: return "prop2";
    case FamilyTag::Prop3: return "prop3";
    case FamilyTag::Prop4: return "prop4";
    }
    return "?";
}

std::optional<FamilyTag> family_tag_from_name(std::string_view name) {
    for (const auto tag : {FamilyTag::Remark1, FamilyTag::Prop1, FamilyTag::Prop2,
                           FamilyTag::Prop3, FamilyTag::Prop4})
        if (family_tag_name(tag) == name)
            return tag;
    return std::nullopt;
}

std::string FamilyParameters::to_string() const {
    std::ostringstream os;
    bool first = true;
    const auto put = [&](const char* key, const std::optional<int>& v) {
        if (!v)
            return;
        if (!first)
            os << ",";
        os << key << "=" << *v;
        first = false;
    };
    put("alpha", alpha);
    put("B", B);
    put("m", m);
    put("n", n);
    return os.str();
}

namespace {

FamilyParameters params_alpha_n(int alpha, int n) {
    FamilyParameters p;
    p.alpha = alpha;
    p.n = n;
    return p;
}

FamilyParameters params_m_alpha_B(int m, int alpha, int B) {
    FamilyParameters p;
    p.m = m;
    p.alpha = alpha;
    p.B = B;
    return p;
}

// Smallest a >= 0 with 2^a >= x (x >= 1).
int ceil_log2(int x) {
    int a = 0;
    while ((1 << a) < x)
        ++a;
    return a;
}

// Prop4 partner: RP^m x RP^{2^alpha - 2} with zero-dimensional factors
// dropped; nullopt when nothing is left (m = 0, alpha = 1).
std::optional<ManifoldExpr> prop4_partner(int m, int alpha) {
    std::vector<ManifoldExpr> factors;
    if (m >= 1)
        factors.push_back(ManifoldExpr::real_projective(m));
    if ((1 << alpha) - 2 >= 1)
        factors.push_back(ManifoldExpr::real_projective((1 << alpha) - 2));
    if (factors.empty())
        return std::nullopt;
    if (factors.size() == 1)
        return factors.front();
    return ManifoldExpr::product(std::move(factors));
}

} // namespace

std::vector<FamilyPair> enumerate_family_pairs(FamilyTag tag, int dim_cap) {
    std::vector<FamilyPair> out;
    const auto add = [&](ManifoldExpr milnor, ManifoldExpr partner, FamilyParameters params) {
        out.push_back(FamilyPair{std::move(milnor), std::move(partner), tag, std::move(params)});
    };
    switch (tag) {
    case FamilyTag::Remark1:
        // H(0,n) = RP^{n-1} = P(n-1,0), n >= 1; dim n-1.
        for (int n = 1; n - 1 <= dim_cap; ++n) {
            FamilyParameters p;
            p.n = n;
            add(ManifoldExpr::milnor(0, n), ManifoldExpr::dold(n - 1, 0), p);
        }
        break;
    case FamilyTag::Prop1:
        // H(2^a - 2, n) ~ P(n - 2^a + 1, 2^a - 2), a >= 1, n >= 2^a - 1;
        // dim n + 2^a - 3.
        for (int alpha = 1; (1 << alpha) - 1 + (1 << alpha) - 3 <= dim_cap; ++alpha) {
            const int pow = 1 << alpha;
            for (int n = pow - 1; n + pow - 3 <= dim_cap; ++n)
                add(ManifoldExpr::milnor(pow - 2, n), ManifoldExpr::dold(n - pow + 1, pow - 2),
                    params_alpha_n(alpha, n));
        }
        break;
    case FamilyTag::Prop2:
        // H(m, m + 2^a B) ~ P(2^a B - 1, m), m >= 0, B >= 1, 2^a >= m+1;
        // dim 2m + 2^a B - 1.
        for (int m = 0; 2 * m + (1 << ceil_log2(m + 1)) - 1 <= dim_cap; ++m) {
            for (int alpha = ceil_log2(m + 1); 2 * m + (1 << alpha) - 1 <= dim_cap; ++alpha) {
                const int pow = 1 << alpha;
                for (int B = 1; 2 * m + pow * B - 1 <= dim_cap; ++B)
                    add(ManifoldExpr::milnor(m, m + pow * B),
                        ManifoldExpr::dold(pow * B - 1, m), params_m_alpha_B(m, alpha, B));
            }
        }
        break;
    case FamilyTag::Prop3:
        // H(2^a, 2^{a+1} B) ~ P(2^{a+1} B - 2^a - 1, 2^a), a, B >= 1;
        // dim 2^a + 2^{a+1} B - 1.
        for (int alpha = 1; 3 * (1 << alpha) - 1 <= dim_cap; ++alpha) {
            const int pow = 1 << alpha;
            for (int B = 1; pow + 2 * pow * B - 1 <= dim_cap; ++B) {
                FamilyParameters p;
                p.alpha = alpha;
                p.B = B;
                add(ManifoldExpr::milnor(pow, 2 * pow * B),
                    ManifoldExpr::dold(2 * pow * B - pow - 1, pow), p);
            }
        }
        break;
    case FamilyTag::Prop4:
        // H(m, 2^a - 1) ~ RP^m x RP^{2^a - 2}, m >= 0, 2^a > m+1;
        // dim m + 2^a - 2.
        for (int m = 0; m + (1 << ceil_log2(m + 2)) - 2 <= dim_cap; ++m) {
            for (int alpha = ceil_log2(m + 2); m + (1 << alpha) - 2 <= dim_cap; ++alpha) {
                const auto partner = prop4_partner(m, alpha);
                if (!partner)
                    continue;
                FamilyParameters p;
                p.m = m;
                p.alpha = alpha;
                add(ManifoldExpr::milnor(m, (1 << alpha) - 1), *partner, p);
            }
        }
        break;
    }
    return out;
}

PairVerification verify_pair(const FamilyPair& pair, ProfileCache& cache, int jobs) {
    PairVerification v;
    v.pair = pair;
    const auto pm = cache.get_or_compute(pair.milnor, jobs);
    const auto pp = cache.get_or_compute(pair.partner, jobs);
    if (pm->dim != pp->dim)
        throw std::logic_error("family pair with mismatched dimensions: " +
                               pair.milnor.to_string() + " vs " + pair.partner.to_string());
    const auto parts = partitions(pm->dim);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (pm->bits[i] != pp->bits[i])
            v.mismatches.push_back(parts[i]);
    v.bordant = v.mismatches.empty();
    return v;
}

FamilyReport verify_family(FamilyTag tag, int dim_cap, ProfileCache& cache, int jobs) {
    FamilyReport report;
    report.tag = tag;
    report.dim_cap = dim_cap;
    const auto pairs = enumerate_family_pairs(tag, dim_cap);
    report.pairs = pairs.size();
    std::vector<std::optional<PairVerification>> results(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        results[i] = verify_pair(pairs[i], cache, 1);
    });
    for (auto& r : results)
        if (!r->bordant)
            report.failures.push_back(std::move(*r));
    return report;
}

namespace {

// All (m, n) with 0 <= m <= n, (m,n) != (0,0) and dim H(m,n) <= dim_cap,
// ordered by (dim, m, n).
std::vector<std::pair<int, int>> milnor_range(int dim_cap) {
    std::vector<std::pair<int, int>> mn;
    for (int d = 0; d <= dim_cap; ++d)
        for (int m = 0; 2 * m <= d + 1; ++m) {
            const int n = d + 1 - m;
            if (n >= m && !(m == 0 && n == 0))
                mn.emplace_back(m, n);
        }
    return mn;
}

// All Dold manifolds of the given dimension, ordered by m.
std::vector<ManifoldExpr> dolds_of_dimension(int d) {
    std::vector<ManifoldExpr> out;
    for (int m = d % 2; m <= d; m += 2)
        out.push_back(ManifoldExpr::dold(m, (d - m) / 2));
    return out;
}

} // namespace

PredicateReport check_milnor_bounds_predicate(int dim_cap, ProfileCache& cache, int jobs) {
    PredicateReport report;
    report.name = "milnor-bounds";
    report.dim_cap = dim_cap;
    const auto mn = milnor_range(dim_cap);
    report.checked = mn.size();
    std::vector<std::uint8_t> bad(mn.size(), 0);
    parallel_for(mn.size(), jobs, [&](std::size_t i) {
        const auto [m, n] = mn[i];
        const auto profile = cache.get_or_compute(ManifoldExpr::milnor(m, n), 1);
        bad[i] = milnor_bounds_predicate(m, n) != profile->all_zero();
    });
    for (std::size_t i = 0; i < mn.size(); ++i)
        if (bad[i])
            report.mismatches.push_back(ManifoldExpr::milnor(mn[i].first, mn[i].second).to_string());
    return report;
}

PredicateReport check_dold_bounds_predicate(int dim_cap, ProfileCache& cache, int jobs) {
    PredicateReport report;
    report.name = "dold-bounds";
    report.dim_cap = dim_cap;
    std::vector<std::pair<int, int>> mn;
    for (int d = 0; d <= dim_cap; ++d)
        for (int n = 0; 2 * n <= d; ++n)
            mn.emplace_back(d - 2 * n, n);
    report.checked = mn.size();
    std::vector<std::uint8_t> bad(mn.size(), 0);
    parallel_for(mn.size(), jobs, [&](std::size_t i) {
        const auto [m, n] = mn[i];
        const auto profile = cache.get_or_compute(ManifoldExpr::dold(m, n), 1);
        bad[i] = dold_bounds_predicate(m, n) != profile->all_zero();
    });
    for (std::size_t i = 0; i < mn.size(); ++i)
        if (bad[i])
            report.mismatches.push_back(ManifoldExpr::dold(mn[i].first, mn[i].second).to_string());
    return report;
}

std::vector<ManifoldExpr> milnor_generators(int dim_cap) {
    std::vector<ManifoldExpr> out;
    for (int t = 1; 2 * t <= dim_cap; ++t)
        out.push_back(ManifoldExpr::real_projective(2 * t));
    for (int k = 1; 3 * (1 << k) - 1 <= dim_cap; ++k) {
        const int pow = 1 << k;
        for (int t = 1; pow + 2 * t * pow - 1 <= dim_cap; ++t)
            out.push_back(ManifoldExpr::milnor(pow, 2 * t * pow));
    }
    std::stable_sort(out.begin(), out.end(), [](const ManifoldExpr& a, const ManifoldExpr& b) {
        if (a.dimension() != b.dimension())
            return a.dimension() < b.dimension();
        return a.to_string() < b.to_string();
    });
    return out;
}

Prop5Report prop5_check(int dim_cap, ProfileCache& cache, int jobs) {
    Prop5Report report;
    report.dim_cap = dim_cap;
    std::vector<std::pair<int, int>> mn;
    for (const auto& [m, n] : milnor_range(dim_cap))
        if (m % 2 == 1 && n % 2 == 0 && m < n)
            mn.emplace_back(m, n);

    struct Row {
        bool skipped = true; // bounding candidates are outside the statement
        std::size_t comparisons = 0;
        std::vector<std::string> violations;
    };
    std::vector<Row> rows(mn.size());
    parallel_for(mn.size(), jobs, [&](std::size_t i) {
        const auto [m, n] = mn[i];
        const ManifoldExpr H = ManifoldExpr::milnor(m, n);
        const auto ph = cache.get_or_compute(H, 1);
        Row& row = rows[i];
        if (ph->all_zero())
            return;
        row.skipped = false;
        if (euler_mod2(H) != 0)
            row.violations.push_back(H.to_string() + ": chi mod 2 is not 0");
        for (const auto& D : dolds_of_dimension(H.dimension())) {
            ++row.comparisons;
            const auto pd = cache.get_or_compute(D, 1);
            if (!pd->all_zero() && euler_mod2(D) != 1)
                row.violations.push_back(H.to_string() + ": non-bounding " + D.to_string() +
                                         " has chi mod 2 = 0");
            if (*pd == *ph)
                row.violations.push_back(H.to_string() + " is bordant to " + D.to_string());
        }
    });
    for (const auto& row : rows) {
        if (row.skipped)
            continue;
        ++report.candidates;
        report.dold_comparisons += row.comparisons;
        report.violations.insert(report.violations.end(), row.violations.begin(),
                                 row.violations.end());
    }
    return report;
}

namespace {

// First family statement covering H(m,n), with witness parameters.
std::optional<std::pair<FamilyTag, FamilyParameters>> coverage(int m, int n) {
    if (m == 0) {
        FamilyParameters p;
        p.n = n;
        return std::make_pair(FamilyTag::Remark1, p);
    }
    // Prop1: m = 2^alpha - 2, n >= 2^alpha - 1.
    if (((m + 2) & (m + 1)) == 0 && n >= m + 1) {
        const int alpha = nu2(static_cast<std::uint64_t>(m) + 2).value();
        if (alpha >= 1)
            return std::make_pair(FamilyTag::Prop1, params_alpha_n(alpha, n));
    }
    // Prop2: n - m a positive multiple of some 2^alpha >= m+1; the maximal
    // alpha = nu2(n-m) is the witness.
    if (n > m) {
        const int alpha = nu2(static_cast<std::uint64_t>(n - m)).value();
        if ((1 << alpha) >= m + 1)
            return std::make_pair(FamilyTag::Prop2,
                                  params_m_alpha_B(m, alpha, (n - m) >> alpha));
    }
    // Prop3: m = 2^alpha (alpha >= 1), n a positive multiple of 2^{alpha+1}.
    if (m >= 2 && (m & (m - 1)) == 0) {
        const int alpha = nu2(static_cast<std::uint64_t>(m)).value();
        if (n >= 2 * m && n % (2 * m) == 0) {
            FamilyParameters p;
            p.alpha = alpha;
            p.B = n / (2 * m);
            return std::make_pair(FamilyTag::Prop3, p);
        }
    }
    // Prop4: n = 2^alpha - 1 with 2^alpha > m+1 (automatic from m <= n).
    if (((n + 1) & n) == 0 && n > m) {
        FamilyParameters p;
        p.m = m;
        p.alpha = nu2(static_cast<std::uint64_t>(n) + 1).value();
        return std::make_pair(FamilyTag::Prop4, p);
    }
    return std::nullopt;
}

} // namespace

std::vector<const ScanCandidate*> ScanReport::conjecture_counterexamples() const {
    std::vector<const ScanCandidate*> out;
    for (const auto& c : candidates)
        if (!c.bounds && !c.covered_by && !c.dold_matches.empty())
            out.push_back(&c);
    return out;
}

ScanReport conjecture_scan(int dim_cap, ProfileCache& cache, int jobs) {
    ScanReport report;
    report.dim_cap = dim_cap;
    const auto mn = milnor_range(dim_cap);
    report.candidates.resize(mn.size());
    parallel_for(mn.size(), jobs, [&](std::size_t i) {
        const auto [m, n] = mn[i];
        ScanCandidate& c = report.candidates[i];
        c.manifold = ManifoldExpr::milnor(m, n);
        c.dim = c.manifold.dimension();
        const auto ph = cache.get_or_compute(c.manifold, 1);
        c.bounds = ph->all_zero();
        if (const auto cov = coverage(m, n)) {
            c.covered_by = cov->first;
            c.parameters = cov->second;
        }
        // The match search runs where the conjecture needs evidence: residual
        // candidates, plus Prop4-covered ones whose partner is not a Dold.
        const bool search = !c.bounds &&
                            (!c.covered_by || *c.covered_by == FamilyTag::Prop4);
        if (search)
            for (const auto& D : dolds_of_dimension(c.dim))
                if (*cache.get_or_compute(D, 1) == *ph)
                    c.dold_matches.push_back(D);
    });
    return report;
}

} // namespace bordism
