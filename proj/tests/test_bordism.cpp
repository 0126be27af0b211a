#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <thread>

#include "bordism/bordism.hpp"
#include "bordism/serialize.hpp"
#include "support/naive_oracle.hpp"

using namespace bordism;

namespace {

// Euler's pentagonal-number recurrence, used as an independent count oracle:
// p(n) = sum_k (-1)^(k-1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
long long pentagonal_partition_count(int n) {
    static std::vector<long long> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            total += sign * memo[m - g1];
            if (g2 <= m)
                total += sign * memo[m - g2];
        }
        memo.push_back(total);
    }
    return memo[n];
}

std::vector<ManifoldExpr> family_members_up_to(int dim_cap) {
    std::vector<ManifoldExpr> out;
    for (int n = 1; n <= dim_cap; ++n)
        out.push_back(ManifoldExpr::real_projective(n));
    for (int n = 1; 2 * n <= dim_cap; ++n)
        out.push_back(ManifoldExpr::complex_projective(n));
    for (int m = 0; m <= dim_cap; ++m)
        for (int n = 0; m + 2 * n <= dim_cap; ++n)
            out.push_back(ManifoldExpr::dold(m, n));
    for (int m = 0; m <= dim_cap; ++m)
        for (int n = std::max(m, 1); m + n - 1 <= dim_cap; ++n)
            out.push_back(ManifoldExpr::milnor(m, n));
    return out;
}

} // namespace

TEST_CASE("partition enumeration in canonical order") {
    const auto p0 = partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts.empty());

    const auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts == std::vector<int>{4});
    CHECK(p4[1].parts == std::vector<int>{3, 1});
    CHECK(p4[2].parts == std::vector<int>{2, 2});
    CHECK(p4[3].parts == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts == std::vector<int>{1, 1, 1, 1});

    CHECK(partitions(10).size() == 42);
}

TEST_CASE("partition lists are strictly descending-lex and well-formed") {
    for (int d = 0; d <= 18; ++d) {
        const auto ps = partitions(d);
        CHECK(ps.size() == partition_count(d));
        CHECK(static_cast<long long>(ps.size()) == pentagonal_partition_count(d));
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].weight() == d);
            for (std::size_t j = 1; j < ps[i].parts.size(); ++j)
                CHECK(ps[i].parts[j] <= ps[i].parts[j - 1]);
            if (i > 0)
                CHECK(ps[i - 1].parts > ps[i].parts); // lexicographic on vectors
        }
    }
}

TEST_CASE("Stiefel-Whitney numbers of the small classics") {
    const auto rp2 = ManifoldExpr::real_projective(2);
    CHECK(sw_number(rp2, Partition{{2}}) == 1);
    CHECK(sw_number(rp2, Partition{{1, 1}}) == 1);

    const auto rp3 = ManifoldExpr::real_projective(3);
    for (const auto& p : partitions(3))
        CHECK(sw_number(rp3, p) == 0);

    const auto d11 = ManifoldExpr::dold(1, 1);
    for (const auto& p : partitions(3))
        CHECK(sw_number(d11, p) == 0);

    CHECK_THROWS_AS(sw_number(rp2, Partition{{3}}), std::invalid_argument);
    CHECK_THROWS_AS(sw_number(rp2, Partition{{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("profiles") {
    const auto p1 = sw_profile(ManifoldExpr::real_projective(1));
    CHECK(p1.dim == 1);
    CHECK(p1.bits == std::vector<std::uint8_t>{0});
    CHECK(p1.all_zero());

    const auto p2 = sw_profile(ManifoldExpr::real_projective(2));
    CHECK(p2.bit_string() == "11");

    // The point does not bound.
    CHECK(sw_profile(ManifoldExpr::dold(0, 0)).bit_string() == "1");
    CHECK(sw_profile(ManifoldExpr::milnor(0, 1)).bit_string() == "1");

    for (int n = 1; n <= 12; ++n)
        CHECK(sw_profile(ManifoldExpr::milnor(0, n)) ==
              sw_profile(ManifoldExpr::dold(n - 1, 0)));

    for (int k = 1; k <= 16; ++k)
        CHECK(sw_profile(ManifoldExpr::dold(k, 0)) ==
              sw_profile(ManifoldExpr::real_projective(k)));
}

TEST_CASE("profiles are independent of the worker count") {
    const ManifoldExpr samples[] = {ManifoldExpr::milnor(3, 8), ManifoldExpr::dold(4, 3)};
    for (const auto& M : samples)
        CHECK(sw_profile(M, 1) == sw_profile(M, 4));
}

TEST_CASE("RP(k) bounds exactly for odd k") {
    for (int k = 1; k <= 16; ++k)
        CHECK(sw_profile(ManifoldExpr::real_projective(k)).all_zero() == (k % 2 == 1));
}

TEST_CASE("bounds through Thom's criterion") {
    CHECK(bounds(ManifoldExpr::real_projective(3)));
    for (int n = 1; n <= 8; ++n)
        CHECK(bounds(ManifoldExpr::milnor(1, n)));
    CHECK(bounds(ManifoldExpr::dold(4, 1)));
    CHECK(bounds(ManifoldExpr::dold(2, 3)));
    CHECK_FALSE(bounds(ManifoldExpr::dold(2, 2)));
    CHECK_FALSE(bounds(ManifoldExpr::real_projective(4)));
}

TEST_CASE("bordant compares full profiles at equal dimension") {
    CHECK(bordant(ManifoldExpr::milnor(2, 4), ManifoldExpr::dold(1, 2)));
    CHECK(bordant(ManifoldExpr::milnor(2, 3),
                  ManifoldExpr::product({ManifoldExpr::real_projective(2),
                                         ManifoldExpr::real_projective(2)})));
    // CP(2) and RP(2) x RP(2) carry the same numbers in dimension 4.
    CHECK(bordant(ManifoldExpr::complex_projective(2),
                  ManifoldExpr::product({ManifoldExpr::real_projective(2),
                                         ManifoldExpr::real_projective(2)})));
    CHECK_FALSE(bordant(ManifoldExpr::complex_projective(2),
                        ManifoldExpr::real_projective(4)));

    const ManifoldExpr reflexive[] = {ManifoldExpr::milnor(3, 4), ManifoldExpr::dold(2, 2)};
    for (const auto& M : reflexive)
        CHECK(bordant(M, M));

    const auto cmp = compare_bordism(ManifoldExpr::milnor(1, 1),
                                     ManifoldExpr::real_projective(2));
    CHECK_FALSE(cmp.bordant);
    CHECK(cmp.dimension_mismatch);

    const auto diff = compare_bordism(ManifoldExpr::real_projective(4),
                                      ManifoldExpr::complex_projective(2));
    CHECK_FALSE(diff.bordant);
    CHECK_FALSE(diff.dimension_mismatch);
    CHECK_FALSE(diff.mismatches.empty());
}

TEST_CASE("bordance is an equivalence relation on a dimension-4 sample") {
    const std::vector<ManifoldExpr> sample = {
        ManifoldExpr::real_projective(4),
        ManifoldExpr::complex_projective(2),
        ManifoldExpr::product({ManifoldExpr::real_projective(2),
                               ManifoldExpr::real_projective(2)}),
        ManifoldExpr::milnor(2, 3),
        ManifoldExpr::dold(0, 2),
        ManifoldExpr::dold(2, 1),
        ManifoldExpr::dold(4, 0),
    };
    for (std::size_t i = 0; i < sample.size(); ++i) {
        CHECK(bordant(sample[i], sample[i]));
        for (std::size_t j = 0; j < sample.size(); ++j) {
            CHECK(bordant(sample[i], sample[j]) == bordant(sample[j], sample[i]));
            for (std::size_t k = 0; k < sample.size(); ++k)
                if (bordant(sample[i], sample[j]) && bordant(sample[j], sample[k]))
                    CHECK(bordant(sample[i], sample[k]));
        }
    }
}

TEST_CASE("boundaries of one dimension are mutually bordant") {
    const std::vector<ManifoldExpr> dim3 = {
        ManifoldExpr::real_projective(3),
        ManifoldExpr::dold(1, 1),
        ManifoldExpr::milnor(2, 2),
        ManifoldExpr::product({ManifoldExpr::real_projective(1),
                               ManifoldExpr::real_projective(2)}),
    };
    for (const auto& M : dim3)
        REQUIRE(bounds(M));
    for (const auto& M : dim3)
        for (const auto& N : dim3)
            CHECK(bordant(M, N));
}

TEST_CASE("top Stiefel-Whitney number is the Euler characteristic mod 2") {
    for (const auto& M : family_members_up_to(10)) {
        const int d = M.dimension();
        const Partition top{d > 0 ? std::vector<int>{d} : std::vector<int>{}};
        CHECK(sw_number(M, top) == euler_mod2(M));
    }
}

TEST_CASE("sw_number agrees with the dense integer-coefficient oracle") {
    auto members = family_members_up_to(8);
    members.push_back(ManifoldExpr::product({ManifoldExpr::real_projective(2),
                                             ManifoldExpr::real_projective(3)}));
    members.push_back(ManifoldExpr::product({ManifoldExpr::real_projective(2),
                                             ManifoldExpr::complex_projective(2)}));
    members.push_back(ManifoldExpr::product({ManifoldExpr::dold(1, 1),
                                             ManifoldExpr::real_projective(2)}));
    for (const auto& M : members) {
        const auto profile = sw_profile(M);
        const auto parts = partitions(M.dimension());
        const oracle::OracleContext ctx(M);
        for (std::size_t i = 0; i < parts.size(); ++i)
            CHECK(ctx.number(parts[i]) == int(profile.bits[i]));
    }
    // And the one-shot entry point.
    CHECK(oracle::oracle_sw_number(ManifoldExpr::real_projective(2), Partition{{1, 1}}) == 1);
}

TEST_CASE("profile JSON serialization") {
    const auto M = ManifoldExpr::real_projective(2);
    const auto j = profile_to_json(M, sw_profile(M));
    CHECK(j.dump() == R"j({"manifold":"RP(2)","dim":2,"partitions":[[2],[1,1]],"bits":"11"})j");
}

TEST_CASE("profile cache memoizes and survives a file round trip") {
    ProfileCache cache;
    const auto M = ManifoldExpr::milnor(2, 4);
    const auto a = cache.get_or_compute(M);
    const auto b = cache.get_or_compute(M);
    CHECK(a.get() == b.get()); // same shared entry
    CHECK(cache.size() == 1);

    const std::string path = "test_profile_cache.tmp";
    std::remove(path.c_str());
    CHECK(cache.append_new_entries(path) == 1);

    ProfileCache reloaded;
    CHECK(reloaded.load_file(path) == 1);
    CHECK(*reloaded.get_or_compute(M) == *a);

    // Corrupt lines are skipped, valid ones still load.
    {
        std::ofstream out(path, std::ios::app);
        out << "NOT A DESCRIPTOR\t1010\n";
        out << "RP(2)\t111\n";   // wrong bit count
        out << "RP(2)\t1x\n";    // bad characters
        out << "RP(2)\t11\n";    // fine
    }
    ProfileCache retry;
    CHECK(retry.load_file(path) == 2);
    std::remove(path.c_str());
}

TEST_CASE("profile cache tolerates concurrent lookups") {
    ProfileCache cache;
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&cache] {
            for (int i = 0; i < 8; ++i)
                cache.get_or_compute(ManifoldExpr::milnor(2, 3 + i % 4));
        });
    for (auto& w : workers)
        w.join();
    CHECK(cache.size() == 4);
}
