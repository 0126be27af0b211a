#include "doctest.h"

#include <random>

#include "bordism/gf2ring.hpp"

using namespace bordism;

namespace {

Gf2Poly one_plus(const Gf2Poly& g) { return Gf2Poly::one(g.ring()) + g; }

// Uniformly random element: each monomial of degree <= cap kept with
// probability 1/2.
Gf2Poly random_poly(std::mt19937& rng, const RingPtr& ring) {
    std::vector<std::uint64_t> codes;
    for (std::uint64_t code = 0; code < ring->code_count(); ++code)
        if (ring->degree_of_code(code) <= ring->degree_cap() && (rng() & 1))
            codes.push_back(code);
    return Gf2Poly::from_codes(ring, std::move(codes));
}

const RingPtr kSmallRings[] = {
    make_ring({{"u", 1, 4}}, 3),
    make_ring({{"a", 1, 3}, {"b", 1, 3}}, 4),
    make_ring({{"c", 1, 3}, {"d", 2, 3}}, 6),
    make_ring({{"x", 1, 2}, {"y", 2, 2}, {"z", 1, 3}}, 5),
};

} // namespace

TEST_CASE("add follows the symmetric-difference model") {
    const auto R = make_ring({{"c", 1, 4}, {"d", 2, 4}}, 9);
    const auto c = Gf2Poly::generator(R, 0);
    const auto d = Gf2Poly::generator(R, 1);
    const auto one = Gf2Poly::one(R);

    CHECK((one + c) + (one + c) == Gf2Poly::zero(R)); // characteristic 2
    CHECK((one + c) + (c + d) == one + d);
    CHECK((c + d) + Gf2Poly::zero(R) == c + d);

    const auto other = make_ring({{"c", 1, 4}}, 3);
    CHECK_THROWS_AS(Gf2Poly::one(R) + Gf2Poly::one(other), std::invalid_argument);
}

TEST_CASE("mul reduces by truncation and the degree cap") {
    SUBCASE("freshman's dream in Z2[u]/(u^3)") {
        const auto R = make_ring({{"u", 1, 3}}, 2);
        const auto p = one_plus(Gf2Poly::generator(R, 0));
        const auto expected = Gf2Poly::from_monomials(R, std::vector<Monomial>{{{0}}, {{2}}});
        CHECK(p * p == expected); // 1 + u^2
    }
    SUBCASE("(1+u)^2 * (1+u)^2 = 1 in Z2[u]/(u^4)") {
        const auto R = make_ring({{"u", 1, 4}}, 3);
        const auto p = one_plus(Gf2Poly::generator(R, 0));
        CHECK((p * p) * (p * p) == Gf2Poly::one(R));
    }
    SUBCASE("truncation kills a^3 b^3") {
        const auto R = make_ring({{"a", 1, 3}, {"b", 1, 5}}, 7);
        const auto a = Gf2Poly::generator(R, 0);
        const auto b = Gf2Poly::generator(R, 1);
        const auto a2b3 = Gf2Poly::from_monomials(R, std::vector<Monomial>{{{2, 3}}});
        const auto a2b4 = Gf2Poly::from_monomials(R, std::vector<Monomial>{{{2, 4}}});
        CHECK((a + b) * a2b3 == a2b4);
    }
    SUBCASE("degree cap drops monomials even inside truncation bounds") {
        const auto R = make_ring({{"u", 1, 8}}, 2);
        const auto u = Gf2Poly::generator(R, 0);
        CHECK((u * u) * u == Gf2Poly::zero(R));
    }
}

TEST_CASE("pow matches hand expansions") {
    const auto R3 = make_ring({{"u", 1, 3}}, 2);
    const auto u3 = Gf2Poly::generator(R3, 0);
    CHECK(pow(one_plus(u3), 0) == Gf2Poly::one(R3));
    CHECK(pow(one_plus(u3), 3) ==
          Gf2Poly::from_monomials(R3, std::vector<Monomial>{{{0}}, {{1}}, {{2}}}));

    const auto R8 = make_ring({{"u", 1, 8}}, 7);
    CHECK(pow(one_plus(Gf2Poly::generator(R8, 0)), 8) == Gf2Poly::one(R8));
}

TEST_CASE("inverse_unit inverts units and rejects non-units") {
    const auto R = make_ring({{"a", 1, 2}, {"b", 1, 2}}, 2);
    const auto one = Gf2Poly::one(R);
    CHECK(inverse_unit(one) == one);

    const auto p = one + Gf2Poly::generator(R, 0) + Gf2Poly::generator(R, 1);
    CHECK(inverse_unit(p) == p); // (1+a+b)^2 = 1 here
    CHECK(p * inverse_unit(p) == one);

    const auto R4 = make_ring({{"u", 1, 4}}, 3);
    const auto u = Gf2Poly::generator(R4, 0);
    const auto inv = inverse_unit(one_plus(u));
    CHECK(inv == Gf2Poly::from_monomials(R4, std::vector<Monomial>{{{0}}, {{1}}, {{2}}, {{3}}}));
    CHECK(one_plus(u) * inv == Gf2Poly::one(R4));

    CHECK_THROWS_AS(inverse_unit(u), std::domain_error);
    CHECK_THROWS_AS(inverse_unit(Gf2Poly::zero(R4)), std::domain_error);
}

TEST_CASE("graded_component filters by total degree") {
    const auto R = make_ring({{"c", 1, 4}, {"d", 2, 4}}, 9);
    const auto p = Gf2Poly::one(R) + Gf2Poly::generator(R, 0) + Gf2Poly::generator(R, 1);
    CHECK(graded_component(p, 2) == Gf2Poly::generator(R, 1));
    CHECK(graded_component(p, 0) == Gf2Poly::one(R));
    CHECK(graded_component(p, 5).is_zero());

    const auto R3 = make_ring({{"u", 1, 3}}, 2);
    const auto cube = pow(one_plus(Gf2Poly::generator(R3, 0)), 3);
    CHECK(graded_component(cube, 2) ==
          Gf2Poly::from_monomials(R3, std::vector<Monomial>{{{2}}}));
}

TEST_CASE("coefficient extraction") {
    const auto R = make_ring({{"c", 1, 4}}, 3);
    const auto p = one_plus(Gf2Poly::generator(R, 0));
    CHECK(p.coefficient(Monomial{{1}}) == 1);
    CHECK(p.coefficient(Monomial{{2}}) == 0);

    const auto R3 = make_ring({{"u", 1, 3}}, 2);
    const auto cube = pow(one_plus(Gf2Poly::generator(R3, 0)), 3);
    CHECK(cube.coefficient(Monomial{{2}}) == 1);

    CHECK_THROWS_AS(cube.coefficient(Monomial{{5}}), std::invalid_argument);
    CHECK_THROWS_AS(cube.coefficient(Monomial{{1, 1}}), std::invalid_argument);
}

TEST_CASE("binom_mod2 basics and conventions") {
    for (std::uint64_t n = 0; n < 70; ++n)
        CHECK(binom_mod2(n, 0) == 1);
    CHECK(binom_mod2(4, 2) == 0); // C(4,2) = 6
    CHECK(binom_mod2(5, 1) == 1); // C(5,1) = 5
    CHECK(binom_mod2(3, -1) == 0);
    CHECK(binom_mod2(3, 4) == 0);
}

TEST_CASE("binom_mod2 agrees with the Pascal recurrence up to 64") {
    // Independent oracle: Pascal's triangle mod 2, row by row.
    std::vector<std::vector<int>> pascal(65);
    for (int r = 0; r <= 64; ++r) {
        pascal[r].assign(static_cast<std::size_t>(r) + 1, 1);
        for (int s = 1; s < r; ++s)
            pascal[r][s] = (pascal[r - 1][s - 1] + pascal[r - 1][s]) % 2;
    }
    for (int r = 0; r <= 64; ++r)
        for (int s = 0; s <= r; ++s)
            CHECK(binom_mod2(static_cast<std::uint64_t>(r), s) == pascal[r][s]);
}

TEST_CASE("tensor_embed renames a block of generators") {
    const auto S = make_ring({{"u", 1, 3}}, 2);
    const auto T = make_ring({{"u", 1, 3}, {"v", 1, 3}}, 4);
    const auto u = Gf2Poly::generator(S, 0);

    CHECK(tensor_embed(Gf2Poly::one(S), T, 0) == Gf2Poly::one(T));
    CHECK(tensor_embed(u, T, 0) == Gf2Poly::generator(T, 0));
    CHECK(tensor_embed(u, T, 1) == Gf2Poly::generator(T, 1));

    const auto bad = make_ring({{"w", 2, 3}, {"v", 1, 3}}, 6);
    CHECK_THROWS_AS(tensor_embed(u, bad, 0), std::invalid_argument);
    CHECK_THROWS_AS(tensor_embed(u, T, 2), std::invalid_argument);
}

TEST_CASE("algebraic laws hold on random samples") {
    std::mt19937 rng(0xb0bd15);
    for (const auto& R : kSmallRings) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto p = random_poly(rng, R);
            const auto q = random_poly(rng, R);
            const auto r = random_poly(rng, R);
            CHECK((p + p).is_zero());
            CHECK(p + q == q + p);
            CHECK((p + q) + r == p + (q + r));
            CHECK(p * q == q * p);
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * (q + r) == p * q + p * r);
        }
    }
}

TEST_CASE("(1+u)^(2^k) = 1 + u^(2^k) with truncation applied") {
    const auto R = make_ring({{"u", 1, 40}}, 39);
    const auto u = Gf2Poly::generator(R, 0);
    for (int k = 0; k <= 6; ++k) {
        const auto lhs = pow(one_plus(u), std::uint64_t{1} << k);
        auto rhs = Gf2Poly::one(R);
        if ((1 << k) < 40)
            rhs += pow(u, std::uint64_t{1} << k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("units invert on random samples") {
    std::mt19937 rng(0x5eed);
    for (const auto& R : kSmallRings) {
        for (int trial = 0; trial < 25; ++trial) {
            auto p = random_poly(rng, R);
            if (p.constant_term() == 0)
                p += Gf2Poly::one(R);
            CHECK(p * inverse_unit(p) == Gf2Poly::one(R));
        }
    }
}

TEST_CASE("coefficients of (1+u)^r realize binomials mod 2") {
    const auto R = make_ring({{"u", 1, 64}}, 63);
    const auto u = Gf2Poly::generator(R, 0);
    for (std::uint64_t r = 0; r <= 40; ++r) {
        const auto p = pow(one_plus(u), r);
        for (int s = 0; s <= 40; ++s)
            CHECK(p.coefficient(Monomial{{s}}) == binom_mod2(r, s));
    }
}

TEST_CASE("graded components sum back to the polynomial") {
    std::mt19937 rng(0x9c0de);
    for (const auto& R : kSmallRings) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = random_poly(rng, R);
            auto sum = Gf2Poly::zero(R);
            for (int i = 0; i <= R->degree_cap(); ++i)
                sum += graded_component(p, i);
            CHECK(sum == p);
        }
    }
}

TEST_CASE("canonical monomial order is lexicographic on exponent vectors") {
    const auto R = make_ring({{"a", 1, 3}, {"b", 1, 4}}, 5);
    // (0,3) sorts before (1,0): the first generator is most significant.
    const auto p = Gf2Poly::from_monomials(
        R, std::vector<Monomial>{{{1, 0}}, {{0, 3}}, {{0, 1}}});
    const auto ms = p.monomials();
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == Monomial{{0, 1}});
    CHECK(ms[1] == Monomial{{0, 3}});
    CHECK(ms[2] == Monomial{{1, 0}});
    CHECK(p.to_string() == "b + a + b^3");
}
