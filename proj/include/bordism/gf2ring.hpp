#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace bordism {

// One generator of a truncated polynomial ring over GF(2): x has the given
// cohomological degree and satisfies x^truncation = 0.
struct GeneratorSpec {
    std::string name;
    int degree = 1;
    int truncation = 1;

    bool operator==(const GeneratorSpec&) const = default;
};

// Exponent vector aligned with the owning ring's generator list.
struct Monomial {
    std::vector<int> exponents;

    bool operator==(const Monomial&) const = default;
};

// Z_2[x_1,...,x_r]/(x_1^{T_1},...,x_r^{T_r}), with every monomial of total
// degree above degree_cap identified with zero as well. Immutable after
// construction.
//
// Monomials are stored packed as mixed-radix codes (radix = truncation per
// generator, first generator most significant), so increasing code order is
// exactly lexicographic order on exponent vectors.
class RingPresentation {
public:
    RingPresentation(std::vector<GeneratorSpec> generators, int degree_cap);

    std::size_t generator_count() const noexcept { return gens_.size(); }
    const GeneratorSpec& generator(std::size_t i) const { return gens_.at(i); }
    const std::vector<GeneratorSpec>& generators() const noexcept { return gens_; }
    int degree_cap() const noexcept { return degree_cap_; }

    // Total number of exponent vectors representable under the truncations.
    std::uint64_t code_count() const noexcept { return code_count_; }

    bool same_presentation(const RingPresentation& other) const noexcept;

    // Index of the generator with the given name; throws if absent.
    std::size_t index_of(std::string_view name) const;

    // Packs an exponent vector; throws std::invalid_argument if the vector
    // has the wrong length, an exponent is out of range, or the total degree
    // exceeds the cap.
    std::uint64_t pack(std::span<const int> exponents) const;
    std::uint64_t pack(const Monomial& m) const { return pack(std::span<const int>(m.exponents)); }

    void unpack(std::uint64_t code, std::span<int> out) const noexcept;
    Monomial unpack(std::uint64_t code) const;

    int degree_of_code(std::uint64_t code) const noexcept;

    std::string monomial_text(std::uint64_t code) const;

private:
    std::vector<GeneratorSpec> gens_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t code_count_ = 1;
    int degree_cap_ = 0;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

RingPtr make_ring(std::vector<GeneratorSpec> generators, int degree_cap);

// An element of a truncated GF(2) polynomial ring: the set of its monomials,
// kept as sorted packed codes.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Gf2Poly zero(RingPtr ring) { return Gf2Poly(std::move(ring)); }
    static Gf2Poly one(RingPtr ring);

    // The image of the i-th generator in the quotient; this is the zero
    // element when the generator is truncated away (T = 1) or its degree
    // exceeds the cap.
    static Gf2Poly generator(RingPtr ring, std::size_t index);

    static Gf2Poly from_monomials(RingPtr ring, std::span<const Monomial> monomials);

    const RingPtr& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_[0] == 0; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::vector<std::uint64_t>& packed_terms() const noexcept { return terms_; }

    std::vector<Monomial> monomials() const;

    int coefficient(const Monomial& m) const;
    int coefficient_of_code(std::uint64_t code) const noexcept;
    int constant_term() const noexcept { return coefficient_of_code(0); }

    int max_degree() const noexcept; // -1 for the zero polynomial

    Gf2Poly& operator+=(const Gf2Poly& rhs);
    friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) { lhs += rhs; return lhs; }
    friend Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs);
    Gf2Poly& operator*=(const Gf2Poly& rhs) { *this = *this * rhs; return *this; }

    bool operator==(const Gf2Poly& rhs) const;

    // Terms listed lowest total degree first, code order within a degree.
    std::string to_string() const;

    // Internal: assumes codes are valid for the ring; XOR-normalizes.
    static Gf2Poly from_codes(RingPtr ring, std::vector<std::uint64_t> codes);

private:
    RingPtr ring_;
    std::vector<std::uint64_t> terms_;
};

Gf2Poly pow(const Gf2Poly& base, std::uint64_t exponent);

// Multiplicative inverse of a unit (constant term 1); throws
// std::domain_error otherwise. Computed as sum_{k<=cap} (p+1)^k, which
// terminates because p+1 is nilpotent under the degree cap.
Gf2Poly inverse_unit(const Gf2Poly& p);

// Sub-sum of terms of total degree exactly `degree`.
Gf2Poly graded_component(const Gf2Poly& p, int degree);

// Binomial coefficient C(r, s) mod 2 by the binary digit-subset rule,
// with C(r, s) = 0 whenever s < 0 or s > r.
int binom_mod2(std::uint64_t r, std::int64_t s);

// Re-indexes p into `target`, whose generators [slot, slot + r) must match
// the source generators in degree and truncation.
Gf2Poly tensor_embed(const Gf2Poly& p, const RingPtr& target, std::size_t slot);

// Monomial builder by generator name; unnamed generators get exponent 0.
Monomial make_monomial(const RingPresentation& ring,
                       std::initializer_list<std::pair<std::string_view, int>> exps);

} // namespace bordism
