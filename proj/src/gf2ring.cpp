#include "bordism/gf2ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bordism {

namespace {

constexpr std::size_t kMaxGenerators = 32;

void require_same_ring(const Gf2Poly& a, const Gf2Poly& b) {
    const auto& ra = a.ring();
    const auto& rb = b.ring();
    if (!ra || !rb)
        throw std::invalid_argument("polynomial has no ring attached");
    if (ra == rb)
        return;
    if (!ra->same_presentation(*rb))
        throw std::invalid_argument("ring mismatch between operands");
}

// Sorts and cancels pairs (coefficients live in GF(2)).
void normalize_xor(std::vector<std::uint64_t>& codes) {
    std::sort(codes.begin(), codes.end());
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < codes.size()) {
        std::size_t j = i;
        while (j < codes.size() && codes[j] == codes[i])
            ++j;
        if ((j - i) % 2 != 0)
            codes[out++] = codes[i];
        i = j;
    }
    codes.resize(out);
}

} // namespace

RingPresentation::RingPresentation(std::vector<GeneratorSpec> generators, int degree_cap)
    : gens_(std::move(generators)), degree_cap_(degree_cap) {
    if (degree_cap_ < 0)
        throw std::invalid_argument("degree_cap must be non-negative");
    if (gens_.size() > kMaxGenerators)
        throw std::invalid_argument("ring presentation has too many generators");
    for (const auto& g : gens_) {
        if (g.degree < 1)
            throw std::invalid_argument("generator degree must be >= 1: " + g.name);
        if (g.truncation < 1)
            throw std::invalid_argument("generator truncation must be >= 1: " + g.name);
        for (const auto& h : gens_)
            if (&g != &h && g.name == h.name)
                throw std::invalid_argument("duplicate generator name: " + g.name);
    }
    strides_.assign(gens_.size(), 1);
    std::uint64_t stride = 1;
    for (std::size_t i = gens_.size(); i-- > 0;) {
        strides_[i] = stride;
        const auto radix = static_cast<std::uint64_t>(gens_[i].truncation);
        if (stride > std::numeric_limits<std::uint64_t>::max() / 2 / radix)
            throw std::overflow_error("ring presentation too large to index");
        stride *= radix;
    }
    code_count_ = stride;
}

bool RingPresentation::same_presentation(const RingPresentation& other) const noexcept {
    return degree_cap_ == other.degree_cap_ && gens_ == other.gens_;
}

std::size_t RingPresentation::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    throw std::invalid_argument("no generator named '" + std::string(name) + "'");
}

std::uint64_t RingPresentation::pack(std::span<const int> exponents) const {
    if (exponents.size() != gens_.size())
        throw std::invalid_argument("exponent vector length does not match generator count");
    std::uint64_t code = 0;
    long degree = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const int e = exponents[i];
        if (e < 0 || e >= gens_[i].truncation)
            throw std::invalid_argument("exponent of '" + gens_[i].name + "' out of range");
        code += static_cast<std::uint64_t>(e) * strides_[i];
        degree += static_cast<long>(e) * gens_[i].degree;
    }
    if (degree > degree_cap_)
        throw std::invalid_argument("monomial degree exceeds the ring's degree cap");
    return code;
}

void RingPresentation::unpack(std::uint64_t code, std::span<int> out) const noexcept {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        out[i] = static_cast<int>(code / strides_[i]);
        code %= strides_[i];
    }
}

Monomial RingPresentation::unpack(std::uint64_t code) const {
    Monomial m;
    m.exponents.resize(gens_.size());
    unpack(code, std::span<int>(m.exponents));
    return m;
}

int RingPresentation::degree_of_code(std::uint64_t code) const noexcept {
    int degree = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        degree += static_cast<int>(code / strides_[i]) * gens_[i].degree;
        code %= strides_[i];
    }
    return degree;
}

std::string RingPresentation::monomial_text(std::uint64_t code) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const int e = static_cast<int>(code / strides_[i]);
        code %= strides_[i];
        if (e == 0)
            continue;
        if (!first)
            os << '*';
        os << gens_[i].name;
        if (e > 1)
            os << '^' << e;
        first = false;
    }
    if (first)
        return "1";
    return os.str();
}

RingPtr make_ring(std::vector<GeneratorSpec> generators, int degree_cap) {
    return std::make_shared<const RingPresentation>(std::move(generators), degree_cap);
}

Gf2Poly Gf2Poly::one(RingPtr ring) {
    Gf2Poly p(std::move(ring));
    p.terms_.push_back(0);
    return p;
}

Gf2Poly Gf2Poly::generator(RingPtr ring, std::size_t index) {
    if (!ring)
        throw std::invalid_argument("null ring");
    const auto& g = ring->generator(index);
    Gf2Poly p(ring);
    if (g.truncation < 2 || g.degree > ring->degree_cap())
        return p; // the generator maps to zero in the quotient
    std::vector<int> exps(ring->generator_count(), 0);
    exps[index] = 1;
    p.terms_.push_back(ring->pack(exps));
    return p;
}

Gf2Poly Gf2Poly::from_monomials(RingPtr ring, std::span<const Monomial> monomials) {
    if (!ring)
        throw std::invalid_argument("null ring");
    std::vector<std::uint64_t> codes;
    codes.reserve(monomials.size());
    for (const auto& m : monomials)
        codes.push_back(ring->pack(m));
    return from_codes(std::move(ring), std::move(codes));
}

Gf2Poly Gf2Poly::from_codes(RingPtr ring, std::vector<std::uint64_t> codes) {
    normalize_xor(codes);
    Gf2Poly p(std::move(ring));
    p.terms_ = std::move(codes);
    return p;
}

std::vector<Monomial> Gf2Poly::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto code : terms_)
        out.push_back(ring_->unpack(code));
    return out;
}

int Gf2Poly::coefficient(const Monomial& m) const {
    if (!ring_)
        throw std::invalid_argument("polynomial has no ring attached");
    return coefficient_of_code(ring_->pack(m));
}

int Gf2Poly::coefficient_of_code(std::uint64_t code) const noexcept {
    return std::binary_search(terms_.begin(), terms_.end(), code) ? 1 : 0;
}

int Gf2Poly::max_degree() const noexcept {
    int best = -1;
    for (const auto code : terms_)
        best = std::max(best, ring_->degree_of_code(code));
    return best;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
    require_same_ring(*this, rhs);
    std::vector<std::uint64_t> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        if (terms_[i] < rhs.terms_[j]) {
            merged.push_back(terms_[i++]);
        } else if (rhs.terms_[j] < terms_[i]) {
            merged.push_back(rhs.terms_[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    merged.insert(merged.end(), terms_.begin() + i, terms_.end());
    merged.insert(merged.end(), rhs.terms_.begin() + j, rhs.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs) {
    require_same_ring(lhs, rhs);
    const auto& ring = *lhs.ring();
    const std::size_t r = ring.generator_count();
    const int cap = ring.degree_cap();

    // Decode both operands once so the pair loop is pure integer work.
    const auto decode = [&](const std::vector<std::uint64_t>& codes,
                            std::vector<int>& exps, std::vector<int>& degs) {
        exps.resize(codes.size() * r);
        degs.resize(codes.size());
        for (std::size_t t = 0; t < codes.size(); ++t) {
            std::span<int> row(exps.data() + t * r, r);
            ring.unpack(codes[t], row);
            int d = 0;
            for (std::size_t i = 0; i < r; ++i)
                d += row[i] * ring.generator(i).degree;
            degs[t] = d;
        }
    };

    std::vector<int> le, ld, re, rd;
    decode(lhs.packed_terms(), le, ld);
    decode(rhs.packed_terms(), re, rd);

    std::vector<std::uint64_t> out;
    out.reserve(lhs.term_count() * rhs.term_count());
    for (std::size_t a = 0; a < lhs.term_count(); ++a) {
        for (std::size_t b = 0; b < rhs.term_count(); ++b) {
            if (ld[a] + rd[b] > cap)
                continue;
            std::uint64_t code = 0;
            bool alive = true;
            for (std::size_t i = 0; i < r; ++i) {
                const int e = le[a * r + i] + re[b * r + i];
                if (e >= ring.generator(i).truncation) {
                    alive = false;
                    break;
                }
                code += static_cast<std::uint64_t>(e);
                if (i + 1 < r)
                    code *= static_cast<std::uint64_t>(ring.generator(i + 1).truncation);
            }
            if (alive)
                out.push_back(code);
        }
    }
    return Gf2Poly::from_codes(lhs.ring(), std::move(out));
}

bool Gf2Poly::operator==(const Gf2Poly& rhs) const {
    if (ring_ && rhs.ring_ && ring_ != rhs.ring_ && !ring_->same_presentation(*rhs.ring_))
        return false;
    return terms_ == rhs.terms_;
}

std::string Gf2Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<std::uint64_t> order(terms_);
    std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        const int da = ring_->degree_of_code(a);
        const int db = ring_->degree_of_code(b);
        return da != db ? da < db : a < b;
    });
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0)
            out += " + ";
        out += ring_->monomial_text(order[i]);
    }
    return out;
}

Gf2Poly pow(const Gf2Poly& base, std::uint64_t exponent) {
    if (!base.ring())
        throw std::invalid_argument("polynomial has no ring attached");
    Gf2Poly result = Gf2Poly::one(base.ring());
    Gf2Poly square = base;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * square;
        exponent >>= 1;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

Gf2Poly inverse_unit(const Gf2Poly& p) {
    if (!p.ring())
        throw std::invalid_argument("polynomial has no ring attached");
    if (p.constant_term() != 1)
        throw std::domain_error("inverse_unit: constant term is 0, not a unit");
    const Gf2Poly nil = p + Gf2Poly::one(p.ring());
    Gf2Poly result = Gf2Poly::one(p.ring());
    Gf2Poly term = Gf2Poly::one(p.ring());
    const int cap = p.ring()->degree_cap();
    for (int k = 1; k <= cap; ++k) {
        term = term * nil;
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

Gf2Poly graded_component(const Gf2Poly& p, int degree) {
    if (!p.ring())
        throw std::invalid_argument("polynomial has no ring attached");
    std::vector<std::uint64_t> codes;
    for (const auto code : p.packed_terms())
        if (p.ring()->degree_of_code(code) == degree)
            codes.push_back(code);
    return Gf2Poly::from_codes(p.ring(), std::move(codes));
}

int binom_mod2(std::uint64_t r, std::int64_t s) {
    if (s < 0 || static_cast<std::uint64_t>(s) > r)
        return 0;
    const auto us = static_cast<std::uint64_t>(s);
    return ((~r & us) == 0) ? 1 : 0;
}

Gf2Poly tensor_embed(const Gf2Poly& p, const RingPtr& target, std::size_t slot) {
    if (!p.ring() || !target)
        throw std::invalid_argument("null ring");
    const auto& src = *p.ring();
    const auto& dst = *target;
    const std::size_t r = src.generator_count();
    if (slot + r > dst.generator_count())
        throw std::invalid_argument("tensor_embed: slot out of range for target ring");
    for (std::size_t i = 0; i < r; ++i) {
        const auto& s = src.generator(i);
        const auto& d = dst.generator(slot + i);
        if (s.degree != d.degree || s.truncation != d.truncation)
            throw std::invalid_argument("tensor_embed: incompatible generator block");
    }
    std::vector<int> se(r);
    std::vector<int> de(dst.generator_count(), 0);
    std::vector<std::uint64_t> codes;
    codes.reserve(p.term_count());
    for (const auto code : p.packed_terms()) {
        src.unpack(code, std::span<int>(se));
        std::fill(de.begin(), de.end(), 0);
        std::copy(se.begin(), se.end(), de.begin() + static_cast<std::ptrdiff_t>(slot));
        codes.push_back(dst.pack(de));
    }
    return Gf2Poly::from_codes(target, std::move(codes));
}

Monomial make_monomial(const RingPresentation& ring,
                       std::initializer_list<std::pair<std::string_view, int>> exps) {
    Monomial m;
    m.exponents.assign(ring.generator_count(), 0);
    for (const auto& [name, e] : exps)
        m.exponents[ring.index_of(name)] = e;
    return m;
}

} // namespace bordism
