#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bordism/gf2ring.hpp"

namespace bordism {

enum class ManifoldKind {
    RealProjective,    // RP(n), n >= 1
    ComplexProjective, // CP(n), n >= 1
    Dold,              // P(m,n), m,n >= 0
    Milnor,            // H(m,n), normalized to m <= n, (0,0) rejected
    Product,           // >= 2 factors, none of them Milnor
};

// Algebraic descriptor of a closed manifold. Construct through the named
// factories, which enforce the family invariants; a default-constructed
// descriptor is RP(1) so aggregates holding descriptors stay valid.
class ManifoldExpr {
public:
    ManifoldExpr() = default;

    static ManifoldExpr real_projective(int n);
    static ManifoldExpr complex_projective(int n);
    static ManifoldExpr dold(int m, int n);
    static ManifoldExpr milnor(int m, int n);
    static ManifoldExpr product(std::vector<ManifoldExpr> factors);

    ManifoldKind kind() const noexcept { return kind_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const std::vector<ManifoldExpr>& factors() const noexcept { return factors_; }

    int dimension() const noexcept;

    // Canonical descriptor text, e.g. "H(2,3)" or "RP(2) X RP(2)". Parsing
    // this text yields an equal descriptor.
    std::string to_string() const;

    bool operator==(const ManifoldExpr& rhs) const;

private:
    ManifoldKind kind_ = ManifoldKind::RealProjective;
    int m_ = 0;
    int n_ = 1;
    std::vector<ManifoldExpr> factors_;
};

// Parses the descriptor grammar used by the CLI and reports: RP(n), CP(n),
// P(m,n), H(m,n) and X-separated products. Whitespace-insensitive. Throws
// std::invalid_argument naming the offending token.
ManifoldExpr parse_manifold(std::string_view text);

struct PairingRule {
    enum class Kind { TopMonomial, MilnorAmbient };
    Kind kind = Kind::TopMonomial;
    std::uint64_t top_code = 0; // TopMonomial: packed fundamental-class dual
    int m = 0, n = 0;           // MilnorAmbient: target monomial a^m b^n
};

struct CohomologyModel {
    RingPtr ring;
    PairingRule pairing;
};

// Mod-2 cohomology model: the truncated ring plus the fundamental-class
// pairing rule. Milnor manifolds are modeled in the ambient ring of
// RP^m x RP^n with the (a+b) cap; everything else pairs against its top
// monomial.
CohomologyModel cohomology_model(const ManifoldExpr& M);

Gf2Poly total_sw_class(const ManifoldExpr& M);
Gf2Poly total_sw_class(const ManifoldExpr& M, const CohomologyModel& model);

// Degree-i part of the total Stiefel-Whitney class.
Gf2Poly sw_graded(const ManifoldExpr& M, int i);

// Evaluates x against the fundamental class.
int evaluate_pairing(const CohomologyModel& model, const Gf2Poly& x);
int evaluate_pairing(const ManifoldExpr& M, const Gf2Poly& x);

// Euler characteristic mod 2, computed through the fibration formulas.
int euler_mod2(const ManifoldExpr& M);

} // namespace bordism
