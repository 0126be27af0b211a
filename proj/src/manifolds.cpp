#include "bordism/manifolds.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bordism {

ManifoldExpr ManifoldExpr::real_projective(int n) {
    if (n < 1)
        throw std::invalid_argument("RP(n) requires n >= 1");
    ManifoldExpr e;
    e.kind_ = ManifoldKind::RealProjective;
    e.n_ = n;
    return e;
}

ManifoldExpr ManifoldExpr::complex_projective(int n) {
    if (n < 1)
        throw std::invalid_argument("CP(n) requires n >= 1");
    ManifoldExpr e;
    e.kind_ = ManifoldKind::ComplexProjective;
    e.n_ = n;
    return e;
}

ManifoldExpr ManifoldExpr::dold(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("P(m,n) requires m, n >= 0");
    ManifoldExpr e;
    e.kind_ = ManifoldKind::Dold;
    e.m_ = m;
    e.n_ = n;
    return e;
}

ManifoldExpr ManifoldExpr::milnor(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("H(m,n) requires m, n >= 0");
    if (m > n)
        std::swap(m, n); // H(m,n) and H(n,m) agree; keep m <= n
    if (m == 0 && n == 0)
        throw std::invalid_argument("H(0,0) is not a manifold (dimension -1)");
    ManifoldExpr e;
    e.kind_ = ManifoldKind::Milnor;
    e.m_ = m;
    e.n_ = n;
    return e;
}

ManifoldExpr ManifoldExpr::product(std::vector<ManifoldExpr> factors) {
    std::vector<ManifoldExpr> flat;
    for (auto& f : factors) {
        if (f.kind_ == ManifoldKind::Product) {
            for (auto& g : f.factors_)
                flat.push_back(std::move(g));
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (flat.size() < 2)
        throw std::invalid_argument("a product needs at least two factors");
    for (const auto& f : flat)
        if (f.kind_ == ManifoldKind::Milnor)
            throw std::invalid_argument(
                "Milnor factors are not supported inside products: the ambient-ring "
                "evaluation of H(m,n) does not compose under Kunneth");
    ManifoldExpr e;
    e.kind_ = ManifoldKind::Product;
    e.factors_ = std::move(flat);
    return e;
}

int ManifoldExpr::dimension() const noexcept {
    switch (kind_) {
    case ManifoldKind::RealProjective: return n_;
    case ManifoldKind::ComplexProjective: return 2 * n_;
    case ManifoldKind::Dold: return m_ + 2 * n_;
    case ManifoldKind::Milnor: return m_ + n_ - 1;
    case ManifoldKind::Product: {
        int d = 0;
        for (const auto& f : factors_)
            d += f.dimension();
        return d;
    }
    }
    return 0;
}

std::string ManifoldExpr::to_string() const {
    std::ostringstream os;
    switch (kind_) {
    case ManifoldKind::RealProjective: os << "RP(" << n_ << ")"; break;
    case ManifoldKind::ComplexProjective: os << "CP(" << n_ << ")"; break;
    case ManifoldKind::Dold: os << "P(" << m_ << "," << n_ << ")"; break;
    case ManifoldKind::Milnor: os << "H(" << m_ << "," << n_ << ")"; break;
    case ManifoldKind::Product:
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i > 0)
                os << " X ";
            os << factors_[i].to_string();
        }
        break;
    }
    return os.str();
}

bool ManifoldExpr::operator==(const ManifoldExpr& rhs) const {
    return kind_ == rhs.kind_ && m_ == rhs.m_ && n_ == rhs.n_ && factors_ == rhs.factors_;
}

namespace {

struct Token {
    enum class Type { Name, Integer, LParen, RParen, Comma, Separator, End };
    Type type = Type::End;
    std::string text;
    int value = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size())
            return {Token::Type::End, "<end of input>", 0};
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > 1'000'000)
                    throw std::invalid_argument("parse error: integer too large in descriptor");
                ++pos_;
            }
            return {Token::Type::Integer, std::string(text_.substr(start, pos_ - start)),
                    static_cast<int>(v)};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string word(text_.substr(start, pos_ - start));
            if (word == "X" || word == "x")
                return {Token::Type::Separator, word, 0};
            return {Token::Type::Name, word, 0};
        }
        ++pos_;
        switch (c) {
        case '(': return {Token::Type::LParen, "(", 0};
        case ')': return {Token::Type::RParen, ")", 0};
        case ',': return {Token::Type::Comma, ",", 0};
        default:
            throw std::invalid_argument(std::string("parse error: unexpected character '") + c +
                                        "' in descriptor");
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail_token(const Token& tok, const std::string& expected) {
    throw std::invalid_argument("parse error at '" + tok.text + "': expected " + expected);
}

} // namespace

ManifoldExpr parse_manifold(std::string_view text) {
    Lexer lex(text);
    std::vector<ManifoldExpr> factors;
    Token tok = lex.next();
    for (;;) {
        if (tok.type != Token::Type::Name)
            fail_token(tok, "a family name (RP, CP, P or H)");
        const std::string name = tok.text;
        const bool two_args = (name == "P" || name == "H");
        if (!two_args && name != "RP" && name != "CP")
            fail_token(tok, "one of RP, CP, P, H");

        tok = lex.next();
        if (tok.type != Token::Type::LParen)
            fail_token(tok, "'(' after " + name);
        tok = lex.next();
        if (tok.type != Token::Type::Integer)
            fail_token(tok, "an integer argument");
        const int first = tok.value;
        int second = 0;
        tok = lex.next();
        if (two_args) {
            if (tok.type != Token::Type::Comma)
                fail_token(tok, "',' (" + name + " takes two arguments)");
            tok = lex.next();
            if (tok.type != Token::Type::Integer)
                fail_token(tok, "an integer argument");
            second = tok.value;
            tok = lex.next();
        }
        if (tok.type != Token::Type::RParen)
            fail_token(tok, "')'");

        if (name == "RP")
            factors.push_back(ManifoldExpr::real_projective(first));
        else if (name == "CP")
            factors.push_back(ManifoldExpr::complex_projective(first));
        else if (name == "P")
            factors.push_back(ManifoldExpr::dold(first, second));
        else
            factors.push_back(ManifoldExpr::milnor(first, second));

        tok = lex.next();
        if (tok.type == Token::Type::End)
            break;
        if (tok.type != Token::Type::Separator)
            fail_token(tok, "'X' between factors or end of descriptor");
        tok = lex.next();
    }
    if (factors.size() == 1)
        return factors.front();
    return ManifoldExpr::product(std::move(factors));
}

namespace {

// Generator specs of a single (non-product) factor. `suffix` is empty for a
// standalone manifold and the 1-based factor position inside a product.
std::vector<GeneratorSpec> factor_generators(const ManifoldExpr& M, const std::string& suffix) {
    switch (M.kind()) {
    case ManifoldKind::RealProjective:
        return {{"u" + suffix, 1, M.n() + 1}};
    case ManifoldKind::ComplexProjective:
        return {{"v" + suffix, 2, M.n() + 1}};
    case ManifoldKind::Dold:
        return {{"c" + suffix, 1, M.m() + 1}, {"d" + suffix, 2, M.n() + 1}};
    case ManifoldKind::Milnor:
        return {{"a" + suffix, 1, M.m() + 1}, {"b" + suffix, 1, M.n() + 1}};
    case ManifoldKind::Product:
        break;
    }
    throw std::logic_error("factor_generators: unexpected product");
}

// Top-monomial exponents of a single factor (fundamental-class dual).
std::vector<int> factor_top(const ManifoldExpr& M) {
    switch (M.kind()) {
    case ManifoldKind::RealProjective: return {M.n()};
    case ManifoldKind::ComplexProjective: return {M.n()};
    case ManifoldKind::Dold: return {M.m(), M.n()};
    default: break;
    }
    throw std::logic_error("factor_top: unexpected kind");
}

} // namespace

CohomologyModel cohomology_model(const ManifoldExpr& M) {
    CohomologyModel model;
    if (M.kind() == ManifoldKind::Milnor) {
        model.ring = make_ring(factor_generators(M, ""), M.m() + M.n());
        model.pairing.kind = PairingRule::Kind::MilnorAmbient;
        model.pairing.m = M.m();
        model.pairing.n = M.n();
        const int top[2] = {M.m(), M.n()};
        model.pairing.top_code = model.ring->pack(top);
        return model;
    }
    std::vector<GeneratorSpec> gens;
    std::vector<int> top;
    if (M.kind() == ManifoldKind::Product) {
        for (std::size_t i = 0; i < M.factors().size(); ++i) {
            const auto& f = M.factors()[i];
            auto fg = factor_generators(f, std::to_string(i + 1));
            gens.insert(gens.end(), fg.begin(), fg.end());
            auto ft = factor_top(f);
            top.insert(top.end(), ft.begin(), ft.end());
        }
    } else {
        gens = factor_generators(M, "");
        top = factor_top(M);
    }
    model.ring = make_ring(std::move(gens), M.dimension());
    model.pairing.kind = PairingRule::Kind::TopMonomial;
    model.pairing.top_code = model.ring->pack(top);
    return model;
}

Gf2Poly total_sw_class(const ManifoldExpr& M, const CohomologyModel& model) {
    const auto& ring = model.ring;
    const Gf2Poly one = Gf2Poly::one(ring);
    switch (M.kind()) {
    case ManifoldKind::RealProjective:
        return pow(one + Gf2Poly::generator(ring, 0), M.n() + 1);
    case ManifoldKind::ComplexProjective:
        return pow(one + Gf2Poly::generator(ring, 0), M.n() + 1);
    case ManifoldKind::Dold: {
        const Gf2Poly c = Gf2Poly::generator(ring, 0);
        const Gf2Poly d = Gf2Poly::generator(ring, 1);
        return pow(one + c, M.m()) * pow(one + c + d, M.n() + 1);
    }
    case ManifoldKind::Milnor: {
        const Gf2Poly a = Gf2Poly::generator(ring, 0);
        const Gf2Poly b = Gf2Poly::generator(ring, 1);
        return pow(one + a, M.m() + 1) * pow(one + b, M.n() + 1) * inverse_unit(one + a + b);
    }
    case ManifoldKind::Product: {
        Gf2Poly result = one;
        std::size_t slot = 0;
        for (const auto& f : M.factors()) {
            const auto fm = cohomology_model(f);
            result = result * tensor_embed(total_sw_class(f, fm), ring, slot);
            slot += fm.ring->generator_count();
        }
        return result;
    }
    }
    throw std::logic_error("total_sw_class: unhandled kind");
}

Gf2Poly total_sw_class(const ManifoldExpr& M) {
    return total_sw_class(M, cohomology_model(M));
}

Gf2Poly sw_graded(const ManifoldExpr& M, int i) {
    return graded_component(total_sw_class(M), i);
}

int evaluate_pairing(const CohomologyModel& model, const Gf2Poly& x) {
    if (!x.ring() || (x.ring() != model.ring && !x.ring()->same_presentation(*model.ring)))
        throw std::invalid_argument("evaluate_pairing: class lives in a different ring");
    if (model.pairing.kind == PairingRule::Kind::TopMonomial)
        return x.coefficient_of_code(model.pairing.top_code);
    const Gf2Poly cap =
        Gf2Poly::generator(model.ring, 0) + Gf2Poly::generator(model.ring, 1);
    return (cap * x).coefficient_of_code(model.pairing.top_code);
}

int evaluate_pairing(const ManifoldExpr& M, const Gf2Poly& x) {
    return evaluate_pairing(cohomology_model(M), x);
}

int euler_mod2(const ManifoldExpr& M) {
    const auto chi_rp = [](int k) { return (k + 1) % 2; };
    const auto chi_cp = [](int s) { return (s + 1) % 2; };
    switch (M.kind()) {
    case ManifoldKind::RealProjective: return chi_rp(M.n());
    case ManifoldKind::ComplexProjective: return chi_cp(M.n());
    case ManifoldKind::Dold: return chi_rp(M.m()) * chi_cp(M.n());
    case ManifoldKind::Milnor: return chi_rp(M.m()) * chi_rp(M.n() - 1);
    case ManifoldKind::Product: {
        int chi = 1;
        for (const auto& f : M.factors())
            chi *= euler_mod2(f);
        return chi;
    }
    }
    return 0;
}

} // namespace bordism
