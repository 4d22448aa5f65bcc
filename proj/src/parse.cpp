#include "cherednik/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "cherednik/hecke_reps.hpp"

namespace cherednik {

namespace {

struct Lexeme {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
};

std::vector<Lexeme> lex(const std::string& in) {
    std::vector<Lexeme> out;
    std::size_t i = 0;
    while (i < in.size()) {
        const char ch = in[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
            out.push_back({Lexeme::Int, in.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < in.size() && std::isalnum(static_cast<unsigned char>(in[j]))) ++j;
            out.push_back({Lexeme::Ident, in.substr(i, j - i)});
            i = j;
            continue;
        }
        switch (ch) {
            case '+': out.push_back({Lexeme::Plus, "+"}); break;
            case '-': out.push_back({Lexeme::Minus, "-"}); break;
            case '*': out.push_back({Lexeme::Star, "*"}); break;
            case '/': out.push_back({Lexeme::Slash, "/"}); break;
            case '^': out.push_back({Lexeme::Caret, "^"}); break;
            case '(': out.push_back({Lexeme::LParen, "("}); break;
            case ')': out.push_back({Lexeme::RParen, ")"}); break;
            default:
                throw SyntaxError(std::string("unexpected character '") + ch + "'");
        }
        ++i;
    }
    out.push_back({Lexeme::End, ""});
    return out;
}

/* Recursive-descent evaluator, parameterized over the value domain V,
 * which must provide: from_int, from_var (returns nullopt when the name is
 * unknown), neg, add, mul, div, pow. */
template <class V>
class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    typename V::value_type run() {
        auto v = expr();
        expect(Lexeme::End, "end of input");
        return v;
    }

private:
    using value_type = typename V::value_type;

    const Lexeme& peek() const { return toks_[pos_]; }
    Lexeme take() { return toks_[pos_++]; }
    void expect(typename Lexeme::Kind k, const char* what) {
        if (peek().kind != k) throw SyntaxError(std::string("expected ") + what);
        ++pos_;
    }

    value_type expr() {
        bool negate = false;
        if (peek().kind == Lexeme::Minus) {
            ++pos_;
            negate = true;
        } else if (peek().kind == Lexeme::Plus) {
            ++pos_;
        }
        value_type acc = term();
        if (negate) acc = V::neg(acc);
        while (peek().kind == Lexeme::Plus || peek().kind == Lexeme::Minus) {
            const bool minus = take().kind == Lexeme::Minus;
            value_type t = term();
            acc = V::add(acc, minus ? V::neg(t) : t);
        }
        return acc;
    }

    value_type term() {
        value_type acc = factor();
        while (peek().kind == Lexeme::Star || peek().kind == Lexeme::Slash) {
            const bool divide = take().kind == Lexeme::Slash;
            value_type f = factor();
            acc = divide ? V::div(acc, f) : V::mul(acc, f);
        }
        return acc;
    }

    value_type factor() {
        value_type v = primary();
        if (peek().kind == Lexeme::Caret) {
            ++pos_;
            int sign = 1;
            if (peek().kind == Lexeme::Minus) {
                ++pos_;
                sign = -1;
            }
            if (peek().kind != Lexeme::Int) throw SyntaxError("expected integer exponent after ^");
            const int e = sign * std::stoi(take().text);
            v = V::pow(v, e);
        }
        return v;
    }

    value_type primary() {
        const Lexeme& t = peek();
        if (t.kind == Lexeme::Int) return V::from_int(std::stol(take().text));
        if (t.kind == Lexeme::Ident) {
            auto v = V::from_var(t.text);
            if (!v) throw SyntaxError("unknown symbol '" + t.text + "'");
            ++pos_;
            return *v;
        }
        if (t.kind == Lexeme::LParen) {
            ++pos_;
            value_type v = expr();
            expect(Lexeme::RParen, "')'");
            return v;
        }
        throw SyntaxError("expected a value");
    }

    std::vector<Lexeme> toks_;
    std::size_t pos_ = 0;
};

struct LaurentDomain {
    using value_type = LaurentPoly;
    static LaurentPoly from_int(long n) { return LaurentPoly(n); }
    static std::optional<LaurentPoly> from_var(const std::string& name) {
        if (name == "z") return LaurentPoly::z();
        if (name == "q") return LaurentPoly(ParamRat::s() * ParamRat::s());
        if (name == "s") return LaurentPoly(ParamRat::s());
        if (name == "a") return LaurentPoly(ParamRat::a());
        if (name == "b") return LaurentPoly(ParamRat::b());
        if (name == "c") return LaurentPoly(ParamRat::c());
        return std::nullopt;
    }
    static LaurentPoly neg(const LaurentPoly& f) { return -f; }
    static LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
    static LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }
    static LaurentPoly div(const LaurentPoly& f, const LaurentPoly& g) {
        if (g.is_zero()) throw SyntaxError("division by zero");
        if (g.terms().size() == 1 && g.terms().begin()->first == 0)
            return f.scaled(g.terms().begin()->second.inverse());
        throw SyntaxError("division by a polynomial in z");
    }
    static LaurentPoly pow(const LaurentPoly& f, int e) {
        if (e == 0) return LaurentPoly(1);
        if (e > 0) {
            LaurentPoly r(1);
            for (int i = 0; i < e; ++i) r = r * f;
            return r;
        }
        if (f.terms().size() != 1) throw SyntaxError("negative power of a non-monomial");
        const auto& [k, c] = *f.terms().begin();
        return LaurentPoly::monomial(k * e, c.pow(e));
    }
};

struct NCDomain {
    using value_type = NCExpression;
    static NCExpression from_int(long n) { return NCExpression::scalar(ParamRat(n)); }
    static std::optional<NCExpression> from_var(const std::string& name) {
        if (name == "X") return NCExpression::letter(Token::X);
        if (name == "Xi") return NCExpression::letter(Token::Xinv);
        if (name == "T0") return NCExpression::letter(Token::T0);
        if (name == "T1") return NCExpression::letter(Token::T1);
        if (name == "T1i") return NCExpression::letter(Token::T1inv);
        if (name == "Y") return NCExpression::letter(Token::Y);
        if (name == "Z") return NCExpression::letter(Token::Z);
        if (name == "q") return NCExpression::scalar(ParamRat::s() * ParamRat::s());
        if (name == "s") return NCExpression::scalar(ParamRat::s());
        if (name == "a") return NCExpression::scalar(ParamRat::a());
        if (name == "b") return NCExpression::scalar(ParamRat::b());
        if (name == "c") return NCExpression::scalar(ParamRat::c());
        return std::nullopt;
    }
    static NCExpression neg(const NCExpression& e) { return -e; }
    static NCExpression add(const NCExpression& e, const NCExpression& f) { return e + f; }
    static NCExpression mul(const NCExpression& e, const NCExpression& f) { return e * f; }

    static std::optional<ParamRat> as_scalar(const NCExpression& e) {
        if (e.is_zero()) return ParamRat(0);
        if (e.terms().size() == 1 && e.terms().front().word.empty())
            return e.terms().front().coeff;
        return std::nullopt;
    }

    static NCExpression div(const NCExpression& e, const NCExpression& f) {
        auto s = as_scalar(f);
        if (!s) throw SyntaxError("division is only defined by scalars");
        if (s->is_zero()) throw SyntaxError("division by zero");
        return e.scaled(s->inverse());
    }

    static NCExpression pow(const NCExpression& e, int n) {
        if (n >= 0) return e.pow(n);
        if (auto s = as_scalar(e)) {
            if (s->is_zero()) throw SyntaxError("division by zero");
            return NCExpression::scalar(s->pow(n));
        }
        // Negative powers only for the bare letters X and Xi.
        if (e.terms().size() == 1 && e.terms().front().coeff.is_one() &&
            e.terms().front().word.size() == 1) {
            const Token t = e.terms().front().word.front();
            if (t == Token::X) return NCExpression::word(x_power_word(n));
            if (t == Token::Xinv) return NCExpression::word(x_power_word(-n));
        }
        throw SyntaxError("negative power of a non-invertible word");
    }
};

} // namespace

ParamRat parse_param_rat(const std::string& text) {
    LaurentPoly p = Parser<LaurentDomain>(text).run();
    if (p.is_zero()) return ParamRat(0);
    if (p.terms().size() == 1 && p.terms().begin()->first == 0) return p.terms().begin()->second;
    throw SyntaxError("expected a z-free coefficient expression");
}

LaurentPoly parse_laurent_poly(const std::string& text) { return Parser<LaurentDomain>(text).run(); }

NCExpression parse_nc_expression(const std::string& text) { return Parser<NCDomain>(text).run(); }

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw SyntaxError("expected {\"terms\": [...]} polynomial JSON");
    LaurentPoly f;
    for (const auto& t : j["terms"]) {
        if (!t.contains("z") || !t.contains("coeff"))
            throw SyntaxError("polynomial JSON term needs \"z\" and \"coeff\"");
        f.add_term(t["z"].get<int>(), parse_param_rat(t["coeff"].get<std::string>()));
    }
    return f;
}

} // namespace cherednik
