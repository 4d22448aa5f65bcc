#include "cherednik/ncexpr.hpp"

#include <algorithm>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

const char* token_name(Token t) {
    switch (t) {
        case Token::X: return "X";
        case Token::Xinv: return "Xi";
        case Token::T0: return "T0";
        case Token::T1: return "T1";
        case Token::T1inv: return "T1i";
        case Token::Y: return "Y";
        case Token::Z: return "Z";
    }
    return "?";
}

NCExpression NCExpression::scalar(ParamRat c) {
    NCExpression e;
    if (!c.is_zero()) e.terms_.push_back({std::move(c), {}});
    return e;
}

NCExpression NCExpression::letter(Token t) {
    NCExpression e;
    e.terms_.push_back({ParamRat(1), {t}});
    return e;
}

NCExpression NCExpression::word(std::vector<Token> w, ParamRat coeff) {
    NCExpression e;
    if (!coeff.is_zero()) e.terms_.push_back({std::move(coeff), std::move(w)});
    return e;
}

NCExpression NCExpression::operator-() const {
    NCExpression r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

NCExpression& NCExpression::operator+=(const NCExpression& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    combine();
    return *this;
}

NCExpression& NCExpression::operator-=(const NCExpression& o) {
    *this += -o;
    return *this;
}

NCExpression operator*(const NCExpression& x, const NCExpression& y) {
    NCExpression r;
    for (const auto& tx : x.terms()) {
        for (const auto& ty : y.terms()) {
            NCExpression::Term t;
            t.coeff = tx.coeff * ty.coeff;
            t.word = tx.word;
            t.word.insert(t.word.end(), ty.word.begin(), ty.word.end());
            r.terms_.push_back(std::move(t));
        }
    }
    r.combine();
    return r;
}

NCExpression NCExpression::scaled(const ParamRat& c) const {
    if (c.is_zero()) return NCExpression();
    NCExpression r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

NCExpression NCExpression::pow(int e) const {
    if (e < 0) throw SyntaxError("negative power of a non-invertible word");
    NCExpression r = one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

void NCExpression::combine() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().word == t.word)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

std::string NCExpression::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff.text();
        for (Token tok : t.word) os << "*" << token_name(tok);
    }
    return os.str();
}

NCExpression eta_image(const NCExpression& e) {
    NCExpression r;
    for (const auto& t : e.terms()) {
        NCExpression term = NCExpression::scalar(t.coeff);
        for (Token tok : t.word) {
            switch (tok) {
                case Token::T0:
                    term = term * NCExpression::word({Token::X, Token::T0}, ParamRat(-1));
                    break;
                case Token::Y:
                case Token::Z:
                    throw UnknownToken("eta is defined on words in X, Xi, T0, T1, T1i");
                default:
                    term = term * NCExpression::letter(tok);
            }
        }
        r += term;
    }
    return r;
}

} // namespace cherednik
