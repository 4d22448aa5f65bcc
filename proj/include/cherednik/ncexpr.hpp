#pragma once

#include <string>
#include <vector>

#include "cherednik/param_field.hpp"

namespace cherednik {

// Generator tokens of the operator algebras.  X/Xinv, T0, T1 are primitive
// in every algebra; T1inv, Y, Z exist only where T1 is invertible.
enum class Token { X, Xinv, T0, T1, T1inv, Y, Z };

const char* token_name(Token t);

/* Formal linear combination over the parameter field of words in the
 * generator tokens.  The empty word is the identity.  This is the shape in
 * which defining relations, ordering relations and derived operators are
 * written down; evaluation against a representation happens elsewhere. */
class NCExpression {
public:
    struct Term {
        ParamRat coeff;
        std::vector<Token> word;
    };

    NCExpression() = default; // zero
    static NCExpression scalar(ParamRat c);
    static NCExpression one() { return scalar(ParamRat(1)); }
    static NCExpression letter(Token t);
    static NCExpression word(std::vector<Token> w, ParamRat coeff = ParamRat(1));

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    NCExpression operator-() const;
    NCExpression& operator+=(const NCExpression& o);
    NCExpression& operator-=(const NCExpression& o);
    friend NCExpression operator+(NCExpression x, const NCExpression& y) { x += y; return x; }
    friend NCExpression operator-(NCExpression x, const NCExpression& y) { x -= y; return x; }

    // Noncommutative product: coefficients multiply, words concatenate.
    friend NCExpression operator*(const NCExpression& x, const NCExpression& y);

    NCExpression scaled(const ParamRat& c) const;
    NCExpression pow(int e) const; // e >= 0

    std::string text() const;

private:
    // Merge identical words, drop zero terms, sort words canonically.
    void combine();

    std::vector<Term> terms_;
};

// Convenience for building relations: scalars promote via ParamRat.
inline NCExpression operator*(const ParamRat& c, const NCExpression& e) { return e.scaled(c); }
inline NCExpression operator+(const NCExpression& e, const ParamRat& c) {
    return e + NCExpression::scalar(c);
}
inline NCExpression operator-(const NCExpression& e, const ParamRat& c) {
    return e - NCExpression::scalar(c);
}

// The isomorphism sending T0 to -X·T0 and fixing T1, X.  Accepts words in
// X, Xinv, T0, T1, T1inv; Y and Z tokens are rejected.
NCExpression eta_image(const NCExpression& e);

} // namespace cherednik
