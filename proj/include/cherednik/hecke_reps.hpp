#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/laurent.hpp"
#include "cherednik/ncexpr.hpp"

namespace cherednik {

enum class AlgebraId { V, III, III_D7, III_D8 };

const char* algebra_name(AlgebraId a);                       // "v", "iii", "iii-d7", "iii-d8"
std::optional<AlgebraId> algebra_from_name(const std::string& s);

/* A finite sum of terms (num/den)·f[sub(z)].  Application clears the common
 * denominator and divides exactly; if the division is not exact the formal
 * expression does not preserve the Laurent ring and OperatorNotPolynomial
 * is raised. */
class DifferenceOperator {
public:
    struct Term {
        LaurentPoly num;
        LaurentPoly den;
        Substitution sub;
    };

    DifferenceOperator() = default;
    explicit DifferenceOperator(std::vector<Term> terms);

    static DifferenceOperator scalar(ParamRat c);

    const std::vector<Term>& terms() const { return terms_; }

    LaurentPoly apply(const LaurentPoly& f) const;

    DifferenceOperator scaled(const ParamRat& c) const;
    friend DifferenceOperator operator+(const DifferenceOperator& x, const DifferenceOperator& y);

private:
    std::vector<Term> terms_;
};

/* The basic representation of one algebra on Laurent polynomials.  X, Xinv,
 * T0, T1 (and T1inv where the T1 quadratic is invertible) are primitive
 * difference operators; Y and Z are kept as words and applied letter by
 * letter, rightmost first, so every intermediate stays a Laurent
 * polynomial. */
class Representation {
public:
    Representation(AlgebraId alg, Params params);

    AlgebraId algebra() const { return alg_; }
    const Params& params() const { return params_; }

    bool has(Token t) const;
    const DifferenceOperator& op(Token t) const; // primitive tokens only

    LaurentPoly apply(Token t, const LaurentPoly& f) const;
    LaurentPoly apply_word(const std::vector<Token>& word, const LaurentPoly& f) const;
    LaurentPoly eval(const NCExpression& e, const LaurentPoly& f) const;

    // Word definitions of Y and Z (algebras with a T1 inverse only).
    const NCExpression& y_definition() const;
    const NCExpression& z_definition() const;

private:
    AlgebraId alg_;
    Params params_;
    std::map<Token, DifferenceOperator> prim_;
    std::optional<NCExpression> y_def_;
    std::optional<NCExpression> z_def_;
};

Representation build_rep(AlgebraId alg, const Params& params = Params{});

// The inverse of T1 read off from (T1+ab)(T1+1) = 0; unavailable for the
// algebras whose quadratic is T1(T1+1) = 0.
DifferenceOperator t1_inverse(AlgebraId alg, const Params& params = Params{});

// The closed two-pair difference-operator form of Y = T1·T0 for the type-V
// algebra.
DifferenceOperator explicit_y_v(const Params& params = Params{});

// X^k as a token word (Xinv repeated for negative k).
std::vector<Token> x_power_word(int k);

} // namespace cherednik
