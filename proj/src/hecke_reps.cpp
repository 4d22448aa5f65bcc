#include "cherednik/hecke_reps.hpp"

#include <cstdlib>

namespace cherednik {

const char* algebra_name(AlgebraId a) {
    switch (a) {
        case AlgebraId::V: return "v";
        case AlgebraId::III: return "iii";
        case AlgebraId::III_D7: return "iii-d7";
        case AlgebraId::III_D8: return "iii-d8";
    }
    return "?";
}

std::optional<AlgebraId> algebra_from_name(const std::string& s) {
    if (s == "v") return AlgebraId::V;
    if (s == "iii") return AlgebraId::III;
    if (s == "iii-d7") return AlgebraId::III_D7;
    if (s == "iii-d8") return AlgebraId::III_D8;
    return std::nullopt;
}

DifferenceOperator::DifferenceOperator(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.den.is_zero()) throw DivisionByZero("difference-operator term with zero denominator");
}

DifferenceOperator DifferenceOperator::scalar(ParamRat c) {
    DifferenceOperator d;
    d.terms_.push_back({LaurentPoly(std::move(c)), LaurentPoly(1), Substitution::identity()});
    return d;
}

LaurentPoly DifferenceOperator::apply(const LaurentPoly& f) const {
    if (terms_.empty() || f.is_zero()) return LaurentPoly();
    // Common denominator: the product of the distinct term denominators.
    std::vector<const LaurentPoly*> distinct;
    for (const auto& t : terms_) {
        bool seen = false;
        for (const auto* d : distinct)
            if (*d == t.den) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(&t.den);
    }
    LaurentPoly common(1);
    for (const auto* d : distinct) common = common * *d;
    LaurentPoly numerator;
    for (const auto& t : terms_) {
        LaurentPoly mult = LaurentPoly::exact_div(common, t.den);
        numerator += t.num * f.substitute(t.sub) * mult;
    }
    try {
        return LaurentPoly::exact_div(numerator, common);
    } catch (const NonExactDivision&) {
        throw OperatorNotPolynomial("operator application left the Laurent ring");
    }
}

DifferenceOperator DifferenceOperator::scaled(const ParamRat& c) const {
    DifferenceOperator d;
    if (c.is_zero()) return d;
    d.terms_ = terms_;
    for (auto& t : d.terms_) t.num = t.num.scaled(c);
    return d;
}

DifferenceOperator operator+(const DifferenceOperator& x, const DifferenceOperator& y) {
    DifferenceOperator d;
    d.terms_ = x.terms_;
    d.terms_.insert(d.terms_.end(), y.terms_.begin(), y.terms_.end());
    return d;
}

namespace {

// 1 - u·z and friends, as Laurent polynomials.
LaurentPoly one_minus(const ParamRat& u, int k) {
    LaurentPoly p(1);
    p.add_term(k, -u);
    return p;
}

DifferenceOperator make_x(int k) {
    return DifferenceOperator({{LaurentPoly::z(k), LaurentPoly(1), Substitution::identity()}});
}

// (T0 f)[z] = pref(z)/(q - z^2) · (f[z] - f[q/z]) with pref = (z-c)z for the
// type-V algebra and -z for the others.
DifferenceOperator make_t0(const Params& p, bool type_v) {
    LaurentPoly pref;
    if (type_v) {
        pref = LaurentPoly::z(2);
        pref.add_term(1, -p.c);
    } else {
        pref = LaurentPoly::monomial(1, ParamRat(-1));
    }
    LaurentPoly den(p.q());
    den.add_term(2, ParamRat(-1));
    Substitution flip(p.q(), -1); // z -> q/z
    return DifferenceOperator({{pref, den, Substitution::identity()}, {-pref, den, flip}});
}

// (T1 f)[z] = ((a+b)z - (1+ab))/(1-z^2) f[z] + (1-az)(1-bz)/(1-z^2) f[1/z]
DifferenceOperator make_t1_v_iii(const Params& p) {
    LaurentPoly num1;
    num1.add_term(1, p.a + p.b);
    num1.add_term(0, -(ParamRat(1) + p.a * p.b));
    LaurentPoly num2 = one_minus(p.a, 1) * one_minus(p.b, 1);
    LaurentPoly den = one_minus(ParamRat(1), 2); // 1 - z^2
    Substitution inv(ParamRat(1), -1);
    return DifferenceOperator({{num1, den, Substitution::identity()}, {num2, den, inv}});
}

// (T1 f)[z] = (az-1)/(1-z^2) (f[z] - f[1/z])
DifferenceOperator make_t1_d7(const Params& p) {
    LaurentPoly num;
    num.add_term(1, p.a);
    num.add_term(0, ParamRat(-1));
    LaurentPoly den = one_minus(ParamRat(1), 2);
    Substitution inv(ParamRat(1), -1);
    return DifferenceOperator({{num, den, Substitution::identity()}, {-num, den, inv}});
}

} // namespace

DifferenceOperator t1_inverse(AlgebraId alg, const Params& params) {
    if (alg != AlgebraId::V && alg != AlgebraId::III) throw T1InverseUnavailable();
    // (T1+ab)(T1+1) = 0 gives T1^{-1} = -(T1 + 1 + ab)/(ab).
    const ParamRat ab = params.a * params.b;
    const ParamRat minus_inv_ab = -ab.inverse();
    DifferenceOperator d = make_t1_v_iii(params).scaled(minus_inv_ab);
    return d + DifferenceOperator::scalar((ParamRat(1) + ab) * minus_inv_ab);
}

Representation::Representation(AlgebraId alg, Params params) : alg_(alg), params_(std::move(params)) {
    if (alg_ == AlgebraId::III_D8) params_.a = ParamRat(0); // D8 is D7 at a = 0
    prim_.emplace(Token::X, make_x(1));
    prim_.emplace(Token::Xinv, make_x(-1));
    switch (alg_) {
        case AlgebraId::V:
            prim_.emplace(Token::T0, make_t0(params_, true));
            prim_.emplace(Token::T1, make_t1_v_iii(params_));
            break;
        case AlgebraId::III:
            prim_.emplace(Token::T0, make_t0(params_, false));
            prim_.emplace(Token::T1, make_t1_v_iii(params_));
            break;
        case AlgebraId::III_D7:
        case AlgebraId::III_D8:
            prim_.emplace(Token::T0, make_t0(params_, false));
            prim_.emplace(Token::T1, make_t1_d7(params_));
            break;
    }
    if (alg_ == AlgebraId::V || alg_ == AlgebraId::III) {
        prim_.emplace(Token::T1inv, t1_inverse(alg_, params_));
        if (alg_ == AlgebraId::V) {
            // Z = (T0+1)·T1^{-1},  Y = T1·T0
            z_def_ = NCExpression::word({Token::T0, Token::T1inv}) +
                     NCExpression::word({Token::T1inv});
            y_def_ = NCExpression::word({Token::T1, Token::T0});
        } else {
            // Z = -X·T0·T1^{-1} + T1^{-1},  Y = -T1·X·T0
            z_def_ = NCExpression::word({Token::X, Token::T0, Token::T1inv}, ParamRat(-1)) +
                     NCExpression::word({Token::T1inv});
            y_def_ = NCExpression::word({Token::T1, Token::X, Token::T0}, ParamRat(-1));
        }
    }
}

bool Representation::has(Token t) const {
    if (prim_.count(t)) return true;
    return (t == Token::Y && y_def_) || (t == Token::Z && z_def_);
}

const DifferenceOperator& Representation::op(Token t) const {
    auto it = prim_.find(t);
    if (it == prim_.end()) {
        if (t == Token::T1inv) throw T1InverseUnavailable();
        throw UnknownToken(std::string("token ") + token_name(t) + " is not available in algebra " +
                           algebra_name(alg_));
    }
    return it->second;
}

LaurentPoly Representation::apply(Token t, const LaurentPoly& f) const {
    auto it = prim_.find(t);
    if (it != prim_.end()) return it->second.apply(f);
    if (t == Token::Y && y_def_) return eval(*y_def_, f);
    if (t == Token::Z && z_def_) return eval(*z_def_, f);
    if (t == Token::T1inv) throw T1InverseUnavailable();
    throw UnknownToken(std::string("token ") + token_name(t) + " is not available in algebra " +
                       algebra_name(alg_));
}

LaurentPoly Representation::apply_word(const std::vector<Token>& word, const LaurentPoly& f) const {
    LaurentPoly cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply(*it, cur);
    return cur;
}

LaurentPoly Representation::eval(const NCExpression& e, const LaurentPoly& f) const {
    LaurentPoly acc;
    for (const auto& t : e.terms()) acc += apply_word(t.word, f).scaled(t.coeff);
    return acc;
}

const NCExpression& Representation::y_definition() const {
    if (!y_def_) throw UnknownToken("Y is not defined for this algebra");
    return *y_def_;
}

const NCExpression& Representation::z_definition() const {
    if (!z_def_) throw UnknownToken("Z is not defined for this algebra");
    return *z_def_;
}

Representation build_rep(AlgebraId alg, const Params& params) { return Representation(alg, params); }

DifferenceOperator explicit_y_v(const Params& p) {
    // (Y f)[z] = (z-c)z(1-(a+b)z+ab) / ((1-z^2)(q-z^2)) · (f[q/z] - f[z])
    //          + (1-az)(1-bz)(1-cz) / ((1-z^2)(1-qz^2)) · (f[qz] - f[1/z])
    LaurentPoly zc = LaurentPoly::z(2);
    zc.add_term(1, -p.c); // (z-c)z
    LaurentPoly bracket(ParamRat(1) + p.a * p.b);
    bracket.add_term(1, -(p.a + p.b)); // 1-(a+b)z+ab
    LaurentPoly num1 = zc * bracket;

    LaurentPoly one_minus_z2 = one_minus(ParamRat(1), 2);
    LaurentPoly q_minus_z2(p.q());
    q_minus_z2.add_term(2, ParamRat(-1));
    LaurentPoly den1 = one_minus_z2 * q_minus_z2;

    LaurentPoly num2 = one_minus(p.a, 1) * one_minus(p.b, 1) * one_minus(p.c, 1);
    LaurentPoly den2 = one_minus_z2 * one_minus(p.q(), 2);

    Substitution q_over_z(p.q(), -1);
    Substitution qz(p.q(), +1);
    Substitution inv(ParamRat(1), -1);
    return DifferenceOperator({{num1, den1, q_over_z},
                               {-num1, den1, Substitution::identity()},
                               {num2, den2, qz},
                               {-num2, den2, inv}});
}

std::vector<Token> x_power_word(int k) {
    std::vector<Token> w;
    const Token t = k >= 0 ? Token::X : Token::Xinv;
    for (int i = 0; i < std::abs(k); ++i) w.push_back(t);
    return w;
}

} // namespace cherednik
