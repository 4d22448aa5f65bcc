#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "cherednik/rational.hpp"

namespace cherednik {

/* Exact arithmetic in the parameters s, a, b, c with q = s^2.
 *
 * Everything downstream is linear algebra over ParamRat, the field of
 * rational functions Q(s, a, b, c).  Working in s instead of q keeps the
 * formal square root q^{1/2} = s inside ordinary polynomial arithmetic; a
 * value lies in Q(q, a, b, c) exactly when it is even in s, which is a
 * testable property (even_in_s) rather than a convention.
 */

// Exponents of (s, a, b, c), all non-negative.
using ExpVec = std::array<int, 4>;

inline constexpr int kVarS = 0;
inline constexpr int kVarA = 1;
inline constexpr int kVarB = 2;
inline constexpr int kVarC = 3;

inline int total_degree(const ExpVec& e) { return e[0] + e[1] + e[2] + e[3]; }

// Graded lexicographic order on exponent vectors; the canonical term order.
struct GradedLexLess {
    bool operator()(const ExpVec& x, const ExpVec& y) const noexcept {
        const int dx = total_degree(x), dy = total_degree(y);
        if (dx != dy) return dx < dy;
        return x < y;
    }
};

class ParamPoly {
public:
    using TermMap = std::map<ExpVec, Rat, GradedLexLess>;

    ParamPoly() = default;
    ParamPoly(const Rat& constant) { add_term({0, 0, 0, 0}, constant); }
    ParamPoly(long constant) : ParamPoly(Rat(constant)) {}

    static ParamPoly variable(int index, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates c into the coefficient of s^e0 a^e1 b^e2 c^e3; zero
    // coefficients are never stored.
    void add_term(const ExpVec& e, const Rat& c);

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { x += y; return x; }
    friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { x -= y; return x; }
    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);

    friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }

    void scale(const Rat& c);

    // Leading term under graded lex.
    const std::pair<const ExpVec, Rat>& leading() const;

    // gcd of the coefficients with the sign of the leading coefficient;
    // dividing by it yields the primitive part with positive leading term.
    Rat content_signed() const;

    // Componentwise minimum of the exponent vectors (the largest monomial
    // dividing every term).  Zero vector for the zero polynomial.
    ExpVec monomial_gcd() const;
    ParamPoly divide_monomial(const ExpVec& e) const;

    // Exact single-divisor division: returns f/g when g divides f, nullopt
    // otherwise.
    std::optional<ParamPoly> divide_exact(const ParamPoly& g) const;

    // Substitute one variable by a rational value.
    ParamPoly substitute(int var, const Rat& value) const;
    Rat evaluate(const std::array<Rat, 4>& point) const;

    bool even_in_s() const;

    // Canonical text, terms in descending graded-lex order; even s-powers
    // print as q, odd ones as s.
    std::string text() const;
    std::string latex() const;

private:
    TermMap terms_;
};

/* A fraction of ParamPoly values.  Kept in a partially reduced canonical
 * shape: common monomial factors stripped, the exact-division reduction
 * applied when the denominator divides the numerator, and the denominator
 * scaled to its primitive part with positive leading coefficient.  Full
 * multivariate gcd is deliberately absent; equality is decided by
 * cross-multiplication, which agrees with equality after any common-factor
 * reduction. */
class ParamRat {
public:
    ParamRat() : num_(), den_(1) {}
    ParamRat(const Rat& constant) : num_(constant), den_(1) {}
    ParamRat(long constant) : num_(Rat(constant)), den_(1) {}
    ParamRat(ParamPoly num) : num_(std::move(num)), den_(1) { normalize(); }
    ParamRat(ParamPoly num, ParamPoly den);

    static ParamRat variable(int index, int power = 1) {
        return ParamRat(ParamPoly::variable(index, power));
    }
    static ParamRat s() { return variable(kVarS); }
    static ParamRat a() { return variable(kVarA); }
    static ParamRat b() { return variable(kVarB); }
    static ParamRat c() { return variable(kVarC); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    ParamRat operator-() const;
    ParamRat& operator+=(const ParamRat& o);
    ParamRat& operator-=(const ParamRat& o);
    ParamRat& operator*=(const ParamRat& o);
    ParamRat& operator/=(const ParamRat& o);
    friend ParamRat operator+(ParamRat x, const ParamRat& y) { x += y; return x; }
    friend ParamRat operator-(ParamRat x, const ParamRat& y) { x -= y; return x; }
    friend ParamRat operator*(ParamRat x, const ParamRat& y) { x *= y; return x; }
    friend ParamRat operator/(ParamRat x, const ParamRat& y) { x /= y; return x; }

    ParamRat inverse() const;
    ParamRat pow(int e) const;

    // Cross-multiplication equality test.
    bool equals(const ParamRat& o) const;
    friend bool operator==(const ParamRat& x, const ParamRat& y) { return x.equals(y); }
    friend bool operator!=(const ParamRat& x, const ParamRat& y) { return !x.equals(y); }

    Rat evaluate(const std::array<Rat, 4>& point) const;
    ParamRat substitute(int var, const Rat& value) const;

    // True iff num and den, after stripping their common pure-s monomial
    // factor, contain only even powers of s.
    bool even_in_s() const;

    std::string text() const;
    std::string latex() const;

private:
    void normalize();

    ParamPoly num_;
    ParamPoly den_;
};

/* The four parameters as field elements.  Construction of operators and
 * polynomial families goes through a Params value, so the symbolic and the
 * specialized (parameters-as-numbers) modes share one code path. */
struct Params {
    ParamRat s = ParamRat::s();
    ParamRat a = ParamRat::a();
    ParamRat b = ParamRat::b();
    ParamRat c = ParamRat::c();

    ParamRat q() const { return s * s; }

    // q^{k/2} = s^k for any integer k.
    ParamRat q_half_pow(int k) const { return s.pow(k); }

    static Params at_point(const Rat& s, const Rat& a, const Rat& b, const Rat& c) {
        Params p;
        p.s = ParamRat(s);
        p.a = ParamRat(a);
        p.b = ParamRat(b);
        p.c = ParamRat(c);
        return p;
    }
};

} // namespace cherednik
