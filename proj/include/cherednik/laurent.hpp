#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "cherednik/param_field.hpp"

namespace cherednik {

// z ↦ unit · z^direction with direction ∈ {+1, -1} and unit a nonzero
// element of the parameter field (typically 1, q or 1/q).
struct Substitution {
    ParamRat unit;
    int direction = 1;

    Substitution(ParamRat u, int dir) : unit(std::move(u)), direction(dir) {
        if (unit.is_zero()) throw DivisionByZero("substitution unit must be nonzero");
    }
    static Substitution identity() { return Substitution(ParamRat(1), +1); }
};

/* Laurent polynomials in z over the parameter field; sparse exponent map
 * with no stored zero coefficients. */
class LaurentPoly {
public:
    using TermMap = std::map<int, ParamRat>;

    LaurentPoly() = default;
    LaurentPoly(ParamRat constant) { add_term(0, std::move(constant)); }
    LaurentPoly(long constant) : LaurentPoly(ParamRat(constant)) {}

    static LaurentPoly monomial(int k, ParamRat coeff = ParamRat(1)) {
        LaurentPoly f;
        f.add_term(k, std::move(coeff));
        return f;
    }
    static LaurentPoly z(int k = 1) { return monomial(k); }

    bool is_zero() const { return coeffs_.empty(); }
    const TermMap& terms() const { return coeffs_; }

    int min_deg() const;
    int max_deg() const;
    ParamRat coeff(int k) const;

    void add_term(int k, ParamRat c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { x += y; return x; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { x -= y; return x; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);

    LaurentPoly scaled(const ParamRat& c) const;

    LaurentPoly substitute(const Substitution& sub) const;

    // Exact quotient f = g·h; raises NonExactDivision when none exists.
    static LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

    // Invariance under z ↦ 1/z.
    bool is_symmetric() const;

    bool equals(const LaurentPoly& o) const;
    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.equals(y); }
    friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !x.equals(y); }

    std::string text() const;
    std::string latex() const;
    nlohmann::ordered_json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    TermMap coeffs_;
};

} // namespace cherednik
