#include "cherednik/laurent.hpp"

#include <sstream>

namespace cherednik {

int LaurentPoly::min_deg() const {
    if (coeffs_.empty()) throw EmptySupport();
    return coeffs_.begin()->first;
}

int LaurentPoly::max_deg() const {
    if (coeffs_.empty()) throw EmptySupport();
    return coeffs_.rbegin()->first;
}

ParamRat LaurentPoly::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? ParamRat(0) : it->second;
}

void LaurentPoly::add_term(int k, ParamRat c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (const auto& [ka, ca] : x.coeffs_)
        for (const auto& [kb, cb] : y.coeffs_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const ParamRat& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
    return r;
}

LaurentPoly LaurentPoly::substitute(const Substitution& sub) const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) r.add_term(k * sub.direction, c * sub.unit.pow(k));
    return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (f.is_zero()) return LaurentPoly();
    // Long division from the lowest exponent; the quotient support is
    // confined to [min f - min g, max f - max g].
    const int glow = g.min_deg();
    const ParamRat& glc = g.terms().begin()->second;
    const int qmax = f.max_deg() - g.max_deg();
    LaurentPoly quot;
    LaurentPoly rem = f;
    while (!rem.is_zero()) {
        const int k = rem.min_deg() - glow;
        if (k > qmax) throw NonExactDivision();
        const ParamRat cq = rem.terms().begin()->second / glc;
        quot.add_term(k, cq);
        for (const auto& [e, c] : g.terms()) rem.add_term(e + k, -(c * cq));
    }
    return quot;
}

bool LaurentPoly::is_symmetric() const {
    return equals(substitute(Substitution(ParamRat(1), -1)));
}

bool LaurentPoly::equals(const LaurentPoly& o) const {
    // Supports match exactly (no zero coefficients are stored); the
    // coefficients compare by cross-multiplication.
    if (coeffs_.size() != o.coeffs_.size()) return false;
    auto it = coeffs_.begin();
    auto jt = o.coeffs_.begin();
    for (; it != coeffs_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!it->second.equals(jt->second)) return false;
    }
    return true;
}

std::string LaurentPoly::text() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        std::string ct = c.text();
        const bool multi_term = c.den().is_one() && c.num().term_count() > 1;
        if (k == 0) {
            // Splice the constant in sign-aware; a multi-term constant
            // carries its own interior signs.
            if (first)
                os << ct;
            else if (!ct.empty() && ct[0] == '-')
                os << " - " << ct.substr(1);
            else
                os << " + " << ct;
            first = false;
            continue;
        }
        std::string zpart = k == 1 ? "z" : "z^" + std::to_string(k);
        std::string piece;
        if (c.equals(ParamRat(1))) {
            piece = zpart;
        } else if (c.equals(ParamRat(-1))) {
            piece = "-" + zpart;
        } else if (multi_term || !c.den().is_one()) {
            piece = "(" + ct + ")*" + zpart;
        } else {
            piece = ct + "*" + zpart;
        }
        if (first) {
            os << piece;
        } else if (piece[0] == '-') {
            os << " - " << piece.substr(1);
        } else {
            os << " + " << piece;
        }
        first = false;
    }
    return os.str();
}

std::string LaurentPoly::latex() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        std::string ct = c.latex();
        const bool multi_term = c.den().is_one() && c.num().term_count() > 1;
        std::string zpart;
        if (k == 1)
            zpart = "z";
        else if (k != 0)
            zpart = "z^{" + std::to_string(k) + "}";
        std::string piece;
        if (k == 0) {
            piece = ct;
        } else if (c.equals(ParamRat(1))) {
            piece = zpart;
        } else if (c.equals(ParamRat(-1))) {
            piece = "-" + zpart;
        } else if (multi_term) {
            piece = "\\left(" + ct + "\\right) " + zpart;
        } else {
            piece = ct + " " + zpart;
        }
        if (first) {
            os << piece;
        } else if (!piece.empty() && piece[0] == '-') {
            os << " - " << piece.substr(1);
        } else {
            os << " + " << piece;
        }
        first = false;
    }
    return os.str();
}

nlohmann::ordered_json LaurentPoly::to_json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : coeffs_) {
        nlohmann::ordered_json t;
        t["z"] = k;
        t["coeff"] = c.text();
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

} // namespace cherednik
