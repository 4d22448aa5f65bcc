#include "cherednik/param_field.hpp"

#include <algorithm>
#include <sstream>

namespace cherednik {

ParamPoly ParamPoly::variable(int index, int power) {
    ParamPoly p;
    ExpVec e{0, 0, 0, 0};
    e[static_cast<std::size_t>(index)] = power;
    p.add_term(e, Rat(1));
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExpVec{0, 0, 0, 0};
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpVec{0, 0, 0, 0} &&
           terms_.begin()->second.is_one();
}

void ParamPoly::add_term(const ExpVec& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly r;
    if (x.is_zero() || y.is_zero()) return r;
    // Iterate the smaller factor outside; accumulation handles collisions.
    const ParamPoly& outer = x.term_count() <= y.term_count() ? x : y;
    const ParamPoly& inner = x.term_count() <= y.term_count() ? y : x;
    for (const auto& [ea, ca] : outer.terms_) {
        for (const auto& [eb, cb] : inner.terms_) {
            ExpVec e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

void ParamPoly::scale(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [e, v] : terms_) v *= c;
}

const std::pair<const ExpVec, Rat>& ParamPoly::leading() const {
    return *terms_.rbegin();
}

Rat ParamPoly::content_signed() const {
    if (terms_.empty()) return Rat(1);
    Rat g(0);
    for (const auto& [e, c] : terms_) g = rat_gcd(g, c);
    if (leading().second.sign() < 0) g = -g;
    return g;
}

ExpVec ParamPoly::monomial_gcd() const {
    if (terms_.empty()) return {0, 0, 0, 0};
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < 4; ++i) m[i] = std::min(m[i], e[i]);
        if (m == ExpVec{0, 0, 0, 0}) break;
    }
    return m;
}

ParamPoly ParamPoly::divide_monomial(const ExpVec& e) const {
    if (e == ExpVec{0, 0, 0, 0}) return *this;
    ParamPoly r;
    for (const auto& [f, c] : terms_)
        r.terms_.emplace(ExpVec{f[0] - e[0], f[1] - e[1], f[2] - e[2], f[3] - e[3]}, c);
    return r;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& g) const {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    ParamPoly quot;
    ParamPoly rem = *this;
    const auto& [ge, gc] = g.leading();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading();
        ExpVec d;
        for (std::size_t i = 0; i < 4; ++i) {
            d[i] = re[i] - ge[i];
            if (d[i] < 0) return std::nullopt;
        }
        const Rat cq = rc / gc;
        quot.add_term(d, cq);
        // rem -= (cq * x^d) * g
        for (const auto& [e, c] : g.terms_) {
            ExpVec f{e[0] + d[0], e[1] + d[1], e[2] + d[2], e[3] + d[3]};
            rem.add_term(f, -(c * cq));
        }
    }
    return quot;
}

ParamPoly ParamPoly::substitute(int var, const Rat& value) const {
    ParamPoly r;
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        ExpVec f = e;
        f[v] = 0;
        r.add_term(f, c * value.pow(e[v]));
    }
    return r;
}

Rat ParamPoly::evaluate(const std::array<Rat, 4>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

bool ParamPoly::even_in_s() const {
    for (const auto& [e, c] : terms_)
        if (e[kVarS] % 2 != 0) return false;
    return true;
}

namespace {

void append_monomial(std::ostream& os, const ExpVec& e, bool latex) {
    const char* sep = latex ? " " : "*";
    bool first = true;
    auto emit = [&](const char* name, int pow) {
        if (pow == 0) return;
        if (!first) os << sep;
        first = false;
        os << name;
        if (pow != 1) {
            if (latex)
                os << "^{" << pow << "}";
            else
                os << "^" << pow;
        }
    };
    if (e[kVarS] % 2 == 0)
        emit("q", e[kVarS] / 2);
    else
        emit("s", e[kVarS]);
    emit("a", e[kVarA]);
    emit("b", e[kVarB]);
    emit("c", e[kVarC]);
}

std::string poly_text(const ParamPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded-lex order.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c.sign() < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const Rat mag = c.abs();
        const bool has_vars = e != ExpVec{0, 0, 0, 0};
        if (!has_vars) {
            os << (latex && mag.den() != 1
                       ? "\\frac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}"
                       : mag.text());
            continue;
        }
        if (!mag.is_one()) {
            if (latex && mag.den() != 1)
                os << "\\frac{" << mag.num().get_str() << "}{" << mag.den().get_str() << "} ";
            else
                os << mag.text() << (latex ? " " : "*");
        }
        append_monomial(os, e, latex);
    }
    return os.str();
}

} // namespace

std::string ParamPoly::text() const { return poly_text(*this, false); }
std::string ParamPoly::latex() const { return poly_text(*this, true); }

ParamRat::ParamRat(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("ParamRat with zero denominator");
    normalize();
}

void ParamRat::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    ExpVec mn = num_.monomial_gcd();
    ExpVec md = den_.monomial_gcd();
    ExpVec common;
    for (std::size_t i = 0; i < 4; ++i) common[i] = std::min(mn[i], md[i]);
    if (common != ExpVec{0, 0, 0, 0}) {
        num_ = num_.divide_monomial(common);
        den_ = den_.divide_monomial(common);
    }
    if (!den_.is_constant()) {
        if (auto h = num_.divide_exact(den_)) {
            num_ = std::move(*h);
            den_ = ParamPoly(1);
        } else if (!num_.is_constant()) {
            if (auto k = den_.divide_exact(num_)) {
                num_ = ParamPoly(1);
                den_ = std::move(*k);
            }
        }
    }
    // Scale so the denominator is primitive with positive leading term.
    const Rat c = den_.content_signed();
    if (!c.is_one()) {
        const Rat inv = Rat(1) / c;
        den_.scale(inv);
        num_.scale(inv);
    }
}

bool ParamRat::is_one() const { return num_ == den_; }

ParamRat ParamRat::operator-() const {
    ParamRat r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamRat& ParamRat::operator+=(const ParamRat& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    // Prefer a common denominator when one divides the other.
    if (auto t = den_.divide_exact(o.den_)) {
        num_ += o.num_ * *t;
        normalize();
        return *this;
    }
    if (auto t = o.den_.divide_exact(den_)) {
        num_ = num_ * *t + o.num_;
        den_ = o.den_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ParamRat& ParamRat::operator-=(const ParamRat& o) {
    *this += -o;
    return *this;
}

ParamRat& ParamRat::operator*=(const ParamRat& o) {
    ParamPoly on = o.num_;
    ParamPoly od = o.den_;
    // Cross-cancel before multiplying to keep operands small.
    if (!od.is_constant()) {
        if (auto t = num_.divide_exact(od)) {
            num_ = std::move(*t);
            od = ParamPoly(1);
        }
    }
    if (!den_.is_constant()) {
        if (auto t = on.divide_exact(den_)) {
            on = std::move(*t);
            den_ = ParamPoly(1);
        }
    }
    num_ = num_ * on;
    den_ = den_ * od;
    normalize();
    return *this;
}

ParamRat& ParamRat::operator/=(const ParamRat& o) {
    if (o.is_zero()) throw DivisionByZero("ParamRat division by zero");
    ParamRat inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    inv.normalize();
    *this *= inv;
    return *this;
}

ParamRat ParamRat::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    ParamRat r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

ParamRat ParamRat::pow(int e) const {
    if (e == 0) return ParamRat(1);
    ParamRat base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    ParamRat acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

bool ParamRat::equals(const ParamRat& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
}

Rat ParamRat::evaluate(const std::array<Rat, 4>& point) const {
    const Rat d = den_.evaluate(point);
    if (d.is_zero()) throw DenominatorVanishes();
    return num_.evaluate(point) / d;
}

ParamRat ParamRat::substitute(int var, const Rat& value) const {
    ParamPoly d = den_.substitute(var, value);
    if (d.is_zero()) throw DenominatorVanishes();
    return ParamRat(num_.substitute(var, value), std::move(d));
}

bool ParamRat::even_in_s() const {
    // Strip the common pure-s monomial factor, then check parities.
    int sn = num_.is_zero() ? 0 : num_.monomial_gcd()[kVarS];
    int sd = den_.monomial_gcd()[kVarS];
    const int common = std::min(sn, sd);
    auto parity_ok = [common](const ParamPoly& p) {
        for (const auto& [e, c] : p.terms())
            if ((e[kVarS] - common) % 2 != 0) return false;
        return true;
    };
    return parity_ok(num_) && parity_ok(den_);
}

std::string ParamRat::text() const {
    if (den_.is_one()) return num_.text();
    return "(" + num_.text() + ")/(" + den_.text() + ")";
}

std::string ParamRat::latex() const {
    if (den_.is_one()) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

} // namespace cherednik
