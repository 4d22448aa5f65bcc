#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cherednik/errors.hpp"

namespace cherednik {

/* Arbitrary-precision rational number, always stored canonically
 * (gcd(|num|, den) = 1, den > 0).  Thin value wrapper around GMP. */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat x, const Rat& y) { x += y; return x; }
    friend Rat operator-(Rat x, const Rat& y) { x -= y; return x; }
    friend Rat operator*(Rat x, const Rat& y) { x *= y; return x; }
    friend Rat operator/(Rat x, const Rat& y) { x /= y; return x; }

    friend bool operator==(const Rat& x, const Rat& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rat& x, const Rat& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rat& x, const Rat& y) { return x.v_ < y.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    // x^e for any integer e; inverting zero raises DivisionByZero.
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        if (is_zero()) {
            if (e < 0) throw DivisionByZero("0 raised to a negative power");
            return Rat(0);
        }
        mpq_class base = v_;
        if (e < 0) {
            base = 1 / base;
            e = -e;
        }
        mpq_class r;
        mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rat(std::move(r));
    }

    std::string text() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

// gcd over Q: gcd of numerators / lcm of denominators, non-negative.
inline Rat rat_gcd(const Rat& x, const Rat& y) {
    if (x.is_zero()) return y.abs();
    if (y.is_zero()) return x.abs();
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), x.num().get_mpz_t(), y.num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
    mpq_class r(gn, ld);
    r.canonicalize();
    return Rat(r);
}

} // namespace cherednik
