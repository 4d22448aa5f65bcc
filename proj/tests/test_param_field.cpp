#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdint>

#include "cherednik/param_field.hpp"
#include "cherednik/parse.hpp"

using namespace cherednik;

namespace {

std::uint64_t mix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rat small_rat(std::uint64_t& state) {
    const long num = static_cast<long>(mix(state) % 19) - 9;
    const long den = static_cast<long>(mix(state) % 9) + 1;
    return Rat(num, den);
}

std::array<Rat, 4> nonzero_point(std::uint64_t& state) {
    std::array<Rat, 4> pt;
    for (auto& v : pt) {
        do {
            v = small_rat(state);
        } while (v.is_zero() || v == Rat(1) || v == Rat(-1));
    }
    return pt;
}

// A handful of structurally different field elements to exercise fractions.
std::array<ParamRat, 6> sample_values() {
    const ParamRat s = ParamRat::s(), a = ParamRat::a(), b = ParamRat::b(), c = ParamRat::c();
    const ParamRat q = s * s;
    return {q * a - b,
            (ParamRat(1) + a * b) / (q - ParamRat(1)),
            c.pow(2) - q.inverse(),
            (a + b + c) / (a * b),
            ParamRat(Rat(3, 7)) * s - c,
            (q - a) / (q + a)};
}

} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK((Rat(3) / Rat(-6)) == Rat(-1, 2));
    CHECK(Rat(-4, 6).text() == "-2/3");
    CHECK(Rat(2).pow(-3) == Rat(1, 8));
    CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
    CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rat(0).pow(-1), DivisionByZero);
}

TEST_CASE("param poly basics and exact cancellation") {
    const ParamRat s = ParamRat::s(), a = ParamRat::a(), b = ParamRat::b();
    const ParamRat q = s * s;

    // (s^2 a)/(s a) reduces to s
    CHECK((s * s * a) / (s * a) == s);
    // (q-1)(q+1) = s^4 - 1
    CHECK((q - ParamRat(1)) * (q + ParamRat(1)) == s.pow(4) - ParamRat(1));
    CHECK(((a * b) - (b * a)).is_zero());
    CHECK_FALSE((q - ParamRat(1)).is_zero());
    CHECK(((a + b) * (a + b) - a * a - ParamRat(2) * a * b - b * b).is_zero());
    CHECK_THROWS_AS(a / ParamRat(0), DivisionByZero);
}

TEST_CASE("evaluation") {
    const ParamRat s = ParamRat::s(), a = ParamRat::a(), b = ParamRat::b();
    const ParamRat q = s * s;
    CHECK(q.evaluate({Rat(2), Rat(1), Rat(1), Rat(1)}) == Rat(4));
    CHECK((ParamRat(1) / (a * b)).evaluate({Rat(1), Rat(1, 2), Rat(3), Rat(1)}) == Rat(2, 3));
    CHECK_THROWS_AS((ParamRat(1) / (q - ParamRat(1))).evaluate({Rat(1), Rat(1), Rat(1), Rat(1)}),
                    DenominatorVanishes);
}

TEST_CASE("even powers of s") {
    const ParamRat s = ParamRat::s(), a = ParamRat::a();
    CHECK((s * s * a).even_in_s());
    CHECK_FALSE((s * a).even_in_s());
    CHECK((s.pow(3) / s).even_in_s()); // reduces to s^2
    CHECK((a / s.pow(2)).even_in_s());
    CHECK_FALSE(((s + a) / a).even_in_s()); // mixed parity numerator
}

TEST_CASE("canonical rendering") {
    const ParamRat s = ParamRat::s(), a = ParamRat::a(), b = ParamRat::b(), c = ParamRat::c();
    const ParamRat q = s * s;
    CHECK((q * q * a * b - a - b).text() == "q^2*a*b - a - b");
    CHECK((a * b * c - a - b).text() == "a*b*c - a - b");
    CHECK(s.text() == "s");
    CHECK((s.pow(3) * b).text() == "s^3*b");
    CHECK(ParamRat(Rat(-3, 2)).text() == "-3/2");
    CHECK((ParamRat(1) / (q - ParamRat(1))).text() == "(1)/(q - 1)");
    CHECK(ParamRat(0).text() == "0");
    // rendering round-trips through the expression parser
    for (const auto& v : sample_values()) CHECK(parse_param_rat(v.text()) == v);
}

TEST_CASE("field axioms at random specializations") {
    const auto vals = sample_values();
    std::uint64_t state = 42;
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const auto pt = nonzero_point(state);
        const ParamRat& x = vals[i % vals.size()];
        const ParamRat& y = vals[(i + 1) % vals.size()];
        const ParamRat& z = vals[(i + 2) % vals.size()];
        try {
            const Rat xv = x.evaluate(pt), yv = y.evaluate(pt), zv = z.evaluate(pt);
            CHECK(((x + y) + z).evaluate(pt) == (x + (y + z)).evaluate(pt));
            CHECK((x * (y + z)).evaluate(pt) == xv * yv + xv * zv);
            if (!xv.is_zero()) CHECK((x * x.inverse()).evaluate(pt) == Rat(1));
            // evaluation is a ring homomorphism
            CHECK((x * y).evaluate(pt) == xv * yv);
            CHECK((x + y).evaluate(pt) == xv + yv);
            ++checked;
        } catch (const DenominatorVanishes&) {
            // inadmissible point for this triple; skip
        }
    }
    CHECK(checked >= 80);
}

TEST_CASE("cross-multiplication equality is transitive") {
    std::uint64_t state = 7;
    const auto vals = sample_values();
    for (int i = 0; i < 50; ++i) {
        const ParamRat& x = vals[i % vals.size()];
        // y and z equal x by construction through different representatives
        const ParamRat junk1 = ParamRat::a() + ParamRat(Rat(static_cast<long>(mix(state) % 5) + 1));
        const ParamRat junk2 = ParamRat::s() * ParamRat::c() + ParamRat(1);
        const ParamRat y = (x * junk1) / junk1;
        const ParamRat z = (x * junk2) / junk2;
        CHECK(x == y);
        CHECK(y == z);
        CHECK(x == z);
    }
}

TEST_CASE("substitution of single parameters") {
    const ParamRat a = ParamRat::a(), b = ParamRat::b(), c = ParamRat::c();
    const ParamRat x = a * b * c - a - b;
    CHECK(x.substitute(kVarC, Rat(0)) == -a - b + ParamRat(0) * a);
    CHECK(x.substitute(kVarC, Rat(1)) == a * b - a - b);
    CHECK_THROWS_AS((ParamRat(1) / c).substitute(kVarC, Rat(0)), DenominatorVanishes);
}
