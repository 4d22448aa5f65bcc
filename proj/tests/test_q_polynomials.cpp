#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherednik/parse.hpp"
#include "cherednik/q_polynomials.hpp"

using namespace cherednik;

namespace {

/* Independent oracle: the terminating series expanded term by term from
 * full Pochhammer quotients, with no incremental updates and no
 * cancellation-friendly ordering.  Slower, but a genuinely different
 * arithmetic route than the production builder. */
LaurentPoly oracle_3phi2(const ParamRat& a, const ParamRat& b, const ParamRat& c, const ParamRat& q,
                         int n) {
    LaurentPoly sum;
    for (int k = 0; k <= n; ++k) {
        const ParamRat scalar = qpoch(q.pow(-n), q, k) * q.pow(k) /
                                (qpoch(a * b, q, k) * qpoch(a * c, q, k) * qpoch(q, q, k));
        LaurentPoly zp(1);
        for (int j = 0; j < k; ++j) {
            LaurentPoly up(1), down(1);
            up.add_term(1, -(a * q.pow(j)));
            down.add_term(-1, -(a * q.pow(j)));
            zp = zp * up * down;
        }
        sum += zp.scaled(scalar);
    }
    return sum.scaled(qpoch(a * b, q, n) * qpoch(a * c, q, n) / a.pow(n));
}

LaurentPoly oracle_2phi0(const ParamRat& a, const ParamRat& q, int n) {
    LaurentPoly sum;
    for (int k = 0; k <= n; ++k) {
        ParamRat scalar = qpoch(q.pow(-n), q, k) / qpoch(q, q, k) * q.pow(-k * (k - 1) / 2);
        if (k % 2 == 1) scalar = -scalar;
        LaurentPoly zp(1);
        for (int j = 0; j < k; ++j) {
            LaurentPoly up(1);
            up.add_term(1, -(a * q.pow(j)));
            zp = zp * up;
        }
        sum += (zp * LaurentPoly::monomial(-2 * k, q.pow(n * k))).scaled(scalar);
    }
    return LaurentPoly::z(n) * sum;
}

const Params P;

} // namespace

TEST_CASE("q-Pochhammer symbol") {
    const ParamRat q = P.q(), x = ParamRat::a() * ParamRat::b();
    CHECK(qpoch(x, q, 0) == ParamRat(1));
    CHECK(qpoch(x, q, 2) == (ParamRat(1) - x) * (ParamRat(1) - x * q));
    CHECK(qpoch(q.inverse(), q, 1) * q == q - ParamRat(1));
    CHECK(qpoch(ParamRat(0), q, 5) == ParamRat(1));
}

TEST_CASE("symmetric members of degree one") {
    CHECK(sym_poly({FamilyKind::DualQHahn, P}, 1) ==
          parse_laurent_poly("z + z^-1 + a*b*c - a - b - c"));
    CHECK(sym_poly({FamilyKind::AlSalamChihara, P}, 1) == parse_laurent_poly("z + z^-1 - a - b"));
    CHECK(sym_poly({FamilyKind::BigQHermite, P}, 1) == parse_laurent_poly("z + z^-1 - a"));
    CHECK(sym_poly({FamilyKind::QHermite, P}, 1) == parse_laurent_poly("z + z^-1"));
    CHECK(sym_poly({FamilyKind::BigQHermite, P}, 0) == LaurentPoly(1));
}

TEST_CASE("series builders agree with the direct-expansion oracle") {
    for (int n = 0; n <= 4; ++n) {
        CHECK(sym_poly({FamilyKind::DualQHahn, P}, n) ==
              oracle_3phi2(P.a, P.b, P.c, P.q(), n));
        CHECK(sym_poly({FamilyKind::AlSalamChihara, P}, n) ==
              oracle_3phi2(P.a, P.b, ParamRat(0), P.q(), n));
        CHECK(sym_poly({FamilyKind::BigQHermite, P}, n) == oracle_2phi0(P.a, P.q(), n));
        CHECK(sym_poly({FamilyKind::QHermite, P}, n) == oracle_2phi0(ParamRat(0), P.q(), n));
    }
}

TEST_CASE("symmetric members are symmetric and monic") {
    for (const auto kind : {FamilyKind::DualQHahn, FamilyKind::AlSalamChihara,
                            FamilyKind::BigQHermite, FamilyKind::QHermite}) {
        for (int n = 1; n <= 6; ++n) {
            const LaurentPoly p = sym_poly({kind, P}, n);
            CHECK(p.is_symmetric());
            CHECK(p.coeff(n) == ParamRat(1));
            CHECK(p.max_deg() == n);
        }
    }
}

TEST_CASE("dagger members") {
    const Family dqh{FamilyKind::DualQHahn, P};
    CHECK(dagger_poly(dqh, 1) == parse_laurent_poly("z - c"));
    // (z-c)(z + q z^-1 + q^2 abc - q(a+b+c))
    CHECK(dagger_poly(dqh, 2) ==
          parse_laurent_poly("(z - c)*(z + q*z^-1 + q^2*a*b*c - q*a - q*b - q*c)"));
    CHECK(dagger_poly({FamilyKind::AlSalamChihara, P}, 1) == LaurentPoly::z(1));
    // every coefficient carries only integer powers of q
    for (const auto kind : {FamilyKind::DualQHahn, FamilyKind::AlSalamChihara,
                            FamilyKind::BigQHermite, FamilyKind::QHermite}) {
        for (int n = 1; n <= 6; ++n) CHECK_NOTHROW(dagger_poly({kind, P}, n));
    }
}

TEST_CASE("non-symmetric members") {
    const Family dqh{FamilyKind::DualQHahn, P};
    CHECK(nonsym_poly(dqh, 0) == LaurentPoly(1));
    CHECK(nonsym_poly({FamilyKind::QHermite, P}, 0) == LaurentPoly(1));
    CHECK(nonsym_poly(dqh, -1) == parse_laurent_poly("z^-1 + a*b*c - a - b"));
    CHECK(nonsym_poly(dqh, 1) == parse_laurent_poly("z + q*z^-1 + q*a*b*c - q*a - q*b - c"));
    CHECK(nonsym_poly({FamilyKind::BigQHermite, P}, 1) ==
          parse_laurent_poly("z + q*z^-1 - q*a"));
}

TEST_CASE("extreme terms") {
    const Family dqh{FamilyKind::DualQHahn, P};
    for (int n = 1; n <= 4; ++n) {
        const LeadingData dm = leading_data(dqh, -n);
        CHECK(dm.low_exp == -n);
        CHECK(dm.low_coeff == ParamRat(1));
        CHECK(dm.high_exp == n - 1);
        CHECK(dm.high_coeff == P.a * P.b * P.c * P.q().pow(n - 1) - P.a - P.b);
        const LeadingData dp = leading_data(dqh, n);
        CHECK(dp.low_exp == -n);
        CHECK(dp.low_coeff == P.q().pow(n));
        CHECK(dp.high_exp == n);
        CHECK(dp.high_coeff == ParamRat(1));
    }
    CHECK(leading_data({FamilyKind::BigQHermite, P}, -3).high_coeff == -P.a);
    // the absent slot is reported with a zero coefficient
    const LeadingData qh = leading_data({FamilyKind::QHermite, P}, -2);
    CHECK(qh.high_exp == 1);
    CHECK(qh.high_coeff.is_zero());
    CHECK(leading_data({FamilyKind::DualQHahn, P}, 0).low_coeff == ParamRat(1));
}

TEST_CASE("specialization steps down the family chain") {
    const Family dqh{FamilyKind::DualQHahn, P};
    const Family asc = specialize_family(dqh, false, false, true);
    CHECK(asc.kind == FamilyKind::AlSalamChihara);
    CHECK(sym_poly(asc, 1) == parse_laurent_poly("z + z^-1 - a - b"));
    const Family bqh = specialize_family(asc, false, true, false);
    CHECK(bqh.kind == FamilyKind::BigQHermite);
    CHECK(sym_poly(bqh, 1) == parse_laurent_poly("z + z^-1 - a"));
    const Family qh = specialize_family(bqh, true, false, false);
    CHECK(qh.kind == FamilyKind::QHermite);
    // zeroing a parameter of a family that does not step down just fixes it
    const Family dqh_b0 = specialize_family(dqh, false, true, false);
    CHECK(dqh_b0.kind == FamilyKind::DualQHahn);
    CHECK(dqh_b0.params.b.is_zero());
}

TEST_CASE("triangular basis at small index") {
    // E_{-n} spans z^{-n}..z^{n-1} with unit lowest coefficient; E_n spans
    // z^{-n}..z^n with unit highest coefficient.
    for (const auto kind : {FamilyKind::DualQHahn, FamilyKind::QHermite}) {
        const Family fam{kind, P};
        for (int n = 1; n <= 4; ++n) {
            const LaurentPoly em = nonsym_poly(fam, -n);
            CHECK(em.min_deg() == -n);
            CHECK(em.max_deg() <= n - 1);
            CHECK(em.coeff(-n) == ParamRat(1));
            const LaurentPoly ep = nonsym_poly(fam, n);
            CHECK(ep.min_deg() == -n);
            CHECK(ep.max_deg() == n);
            CHECK(ep.coeff(n) == ParamRat(1));
        }
    }
}
