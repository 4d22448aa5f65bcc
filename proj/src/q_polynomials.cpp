#include "cherednik/q_polynomials.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace cherednik {

const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::DualQHahn: return "dual-q-hahn";
        case FamilyKind::AlSalamChihara: return "al-salam-chihara";
        case FamilyKind::BigQHermite: return "big-q-hermite";
        case FamilyKind::QHermite: return "q-hermite";
    }
    return "?";
}

std::optional<FamilyKind> family_from_name(const std::string& s) {
    if (s == "dual-q-hahn") return FamilyKind::DualQHahn;
    if (s == "al-salam-chihara") return FamilyKind::AlSalamChihara;
    if (s == "big-q-hermite") return FamilyKind::BigQHermite;
    if (s == "q-hermite") return FamilyKind::QHermite;
    return std::nullopt;
}

Family family_for(AlgebraId alg, const Params& params) {
    switch (alg) {
        case AlgebraId::V: return {FamilyKind::DualQHahn, params};
        case AlgebraId::III: return {FamilyKind::AlSalamChihara, params};
        case AlgebraId::III_D7: return {FamilyKind::BigQHermite, params};
        case AlgebraId::III_D8: return {FamilyKind::QHermite, params};
    }
    return {FamilyKind::DualQHahn, params};
}

ParamRat qpoch(const ParamRat& x, const ParamRat& q, int n) {
    ParamRat r(1);
    ParamRat xq = x;
    for (int k = 0; k < n; ++k) {
        r *= ParamRat(1) - xq;
        xq *= q;
    }
    return r;
}

namespace {

/* Memoization of constructed family members, keyed by the family, the kind
 * of object and the canonical text of the parameters.  Guarded by a mutex
 * so concurrent readers are safe; entries are immutable once stored. */
enum class CacheTag { Sym, Dagger, NonSym };

using CacheKey = std::tuple<FamilyKind, CacheTag, int, std::string>;

std::map<CacheKey, LaurentPoly>& poly_cache() {
    static std::map<CacheKey, LaurentPoly> cache;
    return cache;
}

std::mutex& poly_cache_mutex() {
    static std::mutex m;
    return m;
}

std::string params_fingerprint(const Params& p) {
    return p.s.text() + "|" + p.a.text() + "|" + p.b.text() + "|" + p.c.text();
}

template <class Build>
LaurentPoly cached(const Family& f, CacheTag tag, int idx, Build build) {
    const CacheKey key{f.kind, tag, idx, params_fingerprint(f.params)};
    {
        std::lock_guard<std::mutex> lock(poly_cache_mutex());
        auto it = poly_cache().find(key);
        if (it != poly_cache().end()) return it->second;
    }
    LaurentPoly value = build();
    std::lock_guard<std::mutex> lock(poly_cache_mutex());
    return poly_cache().emplace(key, std::move(value)).first->second;
}

// Effective series parameters: the Al-Salam–Chihara 3phi2 has third
// denominator parameter 0 (so (0;q)_k = 1), the q-Hermite 2phi0 has a = 0.
ParamRat eff_a(const Family& f) {
    return f.kind == FamilyKind::QHermite ? ParamRat(0) : f.params.a;
}
ParamRat eff_b(const Family& f) { return f.params.b; }
ParamRat eff_c(const Family& f) {
    return f.kind == FamilyKind::DualQHahn ? f.params.c : ParamRat(0);
}

/* Monic continuous dual q-Hahn polynomial and its c = 0 instance
 * (Al-Salam–Chihara):
 *   p_n = (ab, ac; q)_n / a^n · 3phi2(q^{-n}, az, a/z; ab, ac; q, q).
 * The sum is expanded with incremental updates of the scalar coefficient
 * and of the z-Pochhammer product (az;q)_k (a/z;q)_k. */
LaurentPoly phi32_poly(const ParamRat& a, const ParamRat& b, const ParamRat& c, const ParamRat& q,
                       int n) {
    LaurentPoly sum;
    // Running coefficient (ab, ac; q)_n / a^n · (q^{-n}; q)_k q^k /
    // ((ab, ac, q; q)_k), updated incrementally.  Starting from the full
    // prefactor keeps each division step exact, so the running value is
    // always a polynomial over a parameter monomial.
    ParamRat scalar = qpoch(a * b, q, n) * qpoch(a * c, q, n) / a.pow(n);
    LaurentPoly zpoch(1);
    for (int k = 0;; ++k) {
        sum += zpoch.scaled(scalar);
        if (k == n) break;
        const ParamRat qk = q.pow(k);
        scalar *= (ParamRat(1) - q.pow(k - n)) * q;
        scalar /= ParamRat(1) - a * b * qk;
        scalar /= ParamRat(1) - a * c * qk;
        scalar /= ParamRat(1) - q.pow(k + 1);
        LaurentPoly up(1), down(1);
        up.add_term(1, -(a * qk));    // 1 - a q^k z
        down.add_term(-1, -(a * qk)); // 1 - a q^k / z
        zpoch = zpoch * up * down;
    }
    return sum;
}

/* Continuous big q-Hermite polynomial (a = 0 gives continuous q-Hermite):
 *   H_n = z^n · 2phi0(q^{-n}, az; -; q, q^n z^{-2}),
 * where the 2phi0 terms carry the extra (-1)^k q^{-k(k-1)/2} factor and the
 * argument q^n z^{-2} is part of each term. */
LaurentPoly phi20_poly(const ParamRat& a, const ParamRat& q, int n) {
    LaurentPoly sum;
    ParamRat scalar(1);
    LaurentPoly zpoch(1);
    for (int k = 0;; ++k) {
        // term_k = scalar_k · (az;q)_k · (q^n z^{-2})^k, with
        // scalar_k = (q^{-n};q)_k / (q;q)_k · (-1)^k q^{-k(k-1)/2}
        sum += LaurentPoly::monomial(-2 * k, q.pow(n * k)) * zpoch.scaled(scalar);
        if (k == n) break;
        scalar *= -(ParamRat(1) - q.pow(k - n));
        scalar /= ParamRat(1) - q.pow(k + 1);
        scalar /= q.pow(k);
        LaurentPoly up(1);
        up.add_term(1, -(a * q.pow(k)));
        zpoch = zpoch * up;
    }
    return LaurentPoly::z(n) * sum;
}

} // namespace

LaurentPoly sym_poly(const Family& f, int n) {
    return cached(f, CacheTag::Sym, n, [&]() {
        const ParamRat q = f.params.q();
        switch (f.kind) {
            case FamilyKind::DualQHahn:
            case FamilyKind::AlSalamChihara:
                return phi32_poly(eff_a(f), eff_b(f), eff_c(f), q, n);
            case FamilyKind::BigQHermite:
            case FamilyKind::QHermite:
                return phi20_poly(eff_a(f), q, n);
        }
        return LaurentPoly();
    });
}

LaurentPoly dagger_poly(const Family& f, int n) {
    return cached(f, CacheTag::Dagger, n, [&]() {
        const ParamRat& s = f.params.s;
        // Shift every family parameter by q^{1/2} = s and the argument by
        // q^{-1/2}; the leading factor is (z-c) for dual q-Hahn, z below it.
        Family shifted = f;
        shifted.params.a = s * f.params.a;
        shifted.params.b = s * f.params.b;
        shifted.params.c = s * f.params.c;
        LaurentPoly p = sym_poly(shifted, n - 1);
        p = p.substitute(Substitution(s.inverse(), +1)); // z -> z/s
        LaurentPoly factor = LaurentPoly::z(1);
        if (f.kind == FamilyKind::DualQHahn) factor.add_term(0, -f.params.c);
        LaurentPoly result = (factor * p).scaled(s.pow(n - 1));
        for (const auto& [k, coeff] : result.terms()) {
            if (!coeff.even_in_s())
                throw HalfPowerResidue("odd power of q^{1/2} in coefficient of z^" +
                                       std::to_string(k) + " of dagger polynomial n=" +
                                       std::to_string(n) + " (" + family_name(f.kind) + ")");
        }
        return result;
    });
}

LaurentPoly nonsym_poly(const Family& f, int idx) {
    if (idx == 0) return LaurentPoly(1);
    return cached(f, CacheTag::NonSym, idx, [&]() {
        const int n = idx < 0 ? -idx : idx;
        LaurentPoly p = sym_poly(f, n);
        LaurentPoly d = dagger_poly(f, n);
        if (idx < 0) return p - d;
        const ParamRat qn = f.params.q().pow(n);
        return p.scaled(qn) + d.scaled(ParamRat(1) - qn);
    });
}

LeadingData leading_data(const Family& f, int idx) {
    if (idx == 0) return {0, ParamRat(1), 0, ParamRat(1)};
    const int n = idx < 0 ? -idx : idx;
    const LaurentPoly e = nonsym_poly(f, idx);
    LeadingData d;
    d.low_exp = -n;
    d.low_coeff = e.coeff(-n);
    d.high_exp = idx < 0 ? n - 1 : n;
    d.high_coeff = e.coeff(d.high_exp);
    return d;
}

LeadingData expected_leading(const Family& f, int idx) {
    if (idx == 0) return {0, ParamRat(1), 0, ParamRat(1)};
    const int n = idx < 0 ? -idx : idx;
    LeadingData d;
    if (idx > 0) {
        d = {-n, f.params.q().pow(n), n, ParamRat(1)};
        return d;
    }
    d.low_exp = -n;
    d.low_coeff = ParamRat(1);
    d.high_exp = n - 1;
    switch (f.kind) {
        case FamilyKind::DualQHahn:
            d.high_coeff = f.params.a * f.params.b * f.params.c * f.params.q().pow(n - 1) -
                           f.params.a - f.params.b;
            break;
        case FamilyKind::AlSalamChihara:
            d.high_coeff = -(f.params.a + f.params.b);
            break;
        case FamilyKind::BigQHermite:
            d.high_coeff = -f.params.a;
            break;
        case FamilyKind::QHermite:
            d.high_coeff = ParamRat(0);
            break;
    }
    return d;
}

Family specialize_family(Family f, bool zero_a, bool zero_b, bool zero_c) {
    if (zero_c) {
        if (f.kind == FamilyKind::DualQHahn)
            f.kind = FamilyKind::AlSalamChihara;
        f.params.c = ParamRat(0);
    }
    if (zero_b) {
        if (f.kind == FamilyKind::AlSalamChihara)
            f.kind = FamilyKind::BigQHermite;
        f.params.b = ParamRat(0);
    }
    if (zero_a) {
        if (f.kind == FamilyKind::BigQHermite)
            f.kind = FamilyKind::QHermite;
        f.params.a = ParamRat(0);
    }
    return f;
}

} // namespace cherednik
