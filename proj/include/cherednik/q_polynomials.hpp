#pragma once

#include <optional>
#include <string>

#include "cherednik/hecke_reps.hpp"
#include "cherednik/laurent.hpp"

namespace cherednik {

/* The four symmetric/non-symmetric polynomial families, one per algebra:
 * continuous dual q-Hahn (a,b,c), Al-Salam–Chihara (a,b), continuous big
 * q-Hermite (a) and continuous q-Hermite (no parameters).  Each family is
 * built from its terminating basic hypergeometric series, expanded exactly
 * term by term. */
enum class FamilyKind { DualQHahn, AlSalamChihara, BigQHermite, QHermite };

const char* family_name(FamilyKind k); // "dual-q-hahn", ...
std::optional<FamilyKind> family_from_name(const std::string& s);

struct Family {
    FamilyKind kind = FamilyKind::DualQHahn;
    Params params;
};

// The family whose non-symmetric members diagonalize each algebra's Y/Z (or
// carry its T0/T1 ladder).
Family family_for(AlgebraId alg, const Params& params = Params{});

// (x; q)_n = prod_{k=0}^{n-1} (1 - x q^k); empty product for n = 0.
ParamRat qpoch(const ParamRat& x, const ParamRat& q, int n);

// The monic symmetric polynomial of degree n (coefficient of z^n is 1,
// invariant under z -> 1/z).
LaurentPoly sym_poly(const Family& f, int n);

// q^{(n-1)/2} (z-c) p_{n-1}(q^{-1/2}z; q^{1/2}a, q^{1/2}b, q^{1/2}c) and its
// degenerations (the (z-c) factor becomes z once c is gone).  Computed in
// s = q^{1/2}; every coefficient must come out even in s, otherwise
// HalfPowerResidue is raised.
LaurentPoly dagger_poly(const Family& f, int n); // n >= 1

// E_0 = 1, E_{-n} = p_n - dagger_n, E_n = q^n p_n + (1-q^n) dagger_n.
// idx < 0 addresses E_{-|idx|}.
LaurentPoly nonsym_poly(const Family& f, int idx);

/* Extreme coefficients of E_idx, reported at the family-shape slots
 * z^{-n}..z^{n-1} (E_{-n}) and z^{-n}..z^{n} (E_n).  The slot coefficient
 * may be zero when the term is absent (continuous q-Hermite E_{-n} has no
 * z^{n-1} term). */
struct LeadingData {
    int low_exp = 0;
    ParamRat low_coeff;
    int high_exp = 0;
    ParamRat high_coeff;
};

LeadingData leading_data(const Family& f, int idx);

// The closed-form extremes: E_n = z^n + ... + q^n z^{-n} for every family;
// E_{-n} = z^{-n} + ... + C z^{n-1} with C = abc q^{n-1} - a - b and its
// degenerations (-a-b, -a, 0).
LeadingData expected_leading(const Family& f, int idx);

// Substitute a subset of {a, b, c} by zero; along the chain c, b, a this
// steps the family kind down (dual q-Hahn -> Al-Salam–Chihara -> big
// q-Hermite -> q-Hermite).
Family specialize_family(Family f, bool zero_a, bool zero_b, bool zero_c);

} // namespace cherednik
