#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

// Error conditions are reported as exceptions; each one names the broken
// precondition or invariant rather than the call site.

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what_arg = "division by zero")
        : std::runtime_error(what_arg) {}
};

struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what_arg = "denominator vanishes at evaluation point")
        : std::runtime_error(what_arg) {}
};

// Raised by exact Laurent division when no exact quotient exists.  When an
// operator application raises it, the formal expression failed to preserve
// the Laurent polynomial ring (see OperatorNotPolynomial).
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what_arg = "non-exact Laurent division")
        : std::runtime_error(what_arg) {}
};

struct EmptySupport : std::runtime_error {
    explicit EmptySupport(const std::string& what_arg = "degree accessor on the zero polynomial")
        : std::runtime_error(what_arg) {}
};

// A coefficient that should have only integer q-powers came out with an odd
// power of s = q^{1/2}.
struct HalfPowerResidue : std::runtime_error {
    explicit HalfPowerResidue(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

struct OperatorNotPolynomial : std::runtime_error {
    explicit OperatorNotPolynomial(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

// T1 has no inverse when its quadratic relation is T1(T1+1) = 0.
struct T1InverseUnavailable : std::runtime_error {
    explicit T1InverseUnavailable(const std::string& what_arg = "T1 is not invertible in this algebra")
        : std::runtime_error(what_arg) {}
};

struct UnknownToken : std::runtime_error {
    explicit UnknownToken(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

struct InvalidConfig : std::runtime_error {
    explicit InvalidConfig(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

struct SyntaxError : std::runtime_error {
    explicit SyntaxError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

} // namespace cherednik
