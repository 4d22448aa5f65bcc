#pragma once

#include <string>

#include "cherednik/laurent.hpp"
#include "cherednik/ncexpr.hpp"

namespace cherednik {

/* Text input accepted by the CLI (and by LaurentPoly::from_json for the
 * coefficient strings).  Raises SyntaxError on malformed input.
 *
 * Scalars/polynomials:  signed sums of products of integers, q, s, a, b, c
 * and z, with ^ (integer exponents, negative allowed on monomials) and /
 * (z-free divisors), e.g. "q*z^-1 + c" or "(q^2*a*b - a - b)/(q - 1)".
 *
 * Words: the same expression grammar over the tokens
 * X Xi T0 T1 T1i Y Z and scalar coefficients, e.g.
 * "q*T0*Xi + c - X*T0 - X". */

ParamRat parse_param_rat(const std::string& text);
LaurentPoly parse_laurent_poly(const std::string& text);
NCExpression parse_nc_expression(const std::string& text);

} // namespace cherednik
