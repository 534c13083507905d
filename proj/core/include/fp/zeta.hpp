#ifndef FP_ZETA_HPP
#define FP_ZETA_HPP

#include "fp/precision.hpp"

namespace fp {

// zeta(m) for odd m >= 3, accurate to 10^-decimal_digits.
Real zeta_odd(int m, const PrecisionContext& ctx);

// Upper incomplete gamma Gamma(s, x) for small positive integer s, via the
// finite recurrence Gamma(1,x) = e^-x, Gamma(s+1,x) = s Gamma(s,x) + x^s e^-x.
Real incomplete_gamma_int(int s, const Real& x, const PrecisionContext& ctx);

}  // namespace fp

#endif
