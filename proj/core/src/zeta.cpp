#include "fp/zeta.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fp {

// Borwein's accelerated alternating series: with n terms the error decays like
// (3+sqrt(8))^-n. d_k are exact integers, so the only rounding is in the final
// floating sum.
Real zeta_odd(int m, const PrecisionContext& ctx) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("zeta_odd: m must be an odd integer >= 3");
    ScopedPrecision sp(ctx.decimal_digits + 10);

    const int n = static_cast<int>(ctx.decimal_digits * 1.35) + 10;

    // d_k = n * sum_{i=0..k} (n+i-1)! 4^i / ((n-i)! (2i)!); the i = 0 term is 1.
    std::vector<Int> d(n + 1);
    Int t = 1;
    Int acc = t;
    d[0] = acc;
    for (int i = 1; i <= n; ++i) {
        // t_i / t_{i-1} = 4 * (n+i-1) * (n-i+1) / ((2i)(2i-1))
        t *= 4 * Int(n + i - 1) * Int(n - i + 1);
        t /= Int(2 * i) * Int(2 * i - 1);
        acc += t;
        d[i] = acc;
    }

    Real sum(0);
    Real sign(1);
    for (int k = 0; k < n; ++k) {
        sum += sign * Real(d[k] - d[n]) / pow(Real(k + 1), m);
        sign = -sign;
    }
    Real factor = Real(-1) / (Real(d[n]) * (1 - pow(Real(2), 1 - m)));
    return factor * sum;
}

Real incomplete_gamma_int(int s, const Real& x, const PrecisionContext& ctx) {
    if (s < 1 || s > 12)
        throw std::invalid_argument("incomplete_gamma_int: s must be in 1..12");
    if (x < 0)
        throw std::invalid_argument("incomplete_gamma_int: x must be >= 0");
    ScopedPrecision sp(ctx.decimal_digits + 10);
    Real ex = exp(-x);
    Real g = ex;  // Gamma(1, x)
    Real xp(1);
    for (int k = 1; k < s; ++k) {
        xp *= x;  // x^k
        g = k * g + xp * ex;
    }
    return g;
}

}  // namespace fp
