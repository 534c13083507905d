#ifndef FP_DIFFOP_HPP
#define FP_DIFFOP_HPP

#include "fp/precision.hpp"

#include <map>
#include <string>
#include <vector>

namespace fp {

// Order-m linear ODE sum_k p_k(psi) (d/dpsi)^k with integer polynomial
// coefficients, annihilating the components psi^-1 w_j of Omega (or a
// derivative of it). psi = 0 is ordinary for the base equation (p_m(0) = 1)
// and singular for the derivative equations (p_m = psi^j (1 - psi^{n+2})).
struct PsiODE {
    int n = 0;
    int order = 0;
    int deriv_level = 0;                // 0 = Omega, 1 = Omega', 2 = Omega''
    std::vector<std::vector<Int>> p;    // p[k][d] = coefficient of psi^d in p_k

    std::string str() const;
};

// Change of variables phi = psi^-(n+2) applied to the hypergeometric operator
// acting on psi * Omega, cleared to integer coefficients and sign-normalized
// so that p_m = 1 - psi^{n+2}.
PsiODE psi_ode(int n);

// Same-order annihilator of the j-th derivative, obtained by eliminating the
// undifferentiated term through p_0 (a monomial) and differentiating once;
// iterated for j = 2. Leading coefficient psi^j (1 - psi^{n+2}).
PsiODE derivative_ode(const PsiODE& ode, int j);

namespace detail {

// Sparse Laurent polynomial over Q, used only inside the derivations.
using Laurent = std::map<int, Rational>;
// Differential operator sum_k q_k(psi) d^k with Laurent coefficients.
using LaurentOp = std::vector<Laurent>;

LaurentOp compose_delta(const LaurentOp& L);   // (psi d/dpsi) after L
LaurentOp compose_d(const LaurentOp& L);       // d/dpsi after L
LaurentOp right_mul_psi(const LaurentOp& L);   // L applied to psi * f
void add_scaled(LaurentOp& L, const LaurentOp& R, const Rational& c);
PsiODE normalize(LaurentOp L, int n, int deriv_level);

}  // namespace detail

}  // namespace fp

#endif
