#ifndef FP_RECOGNIZE_HPP
#define FP_RECOGNIZE_HPP

#include "fp/precision.hpp"
#include "fp/quadratic.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fp {

struct InsufficientPrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nonzero integer vector m with |sum m_i x_i| below the detection tolerance.
// confidence_digits counts how far the residual sits below the lattice's
// noise floor; the invariant residual < 10^-confidence_digits always holds.
struct RelationResult {
    std::vector<Int> coefficients;
    Real residual;
    int confidence_digits = 0;
};

// Integer minimal-polynomial guess, coefficients ascending by degree,
// irreducible over the rationals.
struct AlgebraicGuess {
    std::vector<Int> poly;
    int degree = 0;
    Int height;
    Real residual;
};

// Shortest passing vector of the standard relation lattice at scale
// 10^(digits - guard), reduced with delta = 0.99. Ties broken by smallest
// height, then lexicographically; sign fixed so the first nonzero
// coefficient is positive.
std::optional<RelationResult> integer_relation(const std::vector<Real>& xs,
                                               const Int& max_height,
                                               const PrecisionContext& ctx);

// Continued-fraction convergent with denominator <= den_bound and residual
// below tolerance.
std::optional<Rational> recognize_rational(const Real& x, const Int& den_bound,
                                           const PrecisionContext& ctx);

// a + b sqrt(d) via integer_relation on (x, 1, sqrt(d)); d squarefree.
std::optional<QuadraticNumber> recognize_quadratic(const Real& x, long d,
                                                   const Int& height_bound,
                                                   const PrecisionContext& ctx);

// Minimal polynomial of a complex value: joint relation on the real and
// imaginary parts of (1, x, ..., x^deg), lowest degree first, verified by
// residual and irreducibility. max_degree <= 8.
std::optional<AlgebraicGuess> recognize_minpoly(const Complex& x, int max_degree,
                                                const Int& height_bound,
                                                const PrecisionContext& ctx);

namespace detail {

// In-place LLL reduction (exact rational Gram-Schmidt data).
void lll_reduce(std::vector<std::vector<Int>>& basis, double delta = 0.99);

// All complex roots by the Durand-Kerner iteration (degree <= 8 use).
std::vector<Complex> poly_roots(const std::vector<Int>& poly, const PrecisionContext& ctx);

// Irreducibility over Q via subset products of the numeric roots, each
// candidate factor verified by exact integer polynomial division.
bool is_irreducible(const std::vector<Int>& poly, const PrecisionContext& ctx);

}  // namespace detail

}  // namespace fp

#endif
