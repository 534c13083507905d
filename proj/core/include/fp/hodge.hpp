#ifndef FP_HODGE_HPP
#define FP_HODGE_HPP

#include "fp/precision.hpp"
#include "fp/transport.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace fp {

// Polynomial in the variables z_p = zeta(p) / (2 pi i)^p for odd p in
// {3, 5, 7, 9}, rational coefficients. Keeping the zeta factors symbolic lets
// the cup-matrix sandwich cancel them exactly.
struct ZetaPoly {
    using Monomial = std::array<int, 4>;  // exponents of z_3, z_5, z_7, z_9
    std::map<Monomial, Rational> terms;

    static ZetaPoly constant(const Rational& c);
    static ZetaPoly variable(int p);
    static int slot(int p);  // 3,5,7,9 -> 0..3

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    friend ZetaPoly operator+(const ZetaPoly& a, const ZetaPoly& b);
    friend ZetaPoly operator-(const ZetaPoly& a, const ZetaPoly& b);
    friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
    friend ZetaPoly operator*(const ZetaPoly& a, const Rational& c);

    Complex eval(const PrecisionContext& ctx) const;
};

// tau_{n,p} = coeff[p] * zeta(p) / (2 pi i)^p; only the constants defined for
// that n are present (n = 3 uses an explicit matrix instead).
struct TauConstants {
    int n = 0;
    std::map<int, Rational> coeff;
};
TauConstants tau_constants(int n);

// Integral period matrix P = l * (2 pi i)^n * S with S kept symbolically; for
// n >= 4, S is the unit-lower-triangular P_zeta with
// (P_zeta)_{i,j} = C(i,j) (P_zeta)_{i-j,0} and first column generated by
// (P_zeta)_{i,0} = i! [z^i] exp(sum_p tau_{n,p} z^p).
struct PeriodMatrix {
    int n = 0;
    Rational l{1};
    std::vector<std::vector<ZetaPoly>> symbolic;  // the matrix S
    std::vector<std::vector<Complex>> entries;    // numeric, full scale l (2 pi i)^n S
};
PeriodMatrix period_matrix(int n, const Rational& l, const PrecisionContext& ctx);

// Cup-product matrix. For basis 'g' (integral basis) the entries are the
// stored integers directly. For basis 'a' the stored rationals are the
// zeta-cancelled sandwich S^-T G S^-1, i.e. the literal P^-T G P^-1 times
// l^2 (2 pi i)^{2n}; pairing() consumes them at this normalization.
struct CupMatrix {
    int n = 0;
    char basis = 'a';
    bool exact = true;
    std::vector<std::vector<Rational>> m;        // valid when exact
    std::vector<std::vector<Complex>> numeric;   // fallback when !exact
};
CupMatrix cup_matrix_gamma(int n);                              // n >= 4
CupMatrix cup_matrix_alpha(int n, const PeriodMatrix& P,
                           const PrecisionContext& ctx);

// rho^T M v at the normalization described on CupMatrix.
Complex pairing(const std::vector<Complex>& rho, const CupMatrix& cup,
                const std::vector<Complex>& v);

// Pi^(k)(0)_i = sum_j P_ij * jets[j][k]; requires jet derivative order > k.
std::vector<Complex> rational_periods(int n, const JetPoint& jets,
                                      const PeriodMatrix& P, int k);

// t at the expansion point: jets(1,0) / jets(0,0).
Complex mirror_map_value(int n, const JetPoint& jets);

// Pi^(0..2)(0) plus the mirror-map value, bundled for the splitting search.
struct PeriodVectors {
    int n = 0;
    std::array<std::vector<Complex>, 3> Pi;
    Complex t0;
};
PeriodVectors period_vectors(int n, const JetPoint& jets, const PeriodMatrix& P);

// F_infinity in the alpha basis; known exactly for n = 3 and n = 4 only.
std::optional<std::vector<std::vector<Rational>>> finfty_matrix(int n);

}  // namespace fp

#endif
