#include "fp/hodge.hpp"

#include "fp/frobenius.hpp"
#include "fp/zeta.hpp"

#include <stdexcept>

namespace fp {

int ZetaPoly::slot(int p) {
    switch (p) {
        case 3: return 0;
        case 5: return 1;
        case 7: return 2;
        case 9: return 3;
    }
    throw std::invalid_argument("ZetaPoly: p must be odd in 3..9");
}

ZetaPoly ZetaPoly::constant(const Rational& c) {
    ZetaPoly r;
    if (c != 0) r.terms[{0, 0, 0, 0}] = c;
    return r;
}

ZetaPoly ZetaPoly::variable(int p) {
    ZetaPoly r;
    Monomial m{0, 0, 0, 0};
    m[slot(p)] = 1;
    r.terms[m] = 1;
    return r;
}

bool ZetaPoly::is_constant() const {
    return terms.empty() ||
           (terms.size() == 1 && terms.begin()->first == Monomial{0, 0, 0, 0});
}

Rational ZetaPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("ZetaPoly: not constant");
    return terms.empty() ? Rational(0) : terms.begin()->second;
}

ZetaPoly operator+(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly r = a;
    for (const auto& [m, c] : b.terms) {
        Rational& t = r.terms[m];
        t += c;
        if (t == 0) r.terms.erase(m);
    }
    return r;
}

ZetaPoly operator-(const ZetaPoly& a, const ZetaPoly& b) {
    return a + b * Rational(-1);
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            ZetaPoly::Monomial m;
            for (int i = 0; i < 4; ++i) m[i] = ma[i] + mb[i];
            Rational& t = r.terms[m];
            t += ca * cb;
            if (t == 0) r.terms.erase(m);
        }
    return r;
}

ZetaPoly operator*(const ZetaPoly& a, const Rational& c) {
    ZetaPoly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : a.terms) r.terms[m] = cc * c;
    return r;
}

Complex ZetaPoly::eval(const PrecisionContext& ctx) const {
    static const int ps[4] = {3, 5, 7, 9};
    Complex acc(0);
    for (const auto& [m, c] : terms) {
        Real mag = to_real(c);
        int ipow = 0;
        for (int i = 0; i < 4; ++i) {
            for (int e = 0; e < m[i]; ++e) mag *= zeta_odd(ps[i], ctx);
            ipow += ps[i] * m[i];
        }
        acc += Complex(mag) / pow_int(two_pi_i(), ipow);
    }
    return acc;
}

TauConstants tau_constants(int n) {
    TauConstants t;
    t.n = n;
    switch (n) {
        case 3:
            break;  // explicit matrix, no tau form
        case 4:
            t.coeff[3] = -70;
            break;
        case 6:
            t.coeff[3] = -168;
            t.coeff[5] = -6552;
            break;
        case 8:
            t.coeff[3] = -330;
            t.coeff[5] = -19998;
            t.coeff[7] = -1428570;
            break;
        case 10:
            t.coeff[3] = -572;
            t.coeff[5] = -49764;
            t.coeff[7] = -5118828;
            t.coeff[9] = Rational(-1719926780, 3);
            break;
        default:
            throw std::invalid_argument("tau_constants: n must be in {3,4,6,8,10}");
    }
    return t;
}

namespace {

// coefficients E_0..E_top of exp(B) for B = sum_p tau_p z^p, via E' = B' E
std::vector<ZetaPoly> exp_column(const TauConstants& tau, int top) {
    std::vector<ZetaPoly> B(top + 1);
    for (const auto& [p, c] : tau.coeff)
        if (p <= top) B[p] = ZetaPoly::variable(p) * c;
    std::vector<ZetaPoly> E(top + 1);
    E[0] = ZetaPoly::constant(1);
    for (int k = 1; k <= top; ++k) {
        ZetaPoly s;
        for (int j = 1; j <= k; ++j)
            if (!B[j].is_zero()) s = s + B[j] * E[k - j] * Rational(j);
        E[k] = s * Rational(1, k);
    }
    return E;
}

std::vector<std::vector<ZetaPoly>> symbolic_matrix(int n) {
    std::vector<std::vector<ZetaPoly>> S(n + 1,
                                         std::vector<ZetaPoly>(n + 1));
    if (n == 3) {
        auto q = [](long num, long den) { return ZetaPoly::constant(Rational(num, den)); };
        S[0][0] = ZetaPoly::variable(3) * Rational(-200);
        S[0][1] = q(25, 12);
        S[0][3] = q(5, 6);
        S[1][0] = q(25, 12);
        S[1][1] = q(-11, 2);
        S[1][2] = q(-5, 2);
        S[2][0] = q(1, 1);
        S[3][1] = q(1, 1);
        return S;
    }
    auto col = exp_column(tau_constants(n), n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) {
            // (P_zeta)_{i,j} = C(i,j) * (i-j)! * [z^{i-j}] exp(...)
            Rational f = Rational(binomial(i, j));
            Rational fact(1);
            for (int v = 2; v <= i - j; ++v) fact *= v;
            S[i][j] = col[i - j] * (f * fact);
        }
    return S;
}

}  // namespace

PeriodMatrix period_matrix(int n, const Rational& l, const PrecisionContext& ctx) {
    if (n != 3 && n != 4 && n != 6 && n != 8 && n != 10)
        throw std::invalid_argument("period_matrix: n must be in {3,4,6,8,10}");
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    PeriodMatrix P;
    P.n = n;
    P.l = l;
    P.symbolic = symbolic_matrix(n);
    Complex scale = pow_int(two_pi_i(), n) * to_real(l);
    P.entries.assign(n + 1, std::vector<Complex>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            P.entries[i][j] = scale * P.symbolic[i][j].eval(ctx);
    return P;
}

CupMatrix cup_matrix_gamma(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("cup_matrix_gamma: even n >= 4 only");
    CupMatrix G;
    G.n = n;
    G.basis = 'g';
    G.m.assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (int i = 0; i <= n; ++i)
        G.m[i][n - i] = Rational((i % 2 ? -1 : 1) * binomial(n, i));
    return G;
}

CupMatrix cup_matrix_alpha(int n, const PeriodMatrix& P, const PrecisionContext& ctx) {
    CupMatrix M;
    M.n = n;
    M.basis = 'a';
    if (n == 3) {
        M.m = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
        return M;
    }
    // X = S^-1 by forward substitution (S unit lower triangular), then
    // R = X^T G X; the zeta monomials cancel entry by entry.
    const auto& S = P.symbolic;
    std::vector<std::vector<ZetaPoly>> X(n + 1, std::vector<ZetaPoly>(n + 1));
    for (int j = 0; j <= n; ++j) {
        X[j][j] = ZetaPoly::constant(1);
        for (int i = j + 1; i <= n; ++i) {
            ZetaPoly s;
            for (int k = j; k < i; ++k) s = s + S[i][k] * X[k][j];
            X[i][j] = ZetaPoly::constant(0) - s;
        }
    }
    CupMatrix G = cup_matrix_gamma(n);
    std::vector<std::vector<ZetaPoly>> R(n + 1, std::vector<ZetaPoly>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            ZetaPoly s;
            for (int a = 0; a <= n; ++a) {
                if (X[a][i].is_zero()) continue;
                for (int b = 0; b <= n; ++b) {
                    if (G.m[a][b] == 0 || X[b][j].is_zero()) continue;
                    s = s + X[a][i] * X[b][j] * G.m[a][b];
                }
            }
            R[i][j] = s;
        }
    bool all_constant = true;
    for (int i = 0; i <= n && all_constant; ++i)
        for (int j = 0; j <= n && all_constant; ++j)
            if (!R[i][j].is_constant()) all_constant = false;
    if (all_constant) {
        M.m.assign(n + 1, std::vector<Rational>(n + 1));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) M.m[i][j] = R[i][j].constant_value();
    } else {
        M.exact = false;
        ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
        M.numeric.assign(n + 1, std::vector<Complex>(n + 1));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) M.numeric[i][j] = R[i][j].eval(ctx);
    }
    return M;
}

Complex pairing(const std::vector<Complex>& rho, const CupMatrix& cup,
                const std::vector<Complex>& v) {
    const std::size_t dim = rho.size();
    if (v.size() != dim || (cup.exact ? cup.m.size() : cup.numeric.size()) != dim)
        throw std::invalid_argument("pairing: dimension mismatch");
    Complex acc(0);
    for (std::size_t i = 0; i < dim; ++i) {
        Complex row(0);
        for (std::size_t j = 0; j < dim; ++j) {
            if (cup.exact) {
                if (cup.m[i][j] == 0) continue;
                row += v[j] * to_real(cup.m[i][j]);
            } else {
                row += cup.numeric[i][j] * v[j];
            }
        }
        acc += rho[i] * row;
    }
    return acc;
}

std::vector<Complex> rational_periods(int n, const JetPoint& jets,
                                      const PeriodMatrix& P, int k) {
    if (k < 0) throw std::invalid_argument("rational_periods: k must be nonnegative");
    if (jets.jets.size() != static_cast<std::size_t>(n + 1) ||
        jets.jets[0].size() <= static_cast<std::size_t>(k))
        throw std::invalid_argument("rational_periods: jet shape too small");
    std::vector<Complex> v(n + 1);
    for (int i = 0; i <= n; ++i) {
        Complex acc(0);
        for (int j = 0; j <= n; ++j) acc += P.entries[i][j] * jets.jets[j][k];
        v[i] = acc;
    }
    return v;
}

Complex mirror_map_value(int n, const JetPoint& jets) {
    if (jets.jets.size() < 2) throw std::invalid_argument("mirror_map_value: need rows 0 and 1");
    const Complex& den = jets.jets[0][0];
    if (abs(den) == 0) throw std::domain_error("mirror_map_value: vanishing denominator");
    (void)n;
    return jets.jets[1][0] / den;
}

PeriodVectors period_vectors(int n, const JetPoint& jets, const PeriodMatrix& P) {
    PeriodVectors pv;
    pv.n = n;
    for (int k = 0; k < 3; ++k) pv.Pi[k] = rational_periods(n, jets, P, k);
    pv.t0 = mirror_map_value(n, jets);
    return pv;
}

std::optional<std::vector<std::vector<Rational>>> finfty_matrix(int n) {
    if (n == 3)
        return std::vector<std::vector<Rational>>{
            {1, 1, -5, 8}, {0, -1, 8, -16}, {0, 0, -1, 0}, {0, 0, -1, 1}};
    if (n == 4)
        return std::vector<std::vector<Rational>>{
            {Rational(75, 64), 0, Rational(-15, 8), 0, Rational(-1, 4)},
            {0, -1, 0, 0, 0},
            {Rational(55, 256), 0, Rational(-43, 32), 0, Rational(-5, 16)},
            {0, 0, 0, -1, 0},
            {Rational(-121, 1024), 0, Rational(165, 128), 0, Rational(75, 64)}};
    return std::nullopt;
}

}  // namespace fp
