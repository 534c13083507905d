#include "fp/recognize.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>

namespace fp {

namespace {

Int round_to_int(const Real& x) {
    Real r = round(x);
    return r.convert_to<Int>();
}

Int round_rational(const Rational& r) {
    Int n = numerator(r), d = denominator(r);  // d > 0 canonical
    Int q, rem;
    divide_qr(n, d, q, rem);
    if (rem != 0 && 2 * abs(rem) >= d) q += (n < 0 ? -1 : 1);
    return q;
}

Rational dot_int(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return Rational(acc);
}

int decimal_length(const Int& v) { return static_cast<int>(Int(abs(v)).str().size()); }

}  // namespace

namespace detail {

void lll_reduce(std::vector<std::vector<Int>>& b, double delta) {
    const std::size_t n = b.size();
    if (n < 2) return;
    const Rational del(static_cast<long>(delta * 100), 100);

    // exact Gram-Schmidt data; b* only needed for the initialization
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> B(n);
    {
        std::vector<std::vector<Rational>> bs(n);
        for (std::size_t i = 0; i < n; ++i) {
            bs[i].assign(b[i].begin(), b[i].end());
            for (std::size_t j = 0; j < i; ++j) {
                Rational num(0);
                for (std::size_t t = 0; t < b[i].size(); ++t) num += Rational(b[i][t]) * bs[j][t];
                mu[i][j] = num / B[j];
                for (std::size_t t = 0; t < bs[i].size(); ++t) bs[i][t] -= mu[i][j] * bs[j][t];
            }
            Rational nn(0);
            for (const Rational& v : bs[i]) nn += v * v;
            B[i] = nn;
        }
    }

    auto red = [&](std::size_t k, std::size_t l) {
        Rational m = mu[k][l];
        if (2 * abs(numerator(m)) <= denominator(m)) return;
        Int q = round_rational(m);
        for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
        mu[k][l] -= Rational(q);
        for (std::size_t j = 0; j < l; ++j) mu[k][j] -= Rational(q) * mu[l][j];
    };

    std::size_t k = 1;
    while (k < n) {
        red(k, k - 1);
        if (B[k] < (del - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            std::swap(b[k], b[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            Rational m = mu[k][k - 1];
            Rational Bnew = B[k] + m * m * B[k - 1];
            mu[k][k - 1] = m * B[k - 1] / Bnew;
            B[k] = B[k - 1] * B[k] / Bnew;
            B[k - 1] = Bnew;
            for (std::size_t i = k + 1; i < n; ++i) {
                Rational t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = k > 1 ? k - 1 : 1;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
}

}  // namespace detail

namespace {

// Reduce the relation lattice [I | round(S * col_j)] and return the passing
// coefficient vectors' best pick.
std::optional<std::vector<Int>> relation_search(
    const std::vector<std::vector<Real>>& cols, std::size_t len, const Int& max_height,
    const PrecisionContext& ctx,
    const std::function<Real(const std::vector<Int>&)>& residual_of, const Real& tol) {
    Real scale = pow(Real(10), static_cast<int>(ctx.decimal_digits - ctx.guard_digits));
    std::vector<std::vector<Int>> basis(len, std::vector<Int>(len + cols.size(), Int(0)));
    for (std::size_t i = 0; i < len; ++i) {
        basis[i][i] = 1;
        for (std::size_t c = 0; c < cols.size(); ++c)
            basis[i][len + c] = round_to_int(scale * cols[c][i]);
    }
    detail::lll_reduce(basis);

    std::optional<std::vector<Int>> best;
    Int best_height = 0;
    for (const auto& row : basis) {
        std::vector<Int> m(row.begin(), row.begin() + len);
        Int height = 0;
        bool zero = true;
        for (const Int& v : m) {
            if (v != 0) zero = false;
            if (abs(v) > height) height = abs(v);
        }
        if (zero || height > max_height) continue;
        if (residual_of(m) >= tol) continue;
        // sign: first nonzero coefficient positive
        for (const Int& v : m) {
            if (v == 0) continue;
            if (v < 0)
                for (Int& w : m) w = -w;
            break;
        }
        if (!best || height < best_height || (height == best_height && m < *best)) {
            best = m;
            best_height = height;
        }
    }
    return best;
}

}  // namespace

std::optional<RelationResult> integer_relation(const std::vector<Real>& xs,
                                               const Int& max_height,
                                               const PrecisionContext& ctx) {
    if (xs.size() < 2) throw std::invalid_argument("integer_relation: need at least 2 values");
    if (max_height < 1) throw std::invalid_argument("integer_relation: bad height bound");
    const unsigned work = ctx.decimal_digits - ctx.guard_digits;
    if (work < xs.size() * static_cast<unsigned>(decimal_length(max_height)) + 10)
        throw InsufficientPrecisionError("integer_relation: precision too low for height bound");

    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    Real xmax(1);
    for (const Real& x : xs)
        if (abs(x) > xmax) xmax = abs(x);
    Real tol = ctx.tolerance() * xmax * static_cast<int>(xs.size());

    auto residual_of = [&](const std::vector<Int>& m) {
        Real acc(0);
        for (std::size_t i = 0; i < xs.size(); ++i) acc += Real(m[i]) * xs[i];
        return abs(acc);
    };
    auto best = relation_search({xs}, xs.size(), max_height, ctx, residual_of, tol);
    if (!best) return std::nullopt;

    RelationResult res;
    res.coefficients = *best;
    {
        // re-verification pass at 20 extra digits
        ScopedPrecision reguard(ctx.decimal_digits + ctx.guard_digits + 20);
        res.residual = residual_of(*best);
    }
    Int height = 0;
    for (const Int& v : *best)
        if (abs(v) > height) height = abs(v);
    Real floor_f = Real(height) * xmax * static_cast<int>(xs.size());
    if (floor_f < 1) floor_f = 1;
    if (res.residual == 0)
        res.confidence_digits = static_cast<int>(work);
    else
        res.confidence_digits = static_cast<int>(floor(-log10(res.residual * floor_f)).convert_to<long>());
    return res;
}

std::optional<Rational> recognize_rational(const Real& x, const Int& den_bound,
                                           const PrecisionContext& ctx) {
    if (den_bound < 1) throw std::invalid_argument("recognize_rational: bad denominator bound");
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    Real tol = ctx.tolerance();
    if (abs(x) > 1) tol *= abs(x);

    Int p0 = 1, q0 = 0;  // p_{-1}, q_{-1}
    Int p1, q1 = 1;      // p_0 = floor(x)
    Real y = x;
    p1 = round_to_int(floor(y));
    y -= Real(p1);
    for (int it = 0; it < 500 && q1 <= den_bound; ++it) {
        Real approx = Real(p1) / Real(q1);
        if (abs(x - approx) < tol) return Rational(p1, q1);
        if (y < ctx.tolerance()) break;
        y = 1 / y;
        Int a = round_to_int(floor(y));
        y -= Real(a);
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

std::optional<QuadraticNumber> recognize_quadratic(const Real& x, long d,
                                                   const Int& height_bound,
                                                   const PrecisionContext& ctx) {
    if (d < 1) throw std::invalid_argument("recognize_quadratic: d must be positive");
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) throw std::invalid_argument("recognize_quadratic: d not squarefree");

    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    std::vector<Real> xs{x, Real(1)};
    if (d > 1) xs.push_back(sqrt(Real(d)));
    auto rel = integer_relation(xs, height_bound, ctx);
    if (!rel || rel->coefficients[0] == 0) return std::nullopt;
    const auto& m = rel->coefficients;
    Rational a(-m[1], m[0]);
    Rational b = d > 1 ? Rational(-m[2], m[0]) : Rational(0);
    return QuadraticNumber(a, b, d);
}

namespace detail {

std::vector<Complex> poly_roots(const std::vector<Int>& poly, const PrecisionContext& ctx) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1 || poly[deg] == 0) throw std::invalid_argument("poly_roots: bad polynomial");
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    std::vector<Complex> c(deg + 1);
    for (int i = 0; i <= deg; ++i) c[i] = Complex(Real(poly[i]) / Real(poly[deg]));

    std::vector<Complex> r(deg);
    Complex seed(Real(4) / 10, Real(9) / 10), acc(1);
    for (int i = 0; i < deg; ++i) {
        acc *= seed;
        r[i] = acc;
    }
    Real eps = pow(Real(10), -static_cast<int>(ctx.decimal_digits));
    for (int it = 0; it < 2000; ++it) {
        Real worst(0);
        for (int i = 0; i < deg; ++i) {
            Complex num(0);
            for (int k = deg; k >= 0; --k) num = num * r[i] + c[k];
            Complex den(1);
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= r[i] - r[j];
            Complex step = num / den;
            r[i] -= step;
            if (abs(step) > worst) worst = abs(step);
        }
        if (worst < eps) break;
    }
    return r;
}

namespace {

// remainder-zero test for integer polynomials over Q
bool divides_poly(const std::vector<Int>& p, const std::vector<Int>& g) {
    std::vector<Rational> r(p.begin(), p.end());
    const int dg = static_cast<int>(g.size()) - 1;
    Rational lead(g[dg]);
    for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] / lead;
        for (int j = 0; j <= dg; ++j) r[i - dg + j] -= f * Rational(g[j]);
    }
    for (int j = 0; j < dg; ++j)
        if (r[j] != 0) return false;
    return true;
}

bool is_squarefree(const std::vector<Int>& p) {
    // gcd(p, p') over Q by the Euclidean algorithm
    std::vector<Rational> a(p.begin(), p.end()), b;
    for (std::size_t i = 1; i < p.size(); ++i) b.push_back(Rational(p[i]) * static_cast<long>(i));
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
            if (a[i] == 0) continue;
            Rational f = a[i] / b.back();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[i - (b.size() - 1) + j] -= f * b[j];
        }
        trim(a);
        std::swap(a, b);
    }
    return a.size() <= 1;  // constant gcd
}

}  // namespace

bool is_irreducible(const std::vector<Int>& poly, const PrecisionContext& ctx) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    if (!is_squarefree(poly)) return false;

    auto roots = poly_roots(poly, ctx);
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    for (int s = 1; s <= deg / 2; ++s) {
        for (unsigned mask = 1; mask < (1u << deg); ++mask) {
            if (__builtin_popcount(mask) != s) continue;
            // g = lead * prod_{i in mask} (x - r_i)
            std::vector<Complex> g{Complex(Real(poly[deg]))};
            for (int i = 0; i < deg; ++i) {
                if (!(mask & (1u << i))) continue;
                g.push_back(g.back());
                for (int j = static_cast<int>(g.size()) - 2; j >= 1; --j)
                    g[j] = g[j - 1] - g[j] * roots[i];
                g[0] = -(g[0] * roots[i]);
            }
            std::vector<Int> G(g.size());
            bool integral = true;
            for (std::size_t j = 0; j < g.size() && integral; ++j) {
                Int nearest = round_to_int(g[j].re);
                Real m = abs(g[j].re);
                if (m < 1) m = 1;
                if (abs(g[j].re - Real(nearest)) > m / 1000000 || abs(g[j].im) > m / 1000000)
                    integral = false;
                G[j] = nearest;
            }
            if (!integral || G.back() == 0) continue;
            if (divides_poly(poly, G)) return false;
        }
    }
    return true;
}

}  // namespace detail

std::optional<AlgebraicGuess> recognize_minpoly(const Complex& x, int max_degree,
                                                const Int& height_bound,
                                                const PrecisionContext& ctx) {
    if (max_degree < 1 || max_degree > 8)
        throw std::invalid_argument("recognize_minpoly: max_degree must be 1..8");
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    std::vector<Complex> pw{Complex(1)};
    for (int i = 1; i <= max_degree; ++i) pw.push_back(pw.back() * x);

    for (int deg = 1; deg <= max_degree; ++deg) {
        const std::size_t len = deg + 1;
        Real pmax(1);
        for (std::size_t i = 0; i < len; ++i)
            if (abs(pw[i]) > pmax) pmax = abs(pw[i]);
        Real tol = ctx.tolerance() * pmax * static_cast<int>(len);

        std::vector<Real> re(len), im(len);
        for (std::size_t i = 0; i < len; ++i) {
            re[i] = pw[i].re;
            im[i] = pw[i].im;
        }
        auto residual_of = [&](const std::vector<Int>& m) {
            Complex acc(0);
            for (std::size_t i = 0; i < len; ++i) acc += pw[i] * Real(m[i]);
            return abs(acc);
        };
        auto best = relation_search({re, im}, len, height_bound, ctx, residual_of, tol);
        if (!best) continue;

        std::vector<Int> p = *best;
        while (!p.empty() && p.back() == 0) p.pop_back();
        if (p.size() < 2) continue;
        Int content = 0;
        for (const Int& v : p) content = gcd(content, v);
        for (Int& v : p) v /= content;
        if (p.back() < 0)
            for (Int& v : p) v = -v;
        if (!detail::is_irreducible(p, ctx)) continue;

        AlgebraicGuess g;
        g.poly = p;
        g.degree = static_cast<int>(p.size()) - 1;
        g.height = 0;
        for (const Int& v : p)
            if (abs(v) > g.height) g.height = abs(v);
        {
            ScopedPrecision reguard(ctx.decimal_digits + ctx.guard_digits + 20);
            Complex acc(0);
            for (std::size_t i = 0; i < p.size(); ++i) acc += pw[i] * Real(p[i]);
            g.residual = abs(acc);
        }
        return g;
    }
    return std::nullopt;
}

}  // namespace fp
