#ifndef FP_PRECISION_HPP
#define FP_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace fp {

// Runtime-precision real; et_off so every operation materializes at the
// current default precision (see ScopedPrecision).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct PrecisionContext {
    unsigned decimal_digits = 120;
    unsigned guard_digits = 15;

    PrecisionContext() = default;
    PrecisionContext(unsigned digits, unsigned guard = 15)
        : decimal_digits(digits), guard_digits(guard) {
        if (digits < 30)
            throw std::invalid_argument("PrecisionContext: decimal_digits must be >= 30");
        if (guard == 0 || guard >= digits)
            throw std::invalid_argument("PrecisionContext: bad guard_digits");
    }

    // "numerically zero" threshold: 10^-(decimal_digits - guard_digits)
    Real tolerance() const {
        return pow(Real(10), -static_cast<int>(decimal_digits - guard_digits));
    }
};

// Default decimal precision per n, sized so lattice recognition has headroom
// over the observed coefficient heights.
inline unsigned default_digits_for(int n) {
    switch (n) {
        case 3: return 120;
        case 4: return 150;
        case 6: return 250;
        case 8: return 400;
        case 10: return 500;
        default: return 120;
    }
}

// Sets the global working precision for the lifetime of the guard object.
class ScopedPrecision {
  public:
    explicit ScopedPrecision(unsigned decimal_digits)
        : saved_(Real::default_precision()) {
        Real::default_precision(decimal_digits);
    }
    explicit ScopedPrecision(const PrecisionContext& ctx)
        : ScopedPrecision(ctx.decimal_digits) {}
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  private:
    unsigned saved_;
};

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}
    Complex(const Rational& q) : re(q), im(0) {}

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
    friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
    Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline Real pi_value() {
    Real r(0);
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}
// Principal branch: Im(log z) in (-pi, pi]. atan2 would map a negative-zero
// imaginary part to -pi; normalize so the cut itself lands on +pi.
inline Complex log(const Complex& z) {
    if (z.im == 0) return {log(abs(z)), z.re < 0 ? pi_value() : Real(0)};
    return {log(abs(z)), atan2(z.im, z.re)};
}
inline Complex sqrt(const Complex& z) {
    Real r = abs(z);
    if (r == 0) return {Real(0), Real(0)};
    Real s = sqrt((r + z.re) / 2);
    if (s == 0) return {Real(0), sqrt(r)};
    return {s, z.im / (2 * s)};
}
inline Complex pow_int(const Complex& z, long e) {
    if (e < 0) return Complex(1) / pow_int(z, -e);
    Complex acc(1), base = z;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Complex two_pi_i() { return {Real(0), 2 * pi_value()}; }

inline Real to_real(const Rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

inline bool numerically_zero(const Real& x, const PrecisionContext& ctx) {
    return abs(x) < ctx.tolerance();
}
inline bool numerically_zero(const Complex& z, const PrecisionContext& ctx) {
    return abs(z) < ctx.tolerance();
}

// Fixed-point decimal rendering used by the report/cache formats.
std::string decimal_string(const Real& x, unsigned digits);
std::string decimal_string(const Complex& z, unsigned digits);
Real parse_real(const std::string& s);

}  // namespace fp

#endif
