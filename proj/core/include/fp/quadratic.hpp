#ifndef FP_QUADRATIC_HPP
#define FP_QUADRATIC_HPP

#include "fp/precision.hpp"

#include <stdexcept>
#include <string>

namespace fp {

// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)); d squarefree
// positive, d = 1 encodes a plain rational (b forced to 0).
struct QuadraticNumber {
    Rational a{0};
    Rational b{0};
    long d = 1;

    QuadraticNumber() = default;
    QuadraticNumber(Rational a_, Rational b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (d < 1) throw std::invalid_argument("QuadraticNumber: d must be positive");
        if (d == 1 && b != 0) {
            // fold sqrt(1) into the rational part
            a += b;
            b = 0;
        }
    }
    QuadraticNumber(Rational a_) : a(std::move(a_)) {}
    QuadraticNumber(int v) : a(v) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
        return {x.a + y.a, x.b + y.b, merged(x, y)};
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
        return {x.a - y.a, x.b - y.b, merged(x, y)};
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x) { return {-x.a, -x.b, x.d}; }
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
        long d = merged(x, y);
        return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
    }
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x * y.inverse();
    }
    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
    }

    QuadraticNumber inverse() const {
        Rational n = a * a - b * b * d;
        if (n == 0) throw std::domain_error("QuadraticNumber: division by zero");
        return {a / n, -b / n, d};
    }
    // Galois conjugate a - b*sqrt(d)
    QuadraticNumber conjugate() const { return {a, -b, d}; }

    Real to_real() const {
        if (b == 0) return fp::to_real(a);
        return fp::to_real(a) + fp::to_real(b) * sqrt(Real(d));
    }

    // "num/den" or "num/den*sqrt(d)" style rendering used in split reports
    std::string str() const {
        auto rat = [](const Rational& q) {
            std::string s = numerator(q).str();
            if (denominator(q) != 1) s += "/" + denominator(q).str();
            return s;
        };
        if (b == 0) return rat(a);
        std::string s;
        if (a != 0) s = rat(a) + (b > 0 ? "+" : "");
        s += rat(b) + "*sqrt(" + std::to_string(d) + ")";
        return s;
    }

  private:
    static long merged(const QuadraticNumber& x, const QuadraticNumber& y) {
        if (x.b != 0 && y.b != 0 && x.d != y.d)
            throw std::invalid_argument("QuadraticNumber: mixed fields");
        return x.b != 0 ? x.d : (y.b != 0 ? y.d : std::max(x.d, y.d));
    }
};

}  // namespace fp

#endif
