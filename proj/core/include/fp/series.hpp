#ifndef FP_SERIES_HPP
#define FP_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fp {

// Dense truncated power series: coefficients 0..M-1, ring operations truncate
// at order M. T is any commutative ring type (Rational, Real, Complex).
template <typename T>
struct TruncatedSeries {
    std::vector<T> coeffs;

    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t M) : coeffs(M, T(0)) {}
    TruncatedSeries(std::vector<T> c) : coeffs(std::move(c)) {}

    std::size_t order() const { return coeffs.size(); }
    const T& operator[](std::size_t i) const { return coeffs[i]; }
    T& operator[](std::size_t i) { return coeffs[i]; }

    static TruncatedSeries one(std::size_t M) {
        TruncatedSeries s(M);
        s.coeffs[0] = T(1);
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) r.coeffs[i] = a.coeffs[i] - b.coeffs[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) {
            if (a.coeffs[i] == T(0)) continue;
            for (std::size_t j = 0; i + j < b.order(); ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const T& s) {
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) r.coeffs[i] = a.coeffs[i] * s;
        return r;
    }
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    // Multiplicative inverse; requires an invertible constant term.
    TruncatedSeries inverse() const {
        if (coeffs.empty() || coeffs[0] == T(0))
            throw std::domain_error("TruncatedSeries::inverse: constant term is zero");
        TruncatedSeries r(order());
        T c0inv = T(1) / coeffs[0];
        r.coeffs[0] = c0inv;
        for (std::size_t i = 1; i < order(); ++i) {
            T acc(0);
            for (std::size_t j = 1; j <= i; ++j) acc += coeffs[j] * r.coeffs[i - j];
            r.coeffs[i] = -acc * c0inv;
        }
        return r;
    }

  private:
    static void check(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
    }
};

}  // namespace fp

#endif
