#ifndef FP_FROBENIUS_HPP
#define FP_FROBENIUS_HPP

#include "fp/precision.hpp"
#include "fp/series.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fp {

// D_n = theta^{n+1} - phi * prod_{k=1}^{n+1} (theta + k/(n+2)), theta = phi d/dphi
struct PFOperatorTheta {
    int n;
};

// Nilpotent-variable jet: polynomial in eps truncated at eps^{n+1}
// (coefficients of eps^0 .. eps^n), exact rational arithmetic.
using EpsJet = TruncatedSeries<Rational>;

// The n+1 power series h_0..h_n with h_0(0) = 1, h_k(0) = 0 (k >= 1); the
// canonical solutions are
//   w_j(phi) = (2 pi i)^-j sum_{k<=j} C(j,k) h_k(phi) log(lambda phi)^{j-k},
// lambda = (n+2)^-(n+2). The (2 pi i)^-j and log factors are applied at
// evaluation time only; the stored series are exact rationals.
struct CanonicalSeries {
    int n = 0;
    std::size_t M = 0;
    std::vector<TruncatedSeries<Rational>> h;

    Rational lambda() const {
        Int p = pow(Int(n + 2), n + 2);
        return Rational(1, p);
    }
};

// eps-jet recursion: A_0 = 1, A_m = A_{m-1} * prod_k (m-1+eps+k/(n+2)) / (m+eps)^{n+1};
// h_k picks up k! * [eps^k] A_m at phi^m.
CanonicalSeries build_h_series(int n, std::size_t M);

// Smallest M whose geometric tail at the given radius is below 10^-(digits+5).
std::size_t default_truncation(const PrecisionContext& ctx, double radius = 0.9);

// Evaluate w_0..w_n at phi (|phi| <= 0.9 and within the truncation budget),
// with log(lambda phi) = principal log + 2 pi i * log_branch.
std::vector<Complex> eval_canonical(const CanonicalSeries& series, const Complex& phi,
                                    long log_branch, const PrecisionContext& ctx);

// Lower-triangular binomial monodromy matrix (T0)_{jk} = C(j,k) around phi = 0.
std::vector<std::vector<Int>> monodromy_T0(int n);

// Exact text cache: header line "h-series <n> <M>", then (n+1)*M "num/den" lines.
void save_h_series(const CanonicalSeries& s, std::ostream& os);
std::optional<CanonicalSeries> load_h_series(std::istream& is);
CanonicalSeries cached_h_series(int n, std::size_t M, const std::string& cache_dir);

Int binomial(int n, int k);

}  // namespace fp

#endif
