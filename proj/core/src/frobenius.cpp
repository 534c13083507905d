#include "fp/frobenius.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fp {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

namespace {

// (c + eps)^e as an eps-jet of the given length
EpsJet linear_power(const Rational& c, int e, std::size_t len) {
    EpsJet base(len);
    base[0] = c;
    if (len > 1) base[1] = 1;
    EpsJet acc = EpsJet::one(len);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

}  // namespace

CanonicalSeries build_h_series(int n, std::size_t M) {
    if (n < 1) throw std::invalid_argument("build_h_series: n must be >= 1");
    if (M < 2) throw std::invalid_argument("build_h_series: M must be >= 2");
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    const Rational inv_n2(1, n + 2);

    CanonicalSeries out;
    out.n = n;
    out.M = M;
    out.h.assign(len, TruncatedSeries<Rational>(M));

    EpsJet A = EpsJet::one(len);  // A_0
    Rational kfact = 1;
    for (std::size_t k = 0; k < len; ++k) out.h[k][0] = A[k];  // h_0(0)=1, rest 0

    for (std::size_t m = 1; m < M; ++m) {
        EpsJet numer = EpsJet::one(len);
        for (int k = 1; k <= n + 1; ++k)
            numer *= linear_power(Rational(static_cast<long>(m) - 1) + Rational(k) * inv_n2, 1, len);
        A *= numer;
        A *= linear_power(Rational(static_cast<long>(m)), n + 1, len).inverse();
        kfact = 1;
        for (std::size_t k = 0; k < len; ++k) {
            if (k > 0) kfact *= Rational(static_cast<long>(k));
            out.h[k][m] = kfact * A[k];
        }
    }
    return out;
}

std::size_t default_truncation(const PrecisionContext& ctx, double radius) {
    if (radius <= 0 || radius >= 1)
        throw std::invalid_argument("default_truncation: radius must lie in (0,1)");
    double need = (ctx.decimal_digits + 5) * std::log(10.0) / -std::log(radius);
    return static_cast<std::size_t>(need) + 2;
}

std::vector<Complex> eval_canonical(const CanonicalSeries& series, const Complex& phi,
                                    long log_branch, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx.decimal_digits + 10);
    const int n = series.n;
    const std::size_t len = static_cast<std::size_t>(n) + 1;

    Real aphi = abs(phi);
    if (aphi == 0) throw std::domain_error("eval_canonical: phi = 0 (log undefined)");
    if (aphi > Real("0.9")) throw std::domain_error("eval_canonical: |phi| exceeds 0.9");
    // geometric tail check with a generous coefficient-growth fudge
    Real tail = pow(aphi, static_cast<unsigned>(series.M)) * 100000;
    if (tail > ctx.tolerance())
        throw std::runtime_error("eval_canonical: truncation insufficient for this |phi|");

    // Horner evaluation of each h_k
    std::vector<Complex> H(len);
    for (std::size_t k = 0; k < len; ++k) {
        Complex acc(0);
        for (std::size_t m = series.M; m-- > 0;) acc = acc * phi + Complex(to_real(series.h[k][m]));
        H[k] = acc;
    }

    Complex L = log(Complex(to_real(series.lambda())) * phi) +
                Complex(Real(0), 2 * static_cast<long>(log_branch) * pi_value());
    Complex inv_2pii = Complex(1) / two_pi_i();

    std::vector<Complex> w(len);
    for (std::size_t j = 0; j < len; ++j) {
        Complex acc(0);
        for (std::size_t k = 0; k <= j; ++k)
            acc += Complex(to_real(Rational(binomial(static_cast<int>(j), static_cast<int>(k))))) *
                   H[k] * pow_int(L, static_cast<long>(j - k));
        w[j] = pow_int(inv_2pii, static_cast<long>(j)) * acc;
    }
    return w;
}

std::vector<std::vector<Int>> monodromy_T0(int n) {
    if (n < 1) throw std::invalid_argument("monodromy_T0: n must be >= 1");
    std::vector<std::vector<Int>> T(n + 1, std::vector<Int>(n + 1, 0));
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= j; ++k) T[j][k] = binomial(j, k);
    return T;
}

void save_h_series(const CanonicalSeries& s, std::ostream& os) {
    os << "h-series " << s.n << " " << s.M << "\n";
    for (const auto& hk : s.h)
        for (std::size_t m = 0; m < s.M; ++m)
            os << numerator(hk[m]) << "/" << denominator(hk[m]) << "\n";
}

std::optional<CanonicalSeries> load_h_series(std::istream& is) {
    std::string tag;
    int n;
    std::size_t M;
    if (!(is >> tag >> n >> M) || tag != "h-series") return std::nullopt;
    CanonicalSeries s;
    s.n = n;
    s.M = M;
    s.h.assign(static_cast<std::size_t>(n) + 1, TruncatedSeries<Rational>(M));
    for (auto& hk : s.h)
        for (std::size_t m = 0; m < M; ++m) {
            std::string token;
            if (!(is >> token)) return std::nullopt;
            auto slash = token.find('/');
            if (slash == std::string::npos) return std::nullopt;
            hk[m] = Rational(Int(token.substr(0, slash)), Int(token.substr(slash + 1)));
        }
    return s;
}

CanonicalSeries cached_h_series(int n, std::size_t M, const std::string& cache_dir) {
    if (cache_dir.empty()) return build_h_series(n, M);
    namespace fs = std::filesystem;
    fs::create_directories(cache_dir);
    fs::path file = fs::path(cache_dir) /
                    ("hseries_n" + std::to_string(n) + "_M" + std::to_string(M) + ".txt");
    if (fs::exists(file)) {
        std::ifstream in(file);
        if (auto s = load_h_series(in); s && s->n == n && s->M == M) return *s;
    }
    CanonicalSeries s = build_h_series(n, M);
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        save_h_series(s, out);
    }
    fs::rename(tmp, file);
    return s;
}

}  // namespace fp
