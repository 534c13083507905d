#include "fp/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace fp {

namespace detail {

namespace {

void add_term(Laurent& q, int e, const Rational& c) {
    if (c == 0) return;
    auto it = q.find(e);
    if (it == q.end()) {
        q.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) q.erase(it);
    }
}

Laurent derivative(const Laurent& q) {
    Laurent r;
    for (const auto& [e, c] : q)
        if (e != 0) add_term(r, e - 1, c * e);
    return r;
}

Laurent shift(const Laurent& q, int by) {
    Laurent r;
    for (const auto& [e, c] : q) r.emplace(e + by, c);
    return r;
}

}  // namespace

LaurentOp compose_delta(const LaurentOp& L) {
    // delta (q d^k) = psi q' d^k + psi q d^{k+1}
    LaurentOp r(L.size() + 1);
    for (std::size_t k = 0; k < L.size(); ++k) {
        for (const auto& [e, c] : shift(derivative(L[k]), 1)) add_term(r[k], e, c);
        for (const auto& [e, c] : shift(L[k], 1)) add_term(r[k + 1], e, c);
    }
    return r;
}

LaurentOp compose_d(const LaurentOp& L) {
    // d/dpsi (q d^k) = q' d^k + q d^{k+1}
    LaurentOp r(L.size() + 1);
    for (std::size_t k = 0; k < L.size(); ++k) {
        for (const auto& [e, c] : derivative(L[k])) add_term(r[k], e, c);
        for (const auto& [e, c] : L[k]) add_term(r[k + 1], e, c);
    }
    return r;
}

LaurentOp right_mul_psi(const LaurentOp& L) {
    // (q d^k)(psi f) = q psi d^k f + q k d^{k-1} f
    LaurentOp r(L.size());
    for (std::size_t k = 0; k < L.size(); ++k) {
        for (const auto& [e, c] : shift(L[k], 1)) add_term(r[k], e, c);
        if (k >= 1)
            for (const auto& [e, c] : L[k]) add_term(r[k - 1], e, c * static_cast<long>(k));
    }
    return r;
}

void add_scaled(LaurentOp& L, const LaurentOp& R, const Rational& c) {
    if (L.size() < R.size()) L.resize(R.size());
    for (std::size_t k = 0; k < R.size(); ++k)
        for (const auto& [e, coef] : R[k]) add_term(L[k], e, coef * c);
}

PsiODE normalize(LaurentOp L, int n, int deriv_level) {
    while (!L.empty() && L.back().empty()) L.pop_back();
    if (L.empty()) throw std::logic_error("normalize: zero operator");

    int min_e = 0;
    for (const auto& q : L)
        for (const auto& [e, c] : q) min_e = std::min(min_e, e);
    // clear denominators and find content
    Int lcm_den = 1, gcd_num = 0;
    for (const auto& q : L)
        for (const auto& [e, c] : q) lcm_den = lcm(lcm_den, denominator(c));
    for (const auto& q : L)
        for (const auto& [e, c] : q) gcd_num = gcd(gcd_num, numerator(c) * (lcm_den / denominator(c)));
    // sign: lowest-degree coefficient of the leading polynomial becomes positive
    const auto& lead = L.back();
    Rational lead_low = lead.begin()->second;
    Rational scale = Rational(lcm_den, gcd_num);
    if (lead_low * scale < 0) scale = -scale;

    PsiODE ode;
    ode.n = n;
    ode.order = static_cast<int>(L.size()) - 1;
    ode.deriv_level = deriv_level;
    ode.p.assign(L.size(), {});
    for (std::size_t k = 0; k < L.size(); ++k) {
        int maxdeg = -1;
        for (const auto& [e, c] : L[k]) maxdeg = std::max(maxdeg, e - min_e);
        ode.p[k].assign(maxdeg + 1, Int(0));
        for (const auto& [e, c] : L[k]) {
            Rational v = c * scale;
            if (denominator(v) != 1) throw std::logic_error("normalize: non-integer after clearing");
            ode.p[k][e - min_e] = numerator(v);
        }
    }
    return ode;
}

}  // namespace detail

PsiODE psi_ode(int n) {
    using namespace detail;
    if (n < 1) throw std::invalid_argument("psi_ode: n must be >= 1");

    // theta_phi = -(1/(n+2)) delta with delta = psi d/dpsi; D_n applied to
    // psi*Omega and multiplied by (-(n+2))^{n+1} becomes
    //   [delta^{n+1} - psi^-(n+2) (delta-1)(delta-2)...(delta-(n+1))] (psi Omega).
    LaurentOp identity(1);
    identity[0].emplace(0, Rational(1));

    LaurentOp A = identity;
    for (int i = 0; i <= n; ++i) A = compose_delta(A);

    LaurentOp B = identity;
    for (int k = 1; k <= n + 1; ++k) {
        LaurentOp dB = compose_delta(B);
        add_scaled(dB, B, Rational(-k));
        B = dB;
    }
    // left-multiply B by psi^-(n+2)
    for (auto& q : B) q = detail::shift(q, -(n + 2));

    LaurentOp T = A;
    add_scaled(T, B, Rational(-1));

    return normalize(right_mul_psi(T), n, 0);
}

PsiODE derivative_ode(const PsiODE& ode, int j) {
    using namespace detail;
    if (j != 1 && j != 2) throw std::invalid_argument("derivative_ode: j must be 1 or 2");
    if (j == 2) return derivative_ode(derivative_ode(ode, 1), 1);

    // p_0 must be a nonzero monomial c psi^a
    int a = -1;
    Int c;
    for (std::size_t d = 0; d < ode.p[0].size(); ++d) {
        if (ode.p[0][d] == 0) continue;
        if (a >= 0) throw std::invalid_argument("derivative_ode: p_0 is not a monomial");
        a = static_cast<int>(d);
        c = ode.p[0][d];
    }
    if (a < 0) throw std::invalid_argument("derivative_ode: p_0 vanishes");

    // Omega = -(1/p_0) sum_{k>=1} p_k d^{k-1} u; differentiate once: (d o M - 1) u = 0
    LaurentOp M(ode.p.size() - 1);
    for (std::size_t k = 1; k < ode.p.size(); ++k)
        for (std::size_t d = 0; d < ode.p[k].size(); ++d)
            if (ode.p[k][d] != 0)
                M[k - 1][static_cast<int>(d) - a] += Rational(-ode.p[k][d], c);
    for (auto& q : M)
        for (auto it = q.begin(); it != q.end();)
            it = (it->second == 0) ? q.erase(it) : std::next(it);

    LaurentOp L = compose_d(M);
    LaurentOp identity(1);
    identity[0].emplace(0, Rational(1));
    add_scaled(L, identity, Rational(-1));

    return normalize(L, ode.n, ode.deriv_level + 1);
}

std::string PsiODE::str() const {
    std::ostringstream os;
    for (int k = order; k >= 0; --k) {
        os << "p" << k << " =";
        bool first = true;
        for (std::size_t d = 0; d < p[k].size(); ++d) {
            if (p[k][d] == 0) continue;
            os << (first ? " " : " + ") << p[k][d] << "*psi^" << d;
            first = false;
        }
        if (first) os << " 0";
        os << "\n";
    }
    return os.str();
}

}  // namespace fp
