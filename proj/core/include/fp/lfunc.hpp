#ifndef FP_LFUNC_HPP
#define FP_LFUNC_HPP

#include "fp/precision.hpp"
#include "fp/splitter.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fp {

// Weight-k level-N newform given by its q-expansion; self-dual (real
// coefficient) forms only.
struct ModularForm {
    std::string label;
    int weight = 0;
    long level = 0;
    std::optional<int> eps;    // functional-equation sign when known
    std::vector<Rational> an;  // a_1 first, no gaps
};

struct LValue {
    int s = 0;
    Real value;
    int terms_used = 0;
    int sign_used = 0;
};

// Smallest coefficient count M with e^(-2 pi M / sqrt(N)) < 10^-(digits+5).
int min_coefficient_count(long level, const PrecisionContext& ctx);

// Parse/validate the JSON document {"label","weight","level","eps","an"}.
// Errors: missing fields, non-integer a_n, a_1 != 1, too few coefficients
// for the requested precision, complex coefficients.
ModularForm parse_form(const std::string& json_text, const PrecisionContext& ctx);
ModularForm load_form(const std::string& path, const PrecisionContext& ctx);

// Completed L-function Lambda(s) = N^(s/2) (2 pi)^-s Gamma(s) L(s) from the
// two-sum incomplete-gamma-smoothed approximate functional equation with
// splitting parameter `split` (the identity holds for every split > 0, which
// is the basis of the sign inference and the self-test).
Real lambda_value(const ModularForm& f, int s, int sign, const Real& split, int terms,
                  const PrecisionContext& ctx);

// Functional-equation sign: metadata if present, else two-point consistency
// (L at s = 1, 2 must be stable under shifting the splitting parameter).
int resolve_sign(const ModularForm& f, const PrecisionContext& ctx);

// L(f, s) for integer 1 <= s <= k-1.
LValue l_value(const ModularForm& f, int s, const PrecisionContext& ctx);

// Deligne-conjecture check for the n = 4 first summand against f:
// r_m = tate_twist(summand, m) / L(f, m), normalized to a real number
// (recording whether a division by i was needed), recognized as rationals,
// with the scale-free ratios r_2/r_1 and r_3/r_2 pinned to 132 and -72.
struct DeligneCheck {
    std::array<LValue, 3> l;         // s = 1, 2, 3
    std::array<Complex, 3> twists;   // tate_twist(summand, m)
    std::array<Real, 3> raw;         // real part of twists[m]/L after normalization
    std::array<bool, 3> divided_by_i{};
    std::array<std::optional<Rational>, 3> r;
    std::optional<Rational> ratio21, ratio32;
    bool pass = false;
    std::vector<std::string> diagnostics;
};

DeligneCheck deligne_check(const Summand& summand, const ModularForm& f,
                           const PrecisionContext& ctx);

std::string deligne_check_json(const DeligneCheck& c);

}  // namespace fp

#endif
