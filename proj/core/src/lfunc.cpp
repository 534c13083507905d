#include "fp/lfunc.hpp"

#include "fp/zeta.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fp {

int min_coefficient_count(long level, const PrecisionContext& ctx) {
    if (level < 1) throw std::invalid_argument("min_coefficient_count: level must be positive");
    ScopedPrecision guard(30);
    Real need = (Real(ctx.decimal_digits) + 5) * log(Real(10)) * sqrt(Real(level)) /
                (2 * pi_value());
    return static_cast<int>(need) + 1;
}

ModularForm parse_form(const std::string& json_text, const PrecisionContext& ctx) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("load_form: invalid JSON: ") + e.what());
    }
    for (const char* field : {"label", "weight", "level", "an"})
        if (!j.contains(field))
            throw std::runtime_error(std::string("load_form: missing field '") + field + "'");
    if (!j["label"].is_string() || !j["weight"].is_number_integer() ||
        !j["level"].is_number_integer() || !j["an"].is_array())
        throw std::runtime_error("load_form: field has wrong type");

    ModularForm f;
    f.label = j["label"].get<std::string>();
    f.weight = j["weight"].get<int>();
    f.level = j["level"].get<long>();
    if (f.weight < 2) throw std::runtime_error("load_form: weight must be >= 2");
    if (f.level < 1) throw std::runtime_error("load_form: level must be >= 1");
    if (j.contains("eps") && !j["eps"].is_null()) {
        if (!j["eps"].is_number_integer())
            throw std::runtime_error("load_form: eps must be an integer or null");
        int e = j["eps"].get<int>();
        if (e != 1 && e != -1) throw std::runtime_error("load_form: eps must be +1 or -1");
        f.eps = e;
    }

    f.an.reserve(j["an"].size());
    for (const auto& v : j["an"]) {
        if (v.is_number_integer()) {
            f.an.emplace_back(Int(v.get<long long>()));
        } else if (v.is_string()) {
            // exact rational "p/q" (or "p")
            try {
                f.an.emplace_back(Rational(v.get<std::string>()));
            } catch (const std::exception&) {
                throw std::runtime_error("load_form: unparseable rational coefficient");
            }
        } else if (v.is_array() || v.is_object()) {
            throw std::runtime_error(
                "load_form: complex coefficients unsupported (self-dual forms only)");
        } else {
            throw std::runtime_error("load_form: non-integer a_n");
        }
    }
    if (f.an.empty() || f.an[0] != 1)
        throw std::runtime_error("load_form: a_1 must equal 1");

    const int need = min_coefficient_count(f.level, ctx);
    if (static_cast<int>(f.an.size()) < need) {
        std::ostringstream msg;
        msg << "load_form: too few coefficients: have " << f.an.size() << ", need " << need
            << " for " << ctx.decimal_digits << " digits at level " << f.level;
        throw std::runtime_error(msg.str());
    }
    return f;
}

ModularForm load_form(const std::string& path, const PrecisionContext& ctx) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_form: cannot open coefficient file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_form(buf.str(), ctx);
}

Real lambda_value(const ModularForm& f, int s, int sign, const Real& split, int terms,
                  const PrecisionContext& ctx) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("lambda_value: sign must be +1 or -1");
    if (s < 1 || s >= f.weight)
        throw std::invalid_argument("lambda_value: s must be in 1..k-1");
    if (terms < 1 || terms > static_cast<int>(f.an.size()))
        throw std::invalid_argument("lambda_value: term count out of range");
    if (!(split > 0)) throw std::invalid_argument("lambda_value: split must be positive");

    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    const int k = f.weight;
    const Real sqN = sqrt(Real(f.level));
    const Real twopi = 2 * pi_value();
    Real sum1(0), sum2(0);
    for (int n = 1; n <= terms; ++n) {
        const Rational& a = f.an[n - 1];
        if (a == 0) continue;
        Real av = to_real(a);
        Real x1 = twopi * n * split / sqN;
        Real x2 = twopi * n / (split * sqN);
        sum1 += av * pow(sqN / (twopi * n), s) * incomplete_gamma_int(s, x1, ctx);
        sum2 += av * pow(sqN / (twopi * n), k - s) * incomplete_gamma_int(k - s, x2, ctx);
    }
    return sign > 0 ? sum1 + sum2 : sum1 - sum2;
}

namespace {

Real l_from_lambda(const ModularForm& f, int s, const Real& lambda) {
    // L(s) = Lambda(s) (2 pi)^s / (N^(s/2) Gamma(s)); Gamma(s) = (s-1)!
    Real fact(1);
    for (int v = 2; v < s; ++v) fact *= v;
    return lambda * pow(2 * pi_value() / sqrt(Real(f.level)), s) / fact;
}

}  // namespace

int resolve_sign(const ModularForm& f, const PrecisionContext& ctx) {
    if (f.eps) return *f.eps;
    // Two-point consistency: for the correct sign, Lambda(s) is independent of
    // the AFE splitting parameter. Probe at s = 1, 2 with splits 1 and 5/4.
    PrecisionContext probe(std::min<unsigned>(ctx.decimal_digits, 40u));
    const int base = min_coefficient_count(f.level, probe);
    const int shifted = std::min<int>(static_cast<int>(f.an.size()), base + (base + 3) / 4 + 1);
    if (base > static_cast<int>(f.an.size()))
        throw std::runtime_error("resolve_sign: too few coefficients");
    ScopedPrecision guard(probe.decimal_digits + probe.guard_digits);
    const Real shift = Real(5) / 4;
    std::vector<std::string> diag;
    int found = 0;
    for (int sign : {1, -1}) {
        bool consistent = true;
        for (int s : {1, 2}) {
            Real v1 = lambda_value(f, s, sign, Real(1), base, probe);
            Real v2 = lambda_value(f, s, sign, shift, shifted, probe);
            Real rel = abs(v1 - v2) / (1 + abs(v1));
            if (rel > probe.tolerance()) consistent = false;
            diag.push_back("sign " + std::to_string(sign) + " s=" + std::to_string(s) +
                           " Lambda=" + decimal_string(v1, 20) + " shifted=" +
                           decimal_string(v2, 20));
        }
        if (consistent) {
            if (found != 0) {
                std::string msg = "resolve_sign: both signs consistent;";
                for (const auto& d : diag) msg += " [" + d + "]";
                throw std::runtime_error(msg);
            }
            found = sign;
        }
    }
    if (found == 0) {
        std::string msg = "resolve_sign: no consistent sign;";
        for (const auto& d : diag) msg += " [" + d + "]";
        throw std::runtime_error(msg);
    }
    return found;
}

LValue l_value(const ModularForm& f, int s, const PrecisionContext& ctx) {
    if (s < 1 || s >= f.weight) throw std::invalid_argument("l_value: s must be in 1..k-1");
    const int sign = resolve_sign(f, ctx);
    const int terms = min_coefficient_count(f.level, ctx);
    if (terms > static_cast<int>(f.an.size()))
        throw std::runtime_error("l_value: too few coefficients for requested precision");
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    LValue out;
    out.s = s;
    out.terms_used = terms;
    out.sign_used = sign;
    out.value = l_from_lambda(f, s, lambda_value(f, s, sign, Real(1), terms, ctx));
    return out;
}

DeligneCheck deligne_check(const Summand& summand, const ModularForm& f,
                           const PrecisionContext& ctx) {
    if (summand.basis.size() != 2)
        throw std::invalid_argument("deligne_check: summand must carry a charge pair");
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    DeligneCheck out;
    out.pass = true;
    for (int m = 1; m <= 3; ++m) {
        out.l[m - 1] = l_value(f, m, ctx);
        out.twists[m - 1] = tate_twist(summand, m);
        Complex z = out.twists[m - 1] / out.l[m - 1].value;
        if (abs(z.im) > abs(z.re)) {
            // purely imaginary twist realized as a real number
            z = Complex(z.im, -z.re);
            out.divided_by_i[m - 1] = true;
        }
        Real residual = abs(z.re) > 0 ? Real(abs(z.im) / abs(z.re)) : Real(abs(z.im));
        out.raw[m - 1] = z.re;
        if (residual > ctx.tolerance()) {
            out.pass = false;
            out.diagnostics.push_back("r_" + std::to_string(m) +
                                      " is not real up to tolerance: " + decimal_string(z.re, 30) +
                                      " + " + decimal_string(z.im, 30) + " i");
            continue;
        }
        out.r[m - 1] = recognize_rational(z.re, Int(1000000), ctx);
        if (!out.r[m - 1]) {
            out.pass = false;
            out.diagnostics.push_back("r_" + std::to_string(m) + " not recognized: raw value " +
                                      decimal_string(z.re, 40));
        }
    }
    auto ratio = [&](int num, int den) -> std::optional<Rational> {
        if (out.r[num] && out.r[den] && *out.r[den] != 0) return *out.r[num] / *out.r[den];
        if (out.raw[den] == 0) return std::nullopt;
        return recognize_rational(out.raw[num] / out.raw[den], Int(1000000), ctx);
    };
    out.ratio21 = ratio(1, 0);
    out.ratio32 = ratio(2, 1);
    if (!out.ratio21 || *out.ratio21 != 132) {
        out.pass = false;
        out.diagnostics.push_back("r_2/r_1 != 132: raw ratio " +
                                  decimal_string(out.raw[1] / out.raw[0], 40));
    }
    if (!out.ratio32 || *out.ratio32 != -72) {
        out.pass = false;
        out.diagnostics.push_back("r_3/r_2 != -72: raw ratio " +
                                  decimal_string(out.raw[2] / out.raw[1], 40));
    }
    return out;
}

std::string deligne_check_json(const DeligneCheck& c) {
    nlohmann::ordered_json j;
    j["pass"] = c.pass;
    for (int m = 1; m <= 3; ++m) {
        nlohmann::ordered_json e;
        e["s"] = m;
        e["l_value"] = decimal_string(c.l[m - 1].value, 40);
        e["terms_used"] = c.l[m - 1].terms_used;
        e["sign_used"] = c.l[m - 1].sign_used;
        e["twist"] = decimal_string(c.twists[m - 1], 40);
        e["divided_by_i"] = c.divided_by_i[m - 1];
        e["r"] = c.r[m - 1] ? nlohmann::ordered_json(c.r[m - 1]->str())
                            : nlohmann::ordered_json(nullptr);
        j["values"].push_back(e);
    }
    j["ratio_r2_r1"] = c.ratio21 ? nlohmann::ordered_json(c.ratio21->str())
                                 : nlohmann::ordered_json(nullptr);
    j["ratio_r3_r2"] = c.ratio32 ? nlohmann::ordered_json(c.ratio32->str())
                                 : nlohmann::ordered_json(nullptr);
    j["diagnostics"] = c.diagnostics;
    return j.dump(2);
}

}  // namespace fp
