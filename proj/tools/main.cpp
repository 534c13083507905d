// fpcli: command-line front end for the period/splitting/L-value pipeline.
//
// Subcommands: periods | mirror | split | deligne | lfunc | verify-all.
// Reports are JSON-first (decimals as strings); --format text renders a
// human-readable summary. Exit codes: 0 = all checks pass, 1 = a check
// failed, 2 = configuration or input error.

#include "CLI11.hpp"
#include "json.hpp"

#include "fp/frobenius.hpp"
#include "fp/lfunc.hpp"
#include "fp/recognize.hpp"
#include "fp/splitter.hpp"
#include "fp/transport.hpp"

#ifdef FP_ENABLE_FETCH
#include "httplib.h"
#endif

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef FP_TRANSPORT_REV
#define FP_TRANSPORT_REV "unversioned"
#endif

namespace {

using fp::Complex;
using fp::Int;
using fp::Rational;
using fp::Real;
using ordered_json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 3;
    unsigned digits = 0;  // 0 = per-n default
    std::string psi0;
    std::string path;  // "re,im;re,im;..." waypoints, or empty = named default
    std::optional<long> branch;
    std::string field = "auto";
    std::string max_height;
    std::string coeffs;
    std::string fetch_url;
    std::string l_scale = "1";
    std::string cache_dir;
    std::string output;
    std::string format = "json";
    std::string verify;  // split: inline JSON or @file with a charge to check
};

fp::PrecisionContext context_for(const Options& o) {
    unsigned floor = fp::default_digits_for(o.n);
    if (o.digits == 0) return fp::PrecisionContext(floor);
    if (o.digits < floor) {
        std::ostringstream os;
        os << "--digits " << o.digits << " is below the minimum " << floor << " for n = " << o.n;
        throw ConfigError(os.str());
    }
    return fp::PrecisionContext(o.digits);
}

void require_n(const Options& o) {
    if (o.n != 3 && o.n != 4 && o.n != 6 && o.n != 8 && o.n != 10)
        throw ConfigError("--n must be one of 3, 4, 6, 8, 10");
}

Complex parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return Complex(fp::parse_real(s));
    return {fp::parse_real(s.substr(0, comma)), fp::parse_real(s.substr(comma + 1))};
}

std::string cache_root(const Options& o) {
    std::string base = o.cache_dir;
    if (base.empty())
        if (const char* env = std::getenv("FP_CACHE_DIR")) base = env;
    if (base.empty()) base = "fp_cache";
    // invalidate on transport code changes
    std::filesystem::path p = std::filesystem::path(base) / FP_TRANSPORT_REV;
    std::filesystem::create_directories(p);
    return p.string();
}

bool custom_route(const Options& o) {
    return !o.psi0.empty() || !o.path.empty() || o.branch.has_value();
}

fp::JetPoint acquire_jets(const Options& o, const fp::PrecisionContext& ctx) {
    if (!custom_route(o)) return fp::fermat_jets(o.n, ctx, cache_root(o));
    fp::TransportPath path = fp::default_path(o.n);
    if (!o.path.empty()) {
        path.waypoints.clear();
        std::stringstream ss(o.path);
        std::string item;
        while (std::getline(ss, item, ';'))
            if (!item.empty()) path.waypoints.push_back(parse_complex(item));
        if (path.waypoints.size() < 2) throw ConfigError("--path needs at least two waypoints");
    }
    if (!o.psi0.empty()) {
        Complex psi0 = parse_complex(o.psi0);
        if (o.path.empty())
            path.waypoints = {psi0, Complex(0)};
        else if (!(path.waypoints.front() == psi0))
            throw ConfigError("--psi0 must equal the first --path waypoint");
    }
    long branch = o.branch ? *o.branch : fp::default_log_branch(o.n);
    fp::JetPoint start = fp::initial_jet(o.n, path.waypoints.front(), branch, ctx);
    return fp::transport(fp::psi_ode(o.n), start, path, ctx);
}

std::optional<long> field_choice(const Options& o) {
    if (o.field == "auto" || o.field.empty()) return std::nullopt;
    try {
        return std::stol(o.field);
    } catch (const std::exception&) {
        throw ConfigError("--field must be an integer or 'auto'");
    }
}

std::optional<Int> height_choice(const Options& o) {
    if (o.max_height.empty()) return std::nullopt;
    try {
        return Int(o.max_height);
    } catch (const std::exception&) {
        throw ConfigError("--max-height must be a positive integer");
    }
}

ordered_json config_json(const Options& o, const fp::PrecisionContext& ctx) {
    ordered_json c;
    c["n"] = o.n;
    c["digits"] = ctx.decimal_digits;
    c["route"] = custom_route(o) ? "custom" : "default";
    if (!o.psi0.empty()) c["psi0"] = o.psi0;
    if (!o.path.empty()) c["path"] = o.path;
    if (o.branch) c["branch"] = *o.branch;
    c["field"] = o.field;
    if (!o.max_height.empty()) c["max_height"] = o.max_height;
    c["transport_rev"] = FP_TRANSPORT_REV;
    return c;
}

void render_text(const ordered_json& j, std::ostream& os, int indent = 0) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

int emit(ordered_json doc, const Options& o, bool pass) {
    doc["pass"] = pass;
    // timestamps live in a segregated field so the payload is reproducible
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    doc["meta"] = {{"generated_at", buf}};
    std::ostringstream body;
    if (o.format == "text")
        render_text(doc, body);
    else
        body << doc.dump(2) << "\n";
    if (o.output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(o.output);
        if (!f) throw ConfigError("cannot open --output file: " + o.output);
        f << body.str();
    }
    return pass ? 0 : 1;
}

std::string dec(const Real& x, unsigned digits) { return fp::decimal_string(x, digits); }
std::string dec(const Complex& z, unsigned digits) { return fp::decimal_string(z, digits); }

// ---------------------------------------------------------------- periods

int cmd_periods(const Options& o) {
    require_n(o);
    auto ctx = context_for(o);
    fp::ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    fp::JetPoint jets = acquire_jets(o, ctx);
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "periods";
    doc["config"] = config_json(o, ctx);
    doc["psi"] = dec(jets.psi, ctx.decimal_digits);
    ordered_json rows = ordered_json::array();
    for (std::size_t j = 0; j < jets.jets.size(); ++j) {
        ordered_json row;
        row["j"] = j;
        row["value"] = dec(jets.jets[j][0], ctx.decimal_digits);
        row["d1"] = dec(jets.jets[j][1], ctx.decimal_digits);
        row["d2"] = dec(jets.jets[j][2], ctx.decimal_digits);
        rows.push_back(row);
    }
    doc["jets"] = rows;
    return emit(std::move(doc), o, true);
}

// ----------------------------------------------------------------- mirror

int cmd_mirror(const Options& o) {
    require_n(o);
    auto ctx = context_for(o);
    fp::ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    fp::JetPoint jets = acquire_jets(o, ctx);
    Complex t = fp::mirror_map_value(o.n, jets);
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "mirror";
    doc["config"] = config_json(o, ctx);
    doc["t"] = dec(t, ctx.decimal_digits);
    Real half_gap = abs(t.re - Real(1) / 2);
    doc["re_minus_half"] = dec(half_gap, 40);
    bool pass = half_gap < ctx.tolerance();
    auto guess = fp::recognize_minpoly(t, 8, Int(1000000), ctx);
    if (guess) {
        ordered_json g;
        g["degree"] = guess->degree;
        std::vector<std::string> poly;
        for (const auto& c : guess->poly) poly.push_back(c.str());
        g["poly_ascending"] = poly;
        g["residual"] = dec(guess->residual, 20);
        doc["minimal_polynomial"] = g;
    } else {
        doc["minimal_polynomial"] = nullptr;
        pass = false;
    }
    return emit(std::move(doc), o, pass);
}

// ------------------------------------------------------------------ split

fp::Charge parse_charge(const ordered_json& spec) {
    fp::Charge rho;
    rho.d = spec.value("d", 1L);
    if (!spec.contains("coords") || !spec["coords"].is_array())
        throw ConfigError("--verify document needs a 'coords' array");
    for (const auto& c : spec["coords"]) {
        Rational a(0), b(0);
        if (c.is_string()) {
            a = Rational(c.get<std::string>());
        } else if (c.is_array() && c.size() == 2) {
            a = Rational(c[0].get<std::string>());
            b = Rational(c[1].get<std::string>());
        } else {
            throw ConfigError("--verify coords must be \"a/b\" or [\"a/b\",\"c/d\"]");
        }
        rho.coords.emplace_back(a, b, rho.d);
    }
    return rho;
}

ordered_json load_verify_spec(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw ConfigError("cannot open --verify file: " + arg.substr(1));
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("--verify is not valid JSON: ") + e.what());
    }
}

struct SplitArtifacts {
    fp::PrecisionContext ctx;
    fp::JetPoint jets;
    fp::PeriodMatrix P;
    fp::CupMatrix cup;
    fp::PeriodVectors pv;
};

SplitArtifacts split_artifacts(const Options& o, const Rational& l = Rational(1)) {
    require_n(o);
    auto ctx = context_for(o);
    fp::ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    fp::JetPoint jets = acquire_jets(o, ctx);
    fp::PeriodMatrix P = fp::period_matrix(o.n, l, ctx);
    fp::CupMatrix cup = fp::cup_matrix_alpha(o.n, P, ctx);
    fp::PeriodVectors pv = fp::period_vectors(o.n, jets, P);
    return {ctx, std::move(jets), std::move(P), std::move(cup), std::move(pv)};
}

int cmd_split(const Options& o) {
    auto art = split_artifacts(o);
    fp::ScopedPrecision guard(art.ctx.decimal_digits + art.ctx.guard_digits);
    fp::SplitReport rep =
        fp::assemble_split(o.n, art.pv, art.cup, art.ctx, field_choice(o), height_choice(o));
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "split";
    doc["config"] = config_json(o, art.ctx);
    doc["report"] = ordered_json::parse(fp::split_report_json(rep));
    bool pass = !rep.summands.empty();
    Real gate = pow(Real(10), -40);
    for (const auto& r : rep.residuals)
        if (!(r < gate)) pass = false;
    if (!o.verify.empty()) {
        ordered_json spec = load_verify_spec(o.verify);
        if (!spec.contains("level")) throw ConfigError("--verify document needs a 'level'");
        fp::Charge rho = parse_charge(spec);
        auto v = fp::verify_charge(rho, art.pv, art.cup, spec["level"].get<int>(), art.ctx);
        ordered_json vj;
        vj["level"] = spec["level"];
        vj["pass"] = v.pass;
        vj["plane_distance"] = dec(v.plane_distance, 20);
        for (int k = 0; k < 3; ++k)
            vj["pairings"].push_back(dec(v.pairings[k], 20));
        doc["verify"] = vj;
        pass = pass && v.pass;
    }
    return emit(std::move(doc), o, pass);
}

// ---------------------------------------------------------------- deligne

ordered_json summand_json(const fp::Summand& s, unsigned digits) {
    ordered_json e;
    e["level"] = s.level;
    e["hodge_type"] = {s.hodge_type.first, s.hodge_type.second};
    e["dimension"] = s.basis.size();
    if (s.level <= 3) {
        e["c_plus"] = dec(s.c_plus, digits);
        if (s.basis.size() == 2) e["c_minus"] = dec(s.c_minus, digits);
    }
    if (s.quotient) {
        e["quotient"] = dec(*s.quotient, digits);
        if (s.recognized_quotient) {
            std::vector<std::string> poly;
            for (const auto& c : s.recognized_quotient->poly) poly.push_back(c.str());
            e["quotient_minpoly"] = poly;
        } else {
            e["quotient_minpoly"] = nullptr;
        }
    }
    return e;
}

int cmd_deligne(const Options& o) {
    Rational l;
    try {
        l = Rational(o.l_scale);
    } catch (const std::exception&) {
        throw ConfigError("--l-scale must be a rational like 3/2");
    }
    if (l == 0) throw ConfigError("--l-scale must be nonzero");
    auto art = split_artifacts(o, l);
    fp::ScopedPrecision guard(art.ctx.decimal_digits + art.ctx.guard_digits);
    fp::SplitReport rep =
        fp::assemble_split(o.n, art.pv, art.cup, art.ctx, field_choice(o), height_choice(o));
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "deligne";
    doc["config"] = config_json(o, art.ctx);
    doc["l_scale"] = o.l_scale;
    doc["field_d"] = rep.d;
    bool pass = !rep.summands.empty();
    ordered_json arr = ordered_json::array();
    for (const auto& s : rep.summands) {
        arr.push_back(summand_json(s, 40));
        if (s.quotient && !s.recognized_quotient) pass = false;
    }
    doc["summands"] = arr;
    return emit(std::move(doc), o, pass);
}

// ------------------------------------------------------------------ lfunc

std::string default_coeff_path() {
    const char* candidates[] = {"data/f5_432_5_e_a.json",
#ifdef FP_DATA_DIR
                                FP_DATA_DIR "/f5_432_5_e_a.json",
#endif
                                nullptr};
    for (const char** p = candidates; *p; ++p)
        if (std::filesystem::exists(*p)) return *p;
    return candidates[0];
}

fp::ModularForm obtain_form(const Options& o, const fp::PrecisionContext& ctx) {
    if (!o.fetch_url.empty()) {
#ifdef FP_ENABLE_FETCH
        std::string url = o.fetch_url;
        if (url.rfind("http://", 0) != 0)
            throw ConfigError("--fetch supports plain http:// URLs only; "
                              "download https documents manually");
        std::string rest = url.substr(7);
        auto slash = rest.find('/');
        std::string host = rest.substr(0, slash == std::string::npos ? rest.size() : slash);
        std::string path = slash == std::string::npos ? "/" : rest.substr(slash);
        httplib::Client cli(host);
        auto res = cli.Get(path);
        if (!res || res->status != 200)
            throw ConfigError("--fetch failed: " + url +
                              (res ? " (status " + std::to_string(res->status) + ")"
                                   : " (no response)"));
        return fp::parse_form(res->body, ctx);
#else
        throw ConfigError("--fetch support was disabled at build time");
#endif
    }
    std::string path = o.coeffs.empty() ? default_coeff_path() : o.coeffs;
    return fp::load_form(path, ctx);
}

int cmd_lfunc(const Options& o) {
    fp::PrecisionContext ctx(o.digits ? o.digits : 150u);
    fp::ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    fp::ModularForm f = obtain_form(o, ctx);
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "lfunc";
    doc["form"] = {{"label", f.label}, {"weight", f.weight}, {"level", f.level},
                   {"coefficients", f.an.size()}};
    ordered_json vals = ordered_json::array();
    for (int s = 1; s < f.weight; ++s) {
        fp::LValue lv = fp::l_value(f, s, ctx);
        ordered_json e;
        e["s"] = s;
        e["value"] = dec(lv.value, ctx.decimal_digits);
        e["terms_used"] = lv.terms_used;
        e["sign_used"] = lv.sign_used;
        vals.push_back(e);
    }
    doc["l_values"] = vals;
    bool pass = true;
    if (o.n == 4) {
        Options so = o;
        so.digits = std::max<unsigned>(ctx.decimal_digits, fp::default_digits_for(4));
        auto art = split_artifacts(so);
        fp::SplitReport rep = fp::assemble_split(4, art.pv, art.cup, art.ctx);
        if (rep.summands.empty() || rep.summands[0].level != 1)
            throw std::runtime_error("lfunc: n = 4 first summand unavailable");
        fp::DeligneCheck chk = fp::deligne_check(rep.summands[0], f, art.ctx);
        doc["deligne_check"] = ordered_json::parse(fp::deligne_check_json(chk));
        pass = chk.pass;
    }
    return emit(std::move(doc), o, pass);
}

// ------------------------------------------------------------- verify-all

int cmd_verify_all(const Options& o) {
    require_n(o);
    auto ctx = context_for(o);
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = "verify-all";
    doc["config"] = config_json(o, ctx);
    ordered_json stages = ordered_json::array();
    bool all = true;
    auto stage = [&](const std::string& name, bool ok, const std::string& detail) {
        stages.push_back({{"stage", name}, {"pass", ok}, {"detail", detail}});
        all = all && ok;
        if (o.format == "text")
            std::cerr << (ok ? "PASS" : "FAIL") << "  " << name << ": " << detail << "\n";
    };

    // monodromy nilpotency, exact over the integers
    {
        auto T = fp::monodromy_T0(o.n);
        int dim = o.n + 1;
        std::vector<std::vector<Int>> A(dim, std::vector<Int>(dim, 0));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) A[i][j] = T[i][j] - (i == j ? 1 : 0);
        std::vector<std::vector<Int>> acc = A;
        for (int e = 1; e < dim; ++e) {
            std::vector<std::vector<Int>> nxt(dim, std::vector<Int>(dim, 0));
            for (int i = 0; i < dim; ++i)
                for (int k = 0; k < dim; ++k)
                    if (acc[i][k] != 0)
                        for (int j = 0; j < dim; ++j) nxt[i][j] += acc[i][k] * A[k][j];
            acc = std::move(nxt);
        }
        bool zero = true;
        for (const auto& row : acc)
            for (const auto& v : row)
                if (v != 0) zero = false;
        stage("monodromy", zero, "(T0 - I)^(n+1) = 0 exactly");
    }

    fp::ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    auto art = split_artifacts(o);
    stage("transport", true, "jets at psi = 0 acquired (cache key " +
                                 fp::path_cache_key(o.n, ctx.decimal_digits, fp::default_path(o.n),
                                                    fp::default_log_branch(o.n)) +
                                 ")");

    {
        Complex t = art.pv.t0;
        Real gap = abs(t.re - Real(1) / 2);
        auto guess = fp::recognize_minpoly(t, 8, Int(1000000), ctx);
        bool ok = gap < ctx.tolerance() && guess && guess->residual < pow(Real(10), -60);
        stage("mirror", ok,
              "t = " + dec(t, 30) + (guess ? " recognized, degree " +
                                                 std::to_string(guess->degree)
                                           : " not recognized"));
    }

    fp::SplitReport rep =
        fp::assemble_split(o.n, art.pv, art.cup, ctx, field_choice(o), height_choice(o));
    {
        static const std::map<int, long> expected_d{{3, 5}, {4, 1}, {6, 2}, {8, 5}, {10, 3}};
        bool ok = rep.d == expected_d.at(o.n) && !rep.summands.empty();
        Real gate = pow(Real(10), -40);
        for (const auto& r : rep.residuals)
            if (!(r < gate)) ok = false;
        std::ostringstream det;
        det << rep.summands.size() << " summands over Q(sqrt(" << rep.d << ")), unresolved dim "
            << rep.unresolved_dimension;
        stage("split", ok, det.str());
        doc["split_report"] = ordered_json::parse(fp::split_report_json(rep));
    }

    {
        bool ok = true;
        int with_quotient = 0;
        for (const auto& s : rep.summands)
            if (s.quotient) {
                ++with_quotient;
                // purity: the quotient is purely imaginary
                if (!(abs(s.quotient->re) < abs(*s.quotient) * ctx.tolerance())) ok = false;
                if (!s.recognized_quotient) ok = false;
            }
        ok = ok && with_quotient > 0;
        stage("deligne", ok,
              std::to_string(with_quotient) + " quotients, all purely imaginary and recognized");
    }

    if (o.n == 4) {
        bool ok = false;
        std::string detail = "Hodge-Tate summand missing";
        for (const auto& s : rep.summands)
            if (s.basis.size() == 1) {
                Complex v = fp::pow_int(fp::two_pi_i(), 2) * s.c_minus;
                Complex w = {v.im, -v.re};  // divide by i
                auto q = fp::recognize_rational(w.re, Int(1000), ctx);
                ok = q && *q == 216 && abs(w.im) < ctx.tolerance();
                detail = "(2 pi i)^2 c- / i = " + dec(w, 20);
            }
        stage("hodge-tate", ok, detail);

        try {
            fp::ModularForm f = obtain_form(o, art.ctx);
            fp::DeligneCheck chk = fp::deligne_check(rep.summands[0], f, art.ctx);
            doc["deligne_check"] = ordered_json::parse(fp::deligne_check_json(chk));
            stage("lfunc", chk.pass, "Deligne ratios r2/r1 = 132, r3/r2 = -72");
        } catch (const ConfigError& e) {
            stage("lfunc", false, std::string("coefficient data unavailable: ") + e.what());
        }
    }

    doc["stages"] = stages;
    return emit(std::move(doc), o, all);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Period transport, Hodge splitting, and L-value verification"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool needs_route = true) {
        cmd->add_option("--n", o.n, "family parameter (3, 4, 6, 8, 10)");
        cmd->add_option("--digits", o.digits, "working decimal digits (0 = per-n default)");
        if (needs_route) {
            cmd->add_option("--psi0", o.psi0, "start point 're,im' (custom route)");
            cmd->add_option("--path", o.path, "waypoints 're,im;re,im;...' (custom route)");
            cmd->add_option("--branch", o.branch, "log branch at psi0");
            cmd->add_option("--cache-dir", o.cache_dir,
                            "jet cache directory (env FP_CACHE_DIR, default fp_cache)");
        }
        cmd->add_option("--output", o.output, "write the report to a file instead of stdout");
        cmd->add_option("--format", o.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* periods = app.add_subcommand("periods", "transported jets at psi = 0");
    add_common(periods);
    auto* mirror = app.add_subcommand("mirror", "mirror-map value and its minimal polynomial");
    add_common(mirror);
    auto* split = app.add_subcommand("split", "charge-plane search and splitting report");
    add_common(split);
    split->add_option("--field", o.field, "field discriminant d, or 'auto'");
    split->add_option("--max-height", o.max_height, "lattice height bound override");
    split->add_option("--verify", o.verify,
                      "charge to verify: inline JSON or @file with "
                      "{\"level\":j,\"d\":d,\"coords\":[...]} ");
    auto* deligne = app.add_subcommand("deligne", "Deligne periods and quotient recognitions");
    add_common(deligne);
    deligne->add_option("--field", o.field, "field discriminant d, or 'auto'");
    deligne->add_option("--max-height", o.max_height, "lattice height bound override");
    deligne->add_option("--l-scale", o.l_scale, "rational rescaling of the holomorphic form");
    auto* lfunc = app.add_subcommand("lfunc", "L-values and the Deligne-conjecture check");
    add_common(lfunc);
    lfunc->add_option("--coeffs", o.coeffs, "coefficient JSON file");
    lfunc->add_option("--fetch", o.fetch_url, "fetch the coefficient document from a URL");
    auto* verify_all = app.add_subcommand("verify-all", "full pipeline with PASS/FAIL summary");
    add_common(verify_all);
    verify_all->add_option("--field", o.field, "field discriminant d, or 'auto'");
    verify_all->add_option("--max-height", o.max_height, "lattice height bound override");
    verify_all->add_option("--coeffs", o.coeffs, "coefficient JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (periods->parsed()) return cmd_periods(o);
        if (mirror->parsed()) return cmd_mirror(o);
        if (split->parsed()) return cmd_split(o);
        if (deligne->parsed()) return cmd_deligne(o);
        if (lfunc->parsed()) return cmd_lfunc(o);
        if (verify_all->parsed()) return cmd_verify_all(o);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
