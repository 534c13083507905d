#include "doctest.h"

#include "fp/lfunc.hpp"
#include "fp/transport.hpp"
#include "json.hpp"

#include <map>
#include <sstream>

using namespace fp;

namespace {

const char* kCoeffFile = FP_DATA_DIR "/f5_432_5_e_a.json";

const ModularForm& form_for(const PrecisionContext& ctx) {
    static std::map<unsigned, ModularForm> memo;
    auto it = memo.find(ctx.decimal_digits);
    if (it == memo.end()) it = memo.emplace(ctx.decimal_digits, load_form(kCoeffFile, ctx)).first;
    return it->second;
}

std::string form_json(int count, const char* eps = "null") {
    std::ostringstream os;
    os << "{\"label\":\"t\",\"weight\":5,\"level\":432,\"eps\":" << eps << ",\"an\":[1";
    for (int i = 2; i <= count; ++i) os << ",0";
    os << "]}";
    return os.str();
}

// published 53-digit decimals for L(f5, s)
const char* kL[3] = {
    "209.93282899673655336021291418393011340981657763388528082",
    "5.7693338146389626445008495222440642858917514380024752429",
    "0.8720345004205937749699892581739981454552490455009608792",
};

}  // namespace

TEST_CASE("coefficient count requirement follows the tail bound") {
    PrecisionContext c40(40);
    // e^(-2 pi M / sqrt(432)) < 10^-45  =>  M > 45 ln(10) sqrt(432) / (2 pi)
    CHECK(min_coefficient_count(432, c40) == 343);
    CHECK(min_coefficient_count(1, c40) < min_coefficient_count(432, c40));
    CHECK(min_coefficient_count(432, PrecisionContext(150)) <= 2000);
    CHECK_THROWS_AS(min_coefficient_count(0, c40), std::invalid_argument);
}

TEST_CASE("load_form accepts the f5 coefficient file") {
    PrecisionContext ctx(150);
    const ModularForm& f = form_for(ctx);
    CHECK(f.label == "432.5.e.a");
    CHECK(f.weight == 5);
    CHECK(f.level == 432);
    CHECK(!f.eps.has_value());
    CHECK(f.an.size() == 2000);
    CHECK(f.an[0] == 1);
    CHECK(f.an[6] == -71);
    CHECK(f.an[12] == -337);
    CHECK(f.an[18] == 601);
    CHECK(f.an[24] == 625);
    CHECK(f.an[30] == -194);
    // CM form: a_p = 0 at inert and bad primes
    for (int p : {2, 3, 5, 11, 17, 23, 29}) CHECK(f.an[p - 1] == 0);
}

TEST_CASE("load_form rejects malformed documents") {
    PrecisionContext c40(40);
    CHECK_THROWS_WITH_AS(parse_form("{\"weight\":5,\"level\":432,\"an\":[1]}", c40),
                         doctest::Contains("missing field 'label'"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_form("not json", c40), doctest::Contains("invalid JSON"),
                         std::runtime_error);
    // a_1 normalization
    std::string bad_a1 = form_json(400);
    bad_a1.replace(bad_a1.find("[1"), 2, "[2");
    CHECK_THROWS_WITH_AS(parse_form(bad_a1, c40), doctest::Contains("a_1 must equal 1"),
                         std::runtime_error);
    // 50 coefficients cannot support 40 digits at level 432
    CHECK_THROWS_WITH_AS(parse_form(form_json(50), c40), doctest::Contains("too few coefficients"),
                         std::runtime_error);
    CHECK_NOTHROW(parse_form(form_json(343), c40));
    // non-integer and complex coefficients
    std::string with_float = form_json(400);
    with_float.replace(with_float.find("[1,0"), 4, "[1,0.5");
    CHECK_THROWS_WITH_AS(parse_form(with_float, c40), doctest::Contains("non-integer"),
                         std::runtime_error);
    std::string with_pair = form_json(400);
    with_pair.replace(with_pair.find("[1,0"), 4, "[1,[0,1]");
    CHECK_THROWS_WITH_AS(parse_form(with_pair, c40), doctest::Contains("self-dual"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_form(form_json(400, "2"), c40),
                         doctest::Contains("eps must be +1 or -1"), std::runtime_error);
    // exact rationals as strings are accepted
    std::string with_rat = form_json(400);
    with_rat.replace(with_rat.find("[1,0"), 4, "[1,\"3/2\"");
    ModularForm f = parse_form(with_rat, c40);
    CHECK(f.an[1] == Rational(3, 2));
}

TEST_CASE("functional-equation sign is inferred as +1") {
    PrecisionContext ctx(60);
    const ModularForm& f = form_for(ctx);
    CHECK(resolve_sign(f, ctx) == 1);
    // metadata short-circuits inference
    ModularForm forced = f;
    forced.eps = -1;
    CHECK(resolve_sign(forced, ctx) == -1);
}

TEST_CASE("L(f5, s) matches the published decimals") {
    PrecisionContext ctx(150);
    const ModularForm& f = form_for(ctx);
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    for (int s = 1; s <= 3; ++s) {
        LValue lv = l_value(f, s, ctx);
        CHECK(lv.s == s);
        CHECK(lv.sign_used == 1);
        CHECK(lv.terms_used <= 2000);
        Real want = parse_real(kL[s - 1]);
        CHECK(abs(lv.value - want) < abs(want) * pow(Real(10), -50));
    }
    CHECK_THROWS_AS(l_value(f, 0, ctx), std::invalid_argument);
    CHECK_THROWS_AS(l_value(f, 5, ctx), std::invalid_argument);
}

TEST_CASE("cutoff stability: doubling the term count is inert") {
    PrecisionContext ctx(60);
    const ModularForm& f = form_for(ctx);
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    int terms = min_coefficient_count(f.level, ctx);
    REQUIRE(2 * terms <= static_cast<int>(f.an.size()));
    for (int s = 1; s <= 3; ++s) {
        Real a = lambda_value(f, s, 1, Real(1), terms, ctx);
        Real b = lambda_value(f, s, 1, Real(1), 2 * terms, ctx);
        CHECK(abs(a - b) < (1 + abs(a)) * ctx.tolerance());
    }
}

TEST_CASE("functional-equation self-test distinguishes the signs") {
    PrecisionContext ctx(60);
    const ModularForm& f = form_for(ctx);
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    const int k = f.weight;
    Real split = Real(4) / 3;
    int terms = min_coefficient_count(f.level, ctx);
    int shifted = terms + terms / 2;
    REQUIRE(shifted <= static_cast<int>(f.an.size()));
    for (int s : {1, 2}) {
        // Lambda(s) at split 1 against Lambda(k-s) at an independent split
        Real lhs = lambda_value(f, s, 1, Real(1), terms, ctx);
        Real rhs = lambda_value(f, k - s, 1, split, shifted, ctx);
        CHECK(abs(lhs - rhs) < (1 + abs(lhs)) * ctx.tolerance());
        // the wrong sign is split-dependent and misses by a macroscopic amount
        Real wrong = lambda_value(f, s, -1, split, shifted, ctx);
        Real wrong_base = lambda_value(f, s, -1, Real(1), terms, ctx);
        CHECK(abs(wrong - wrong_base) > Real(1) / 1000);
    }
    CHECK_THROWS_AS(lambda_value(f, 1, 0, Real(1), 100, ctx), std::invalid_argument);
    CHECK_THROWS_AS(lambda_value(f, 1, 1, Real(0), 100, ctx), std::invalid_argument);
    CHECK_THROWS_AS(lambda_value(f, 1, 1, Real(1), 0, ctx), std::invalid_argument);
    CHECK_THROWS_AS(lambda_value(f, 1, 1, Real(1), 3000, ctx), std::invalid_argument);
}

TEST_CASE("Deligne-conjecture ratios for the first quartic summand") {
    PrecisionContext ctx(150);
    ScopedPrecision guard(ctx.decimal_digits + ctx.guard_digits);
    JetPoint jets = fermat_jets(4, ctx, "fp_cache");
    PeriodMatrix P = period_matrix(4, 1, ctx);
    CupMatrix M = cup_matrix_alpha(4, P, ctx);
    PeriodVectors pv = period_vectors(4, jets, P);
    SplitReport rep = assemble_split(4, pv, M, ctx);
    REQUIRE(rep.summands.size() >= 1);
    const Summand& s1 = rep.summands[0];
    REQUIRE(s1.level == 1);

    const ModularForm& f = form_for(ctx);
    DeligneCheck chk = deligne_check(s1, f, ctx);
    CHECK(chk.pass);
    CHECK(chk.diagnostics.empty());
    REQUIRE(chk.r[0].has_value());
    REQUIRE(chk.r[1].has_value());
    REQUIRE(chk.r[2].has_value());
    CHECK(*chk.r[0] == Rational(24, 11));
    CHECK(*chk.r[1] == 288);
    CHECK(*chk.r[2] == -20736);
    REQUIRE(chk.ratio21.has_value());
    REQUIRE(chk.ratio32.has_value());
    CHECK(*chk.ratio21 == 132);
    CHECK(*chk.ratio32 == -72);
    // the odd twists land on the real axis under this c- phase convention
    for (int m = 0; m < 3; ++m) CHECK(!chk.divided_by_i[m]);
    for (int m = 0; m < 3; ++m) CHECK(chk.l[m].sign_used == 1);

    auto doc = nlohmann::json::parse(deligne_check_json(chk));
    CHECK(doc["pass"] == true);
    CHECK(doc["values"][0]["r"] == "24/11");
    CHECK(doc["ratio_r2_r1"] == "132");
    CHECK(doc["ratio_r3_r2"] == "-72");

    // a Hodge-Tate singleton has no charge pair to twist
    REQUIRE(rep.summands.size() == 3);
    CHECK_THROWS_AS(deligne_check(rep.summands[2], f, ctx), std::invalid_argument);
}
