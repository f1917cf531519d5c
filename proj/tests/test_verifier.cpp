#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "revpaste/json_io.hpp"
#include "revpaste/transform.hpp"
#include "revpaste/verifier.hpp"

using namespace rp;

TEST_CASE("catalog lookup by id and alias") {
    CHECK(find_law("V1").id == "V1");
    CHECK(find_law("M-det-sign").id == "M13");
    CHECK(find_law("M13").alias == "M-det-sign");
    CHECK(find_law("M-pal-product-converse").cls == LawClass::Refuted);
    CHECK(find_law("T-fp-injective").cls == LawClass::Refuted);
    CHECK(find_law("M-pal-product-converse-rank").cls == LawClass::Conditional);
    CHECK_THROWS_AS(find_law("Z9"), UnknownLaw);
}

TEST_CASE("catalog covers the documented ranges") {
    std::size_t v = 0, t = 0, p = 0, m = 0, x = 0, b = 0, r = 0;
    for (const Law& law : law_catalog()) {
        switch (law.id[0]) {
            case 'V': ++v; break;
            case 'T': ++t; break;
            case 'P': ++p; break;
            case 'M': ++m; break;
            case 'X': ++x; break;
            case 'B': ++b; break;
            case 'R': ++r; break;
        }
        CHECK(!law.statement.empty());
    }
    CHECK(v == 10);
    CHECK(t == 5);
    CHECK(p == 7);
    CHECK(m == 20);
    CHECK(x == 4);
    CHECK(b == 6);
    CHECK(r == 2);
}

TEST_CASE("involution law passes exhaustively at the documented count") {
    DomainSpec d;
    d.field = FieldTag::prime_field(3);
    d.n = 4;
    LawReport r = check_law("V1", d);
    CHECK(r.status == LawStatus::Pass);
    CHECK(r.cases_checked == 81);
}

TEST_CASE("det sign law over GF(5), random") {
    DomainSpec d;
    d.field = FieldTag::prime_field(5);
    d.n = 3;
    d.strategy = DomainSpec::Strategy::Random;
    d.trials = 500;
    d.seed = 42;
    LawReport r = check_law("M-det-sign", d);
    CHECK(r.status == LawStatus::Pass);
    CHECK(r.cases_checked == 500);
}

TEST_CASE("converse counterexample over GF(2)") {
    DomainSpec d;
    d.field = FieldTag::prime_field(2);
    d.n = 1;
    d.m = 2;
    LawReport r = check_law("M-pal-product-converse", d);
    REQUIRE(r.status == LawStatus::Fail);
    REQUIRE(r.witness.has_value());
    const FieldTag gf2 = FieldTag::prime_field(2);
    Matrix A = matrix_from_json((*r.witness)[0], gf2);
    Matrix B = matrix_from_json((*r.witness)[1], gf2);
    // re-verify: AB row-palindromic and nonzero while B is not row-palindromic
    Matrix AB = matmul(A, B);
    CHECK(is_row_palindromic(AB));
    CHECK_FALSE(AB.is_zero());
    CHECK_FALSE(is_row_palindromic(B));
}

TEST_CASE("projection kernel counterexample over GF(3)") {
    DomainSpec d;
    d.field = FieldTag::prime_field(3);
    d.n = 2;
    auto witness = find_counterexample("T-fp-injective", d);
    REQUIRE(witness.has_value());
    const FieldTag gf3 = FieldTag::prime_field(3);
    Vector v = matrix_from_json((*witness)[0], gf3).row(0);
    CHECK_FALSE(v == Vector::zero(gf3, v.size()));
    CHECK(palindromicing(v) == Vector::zero(gf3, v.size()));
    CHECK(is_antipalindromic(v));
}

TEST_CASE("no counterexample to a theorem") {
    DomainSpec d;
    d.field = FieldTag::prime_field(3);
    d.n = 4;
    CHECK_FALSE(find_counterexample("V1", d).has_value());
}

TEST_CASE("reports are deterministic") {
    DomainSpec d;
    d.field = FieldTag::rational();
    d.strategy = DomainSpec::Strategy::Random;
    d.trials = 50;
    d.seed = 9;
    std::string a = report_to_json(check_law("M13", d)).dump();
    std::string b = report_to_json(check_law("M13", d)).dump();
    CHECK(a == b);
    auto r1 = run_suite(d), r2 = run_suite(d);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i)
        CHECK(report_to_json(r1[i]).dump() == report_to_json(r2[i]).dump());
}

TEST_CASE("suite over GF(3) passes with both expected refutations") {
    DomainSpec d;
    d.field = FieldTag::prime_field(3);
    auto reports = run_suite(d);
    CHECK(reports.size() == law_catalog().size());
    CHECK(suite_ok(reports));
    std::size_t failed = 0;
    for (const LawReport& r : reports)
        if (r.status == LawStatus::Fail) ++failed;
    CHECK(failed == 2);
}

TEST_CASE("characteristic 2 skips halving laws") {
    DomainSpec d;
    d.field = FieldTag::prime_field(2);
    LawReport r = check_law("V10", d);  // decomposition law needs 1/2
    CHECK(r.status == LawStatus::Skipped);
    CHECK(r.skip_reason == "characteristic 2: decomposition undefined");
}

TEST_CASE("budget is enforced") {
    DomainSpec d;
    d.field = FieldTag::prime_field(7);
    d.n = 5;
    d.m = 5;
    d.budget = 1000;
    CHECK_THROWS_AS(check_law("M1", d), BudgetExceeded);
}

TEST_CASE("non-exact fields are rejected") {
    DomainSpec d;
    d.field = FieldTag::float64();
    CHECK_THROWS_AS(check_law("V1", d), Error);
}

TEST_CASE("splitmix64 reference values") {
    // published fixed points of the splitmix64 reference implementation
    // outputs 1 and 2 of the reference stream seeded at 0; input k produces
    // the same value as a reference generator whose state has reached k
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("refuted laws are skipped, not passed, when random sampling finds nothing") {
    DomainSpec d;
    d.field = FieldTag::rational();
    d.strategy = DomainSpec::Strategy::Random;
    d.trials = 200;
    d.seed = 0;
    LawReport r = check_law("M-pal-product-converse", d);
    CHECK(r.status != LawStatus::Pass);
}
