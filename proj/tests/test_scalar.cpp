#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "newthyper/rational.hpp"
#include "newthyper/seq.hpp"

using namespace newthyper;

TEST_CASE("rational_parse canonicalizes") {
    CHECK(rational_parse("3/6") == Rational(1, 2));
    CHECK(rational_parse("-4/2") == Rational(-2));
    CHECK(rational_parse("0/7") == 0);
    CHECK(rational_parse("17") == 17);
    CHECK(rational_parse("+5/3") == Rational(5, 3));
    CHECK(rational_parse("4/-6") == Rational(-2, 3));
}

TEST_CASE("rational_parse rejects malformed input") {
    CHECK_THROWS_AS(rational_parse(""), ParseError);
    CHECK_THROWS_AS(rational_parse("1/0"), ParseError);
    CHECK_THROWS_AS(rational_parse("a/b"), ParseError);
    CHECK_THROWS_AS(rational_parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(rational_parse("1.5"), ParseError);
    CHECK_THROWS_AS(rational_parse("3/"), ParseError);
}

TEST_CASE("rational_str round-trips through parse") {
    CHECK(rational_str(Rational(1, 2)) == "1/2");
    CHECK(rational_str(Rational(-7)) == "-7");
    CHECK(rational_str(Rational(0)) == "0");
    testing::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        Rational r = testing::rand_rational(rng, 1000, 1000);
        CHECK(rational_parse(rational_str(r)) == r);
    }
}

TEST_CASE("field axioms hold exactly on random triples") {
    testing::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Rational a = testing::rand_rational(rng, 50, 20);
        Rational b = testing::rand_rational(rng, 50, 20);
        Rational c = testing::rand_rational(rng, 50, 20);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("rational_pow handles negative exponents") {
    CHECK(rational_pow(Rational(1, 2), 3) == Rational(1, 8));
    CHECK(rational_pow(Rational(1, 2), -2) == 4);
    CHECK(rational_pow(Rational(-3), 0) == 1);
    CHECK_THROWS(rational_pow(Rational(0), -1));
}

TEST_CASE("seq_eval on explicit specs") {
    auto spec = SeqSpec::explicit_values({Rational(0), Rational(1), Rational(4)});
    CHECK(seq_eval(spec, 2) == 4);
    CHECK(seq_eval(spec, 0) == 0);
    CHECK_THROWS_AS(seq_eval(spec, 3), std::out_of_range);
    // purity
    CHECK(seq_eval(spec, 1) == seq_eval(spec, 1));
}

TEST_CASE("seq_eval on closed forms") {
    GridParams lin;
    lin.family = Family::Linear;
    auto lambda = SeqSpec::closed_form(lin, SeqRole::Lambda);
    CHECK(seq_eval(lambda, 5) == 5);

    GridParams quad;
    quad.family = Family::Quadratic;
    quad.alpha = Rational(1, 2);
    auto qlambda = SeqSpec::closed_form(quad, SeqRole::Lambda);
    CHECK(seq_eval(qlambda, 2) == 5);  // n(n+alpha) = 2 * 5/2
}

TEST_CASE("validate accepts a clean explicit triple") {
    HyperData data(SeqSpec::explicit_values({Rational(0), Rational(1), Rational(2)}),
                   SeqSpec::explicit_values({Rational(0), Rational(1), Rational(3)}),
                   SeqSpec::explicit_values({Rational(0), Rational(2), Rational(5)}), 2);
    auto report = validate(data);
    CHECK(report.valid());
    CHECK_FALSE(report.finite);
}

TEST_CASE("validate flags lambda collisions with both indices") {
    HyperData data(SeqSpec::explicit_values({Rational(0), Rational(1), Rational(1)}),
                   SeqSpec::explicit_values({Rational(0), Rational(1), Rational(3)}),
                   SeqSpec::explicit_values({Rational(0), Rational(2), Rational(5)}), 2);
    auto report = validate(data);
    REQUIRE_FALSE(report.valid());
    CHECK(report.violations[0].message == "lambda_1 = lambda_2");
}

TEST_CASE("validate flags a premature tau zero") {
    HyperData data(SeqSpec::explicit_values({Rational(0), Rational(1), Rational(2)}),
                   SeqSpec::explicit_values({Rational(0), Rational(1), Rational(0)}),
                   SeqSpec::explicit_values({Rational(0), Rational(2), Rational(5)}), 2);
    auto report = validate(data);
    REQUIRE_FALSE(report.valid());
    CHECK(report.violations[0].message == "tau_2 = 0 before N+1");
}

TEST_CASE("validate flags nonzero initial conditions") {
    HyperData data(SeqSpec::explicit_values({Rational(1), Rational(2)}),
                   SeqSpec::explicit_values({Rational(1), Rational(1)}),
                   SeqSpec::explicit_values({Rational(3), Rational(2)}), 1);
    auto report = validate(data);
    CHECK(report.violations.size() == 3);
}

TEST_CASE("validate marks the finite regime") {
    HyperData data(
        SeqSpec::explicit_values({Rational(0), Rational(1), Rational(2), Rational(3)}),
        SeqSpec::explicit_values({Rational(0), Rational(2), Rational(1), Rational(0)}),
        SeqSpec::explicit_values({Rational(0), Rational(1), Rational(2), Rational(3)}), 2);
    auto report = validate(data);
    CHECK(report.valid());
    CHECK(report.finite);
}

TEST_CASE("validate accepts every admissible family draw") {
    testing::Rng rng(3);
    for (Family f : {Family::Linear, Family::Quadratic, Family::AskeyWilson,
                     Family::BannaiIto}) {
        for (int i = 0; i < 5; ++i) {
            HyperData data = testing::draw_admissible(f, 6, rng);
            CHECK(validate(data).valid());
        }
    }
}

TEST_CASE("HyperData rejects too-short explicit sequences") {
    CHECK_THROWS_AS(
        HyperData(SeqSpec::explicit_values({Rational(0), Rational(1)}),
                  SeqSpec::explicit_values({Rational(0), Rational(1)}),
                  SeqSpec::explicit_values({Rational(0), Rational(1)}), 4),
        std::invalid_argument);
}
