#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "newthyper/construct.hpp"
#include "newthyper/grids.hpp"

using namespace newthyper;

namespace {

HyperData simple_linear_data(long N) {
    // lambda_n = n, tau_n = n, a_n = 0
    GridParams p;
    p.family = Family::Linear;
    p.tau1 = 1;
    p.gamma = -1;  // tau_n = n(tau1 + (a1-gamma)(n-1)) = n? no: with a1=0, gamma=-1: n(1+(n-1)) = n^2
    std::vector<Rational> lambda, tau, a;
    for (long n = 0; n <= 2 * N + 2; ++n) {
        lambda.push_back(Rational(n));
        tau.push_back(Rational(n));
        a.push_back(Rational(0));
    }
    return HyperData(SeqSpec::explicit_values(lambda), SeqSpec::explicit_values(tau),
                     SeqSpec::explicit_values(a), N);
}

}  // namespace

TEST_CASE("expansion matrix normalizations") {
    testing::Rng rng(41);
    HyperData data = testing::draw_admissible(Family::Quadratic, 6, rng);
    ExpansionMatrix monic = expansion_matrix(data, Normalization::Monic, 6);
    ExpansionMatrix hyp = expansion_matrix(data, Normalization::HypLike, 6);
    for (long n = 0; n <= 6; ++n) {
        CHECK(monic.at(n, n) == 1);
        CHECK(hyp.at(n, 0) == 1);
        // two-term ratio W_{n,s+1}/W_{n,s} = (lambda_n - lambda_s)/tau_{s+1}
        for (long s = 0; s < n; ++s) {
            if (monic.at(n, s) == 0) continue;
            CHECK(monic.at(n, s + 1) / monic.at(n, s) ==
                  (data.lambda(n) - data.lambda(s)) / data.tau(s + 1));
        }
    }
}

TEST_CASE("expansion matrix closed-form product oracle") {
    testing::Rng rng(42);
    HyperData data = testing::draw_admissible(Family::AskeyWilson, 5, rng);
    ExpansionMatrix monic = expansion_matrix(data, Normalization::Monic, 5);
    ExpansionMatrix hyp = expansion_matrix(data, Normalization::HypLike, 5);
    for (long n = 0; n <= 5; ++n) {
        for (long k = 1; k <= n; ++k) {
            Rational num(1), den(1);
            for (long i = 0; i < k; ++i) {
                num *= data.tau(n - i);
                den *= data.lambda(n) - data.lambda(n - 1 - i);
            }
            CHECK(monic.at(n, n - k) == num / den);
        }
        for (long s = 1; s <= n; ++s) {
            Rational num(1), den(1);
            for (long i = 0; i < s; ++i) {
                num *= data.lambda(n) - data.lambda(i);
                den *= data.tau(i + 1);
            }
            CHECK(hyp.at(n, s) == num / den);
        }
    }
}

TEST_CASE("W_{2,1} on lambda_n = tau_n = n") {
    HyperData data = simple_linear_data(4);
    ExpansionMatrix monic = expansion_matrix(data, Normalization::Monic, 4);
    CHECK(monic.at(2, 1) == 2);  // tau_2 / (lambda_2 - lambda_1)
}

TEST_CASE("build_P low orders") {
    testing::Rng rng(43);
    HyperData data = testing::draw_admissible(Family::Linear, 4, rng);
    CHECK(to_monomial(build_P(data, 0)) == MonomialPoly::constant(Rational(1)));
    MonomialPoly P1 = to_monomial(build_P(data, 1));
    CHECK(P1.coeff(1) == 1);
    CHECK(P1.coeff(0) == data.tau(1) / data.lambda(1));  // a_0 = 0
}

TEST_CASE("hyplike P is the monic P divided by W_{n0}") {
    testing::Rng rng(44);
    HyperData data = testing::draw_admissible(Family::BannaiIto, 5, rng);
    ExpansionMatrix monic = expansion_matrix(data, Normalization::Monic, 5);
    for (long n = 0; n <= 5; ++n) {
        MonomialPoly lhs = to_monomial(build_P(data, n));
        MonomialPoly rhs = to_monomial(build_P_hyplike(data, n)) * monic.at(n, 0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("apply_L on basis elements") {
    testing::Rng rng(45);
    HyperData data = testing::draw_admissible(Family::Quadratic, 4, rng);
    std::vector<Rational> grid{data.a(0), data.a(1), data.a(2), data.a(3)};

    NewtonPoly phi0(grid, {Rational(1)});
    CHECK(apply_L(data, phi0).is_zero());

    NewtonPoly phi1(grid, {Rational(0), Rational(1)});
    NewtonPoly L1 = apply_L(data, phi1);
    CHECK(L1.coeff(1) == data.lambda(1));
    CHECK(L1.coeff(0) == data.tau(1));
}

TEST_CASE("apply_L rejects a mismatched grid") {
    testing::Rng rng(46);
    HyperData data = testing::draw_admissible(Family::Quadratic, 4, rng);
    NewtonPoly p({data.a(0), data.a(1) + 1}, {Rational(0), Rational(0), Rational(1)});
    CHECK_THROWS_AS(apply_L(data, p), std::invalid_argument);
}

TEST_CASE("eigen-identity L P_n = lambda_n P_n holds exactly") {
    testing::Rng rng(47);
    for (Family f : {Family::Linear, Family::Quadratic, Family::AskeyWilson,
                     Family::BannaiIto}) {
        HyperData data = testing::draw_admissible(f, 6, rng);
        for (long n = 0; n <= 6; ++n) {
            NewtonPoly Pn = build_P(data, n);
            NewtonPoly LP = apply_L(data, Pn);
            std::vector<Rational> diff = LP.coeffs();
            diff.resize(static_cast<std::size_t>(Pn.degree()) + 1, Rational(0));
            for (long k = 0; k <= Pn.degree(); ++k)
                diff[static_cast<std::size_t>(k)] -= data.lambda(n) * Pn.coeff(k);
            for (const auto& d : diff) CHECK(d == 0);
        }
    }
}

TEST_CASE("b_0 is forced by the conventions") {
    testing::Rng rng(48);
    HyperData data = testing::draw_admissible(Family::AskeyWilson, 4, rng);
    RecurrenceData rc = recurrence_coeffs(data);
    CHECK(rc.b_at(0) == -data.tau(1) / data.lambda(1));
}

TEST_CASE("three-term residual vanishes on classical instances") {
    testing::Rng rng(49);
    for (Family f : {Family::Linear, Family::Quadratic, Family::AskeyWilson,
                     Family::BannaiIto}) {
        HyperData data = testing::draw_admissible(f, 6, rng);
        RecurrenceData rc = recurrence_coeffs(data);
        for (long n = 0; n <= 5; ++n)
            CHECK(three_term_residual(data, rc, n).is_zero());
    }
}

TEST_CASE("three-term residual detects non-orthogonal data") {
    testing::Rng rng(50);
    bool found = false;
    HyperData data = testing::adversarial_data(4, rng);
    RecurrenceData rc = recurrence_coeffs(data);
    for (long n = 1; n <= 3; ++n)
        if (!three_term_residual(data, rc, n).is_zero()) found = true;
    CHECK(found);
}

TEST_CASE("norms multiply up: h_n = u_1 ... u_n") {
    testing::Rng rng(51);
    HyperData data = testing::draw_admissible(Family::Quadratic, 6, rng);
    RecurrenceData rc = recurrence_coeffs(data);
    Rational acc(1);
    for (long n = 1; n <= 6; ++n) {
        acc *= rc.u_at(n);
        CHECK(rc.h_at(n) == acc);
        CHECK(rc.u_at(n) != 0);
    }
}

TEST_CASE("dual system low orders") {
    testing::Rng rng(52);
    HyperData data = [&] {
        for (;;) {
            HyperData d = testing::draw_admissible(Family::AskeyWilson, 4, rng);
            bool distinct = true;
            for (long i = 0; i <= 4 && distinct; ++i)
                for (long k = i + 1; k <= 4 && distinct; ++k)
                    if (d.a(i) == d.a(k)) distinct = false;
            if (distinct) return d;
        }
    }();
    DualSystem ds = dual_system(data);
    CHECK(ds.dual_polys[0] == MonomialPoly::constant(Rational(1)));
    // P*_1 = 1 + a_1 x / tau_1 (lambda_0 = 0)
    CHECK(ds.dual_polys[1].coeff(0) == 1);
    CHECK(ds.dual_polys[1].coeff(1) == data.a(1) / data.tau(1));
}

TEST_CASE("dual system refuses repeated nodes") {
    HyperData data = simple_linear_data(3);  // a_n = 0 for all n
    CHECK_THROWS_AS(dual_system(data), std::domain_error);
}

TEST_CASE("duality identity on an askey-wilson instance") {
    testing::Rng rng(53);
    HyperData data = [&] {
        for (;;) {
            HyperData d = testing::draw_admissible(Family::AskeyWilson, 6, rng);
            bool distinct = true;
            for (long i = 0; i <= 6 && distinct; ++i)
                for (long k = i + 1; k <= 6 && distinct; ++k)
                    if (d.a(i) == d.a(k)) distinct = false;
            if (distinct) return d;
        }
    }();
    DualSystem ds = dual_system(data);
    for (long n = 0; n <= 6; ++n) {
        MonomialPoly Pn = to_monomial(build_P_hyplike(data, n));
        for (long k = 0; k <= 6; ++k)
            CHECK(Pn.eval(data.a(k)) ==
                  ds.dual_polys[static_cast<std::size_t>(k)].eval(data.lambda(n)));
    }
}

TEST_CASE("laguerre operator oracle at n = 3") {
    // operator -gamma x D^2 + (x - t1) D corresponds to the linear family
    // with a1 = alpha = 0, tau1 = -t1, gamma kept
    Rational gamma(1, 3), t1(2);
    GridParams p;
    p.family = Family::Linear;
    p.tau1 = -t1;
    p.gamma = gamma;
    HyperData data = build_linear(p, 4);
    CHECK(to_monomial(build_P(data, 3)) == testing::laguerre_eigenpoly(gamma, t1, 3));
}
