#include <doctest.h>

#include <bohrlab/extremal.hpp>
#include <bohrlab/functionals.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace bohrlab;

TEST_CASE("psi coefficients: (a, -2(1-a), -2(1-a), ...)") {
    const TruncatedSeries s = realize(FunctionSpec{PsiSpec{0.5}});
    CHECK(s.coeff(0).real() == doctest::Approx(0.5));
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(s.coeff(n).real() == doctest::Approx(-1.0));
}

TEST_CASE("phi coefficients and the majorant closed form") {
    for (double a : {0.1, 0.5, 0.9}) {
        const TruncatedSeries s = realize(with_order_for(FunctionSpec{PhiSpec{a}}, 0.6));
        for (std::size_t n = 1; n <= 8; ++n)
            CHECK(std::abs(s.coeff(n)) ==
                  doctest::Approx((1.0 - a * a) * std::pow(a, n - 1.0)));
        // M_phi(r) = 1 + (1-a)/(1-ar) (r(1+2a) - 1)
        for (double r : {0.2, 1.0 / (1.0 + 2.0 * a), 0.5}) {
            const SeriesStats st = series_stats(s, r);
            const double closed = 1.0 + (1.0 - a) / (1.0 - a * r) * (r * (1.0 + 2.0 * a) - 1.0);
            CHECK(st.M_f == doctest::Approx(closed).epsilon(1e-10));
        }
    }
}

TEST_CASE("monomial realization") {
    const TruncatedSeries s = realize(FunctionSpec{MonomialSpec{3}});
    CHECK(eval(s, {0.5, 0.0}).real() == doctest::Approx(0.125));
}

TEST_CASE("lacunary Moebius coefficient signs") {
    const TruncatedSeries plus =
        realize(with_order_for(FunctionSpec{LacunaryMobiusSpec{0.5, 2, 1, +1}}, 0.5));
    // a_m = a; a_{np+m} = (1-a^2)(-1)^(n-1) a^(n-1)
    CHECK(plus.coeff(1).real() == doctest::Approx(0.5));
    CHECK(plus.coeff(3).real() == doctest::Approx(0.75));
    CHECK(plus.coeff(5).real() == doctest::Approx(-0.375));
    CHECK(std::abs(plus.coeff(2)) == 0.0);

    const TruncatedSeries minus =
        realize(with_order_for(FunctionSpec{LacunaryMobiusSpec{0.5, 2, 1, -1}}, 0.5));
    CHECK(minus.coeff(3).real() == doctest::Approx(-0.75));
    CHECK(minus.coeff(5).real() == doctest::Approx(-0.375));
}

TEST_CASE("class B samples: membership and the derivative bound") {
    for (std::uint64_t seed : {1ull, 7ull, 42ull, 1234ull}) {
        for (int c = 1; c <= 8; ++c) {
            const TruncatedSeries s = sample_class(SampleClass::B, seed, c);
            const double a0 = std::abs(s.coeff(0));
            for (std::size_t n = 1; n <= s.order(); ++n)
                CHECK(std::abs(s.coeff(n)) <= 1.0 - a0 * a0 + 1e-12);
            const double budget = tail_error(s, 0.95);
            for (int j = 0; j < 64; ++j) {
                const Complex z = std::polar(0.95, 2.0 * std::numbers::pi * j / 64.0);
                CHECK(std::abs(eval(s, z)) < 1.0 + budget);
            }
        }
    }
}

TEST_CASE("class P samples: membership and the coefficient bound") {
    for (std::uint64_t seed : {3ull, 9ull, 77ull}) {
        for (int c = 1; c <= 8; ++c) {
            const TruncatedSeries s = sample_class(SampleClass::P, seed, c);
            const double a0 = s.coeff(0).real();
            CHECK(std::abs(s.coeff(0).imag()) <= 1e-15);
            CHECK(a0 >= 0.0);
            CHECK(a0 < 1.0);
            for (std::size_t n = 1; n <= s.order(); ++n)
                CHECK(std::abs(s.coeff(n)) <= 2.0 * (1.0 - a0) + 1e-12);
            const double budget = tail_error(s, 0.95);
            for (int j = 0; j < 64; ++j) {
                const Complex z = std::polar(0.95, 2.0 * std::numbers::pi * j / 64.0);
                CHECK(eval(s, z).real() < 1.0 + budget);
            }
        }
    }
}

TEST_CASE("samples are deterministic in the seed") {
    const TruncatedSeries a = sample_class(SampleClass::B, 99, 4);
    const TruncatedSeries b = sample_class(SampleClass::B, 99, 4);
    REQUIRE(a.order() == b.order());
    for (std::size_t n = 0; n <= a.order(); ++n) CHECK(a.coeff(n) == b.coeff(n));
    const TruncatedSeries c = sample_class(SampleClass::B, 100, 4);
    bool same = true;
    for (std::size_t n = 0; n <= std::min(a.order(), c.order()); ++n)
        if (a.coeff(n) != c.coeff(n)) same = false;
    CHECK_FALSE(same);
}

TEST_CASE("lacunary sample values match the closed form at random points") {
    oracle::Rng rng(5150);
    const TruncatedSeries s =
        realize(with_order_for(FunctionSpec{LacunaryMobiusSpec{0.5, 2, 1, +1}}, 0.9));
    for (int i = 0; i < 100; ++i) {
        const Complex z = std::polar(rng.in(0.0, 0.9), rng.in(0.0, 6.283185307));
        const Complex want = oracle::lacunary_value(0.5, 2, 1, +1, z);
        CHECK(std::abs(eval(s, z) - want) <= tail_error(s, std::abs(z)) + 1e-12);
    }
}

TEST_CASE("mini-language: parse and canonical labels") {
    const FunctionSpec phi = parse_function_spec("phi:a=0.5");
    CHECK(std::get<PhiSpec>(phi.kind).a == doctest::Approx(0.5));
    CHECK(label(phi) == "phi:a=0.5");

    const FunctionSpec lac = parse_function_spec("lac:a=0.5,p=2,m=1,sign=+");
    const auto& ls = std::get<LacunaryMobiusSpec>(lac.kind);
    CHECK(ls.p == 2);
    CHECK(ls.m == 1);
    CHECK(ls.sign == 1);

    const FunctionSpec mono = parse_function_spec("mono:k=3");
    CHECK(std::get<MonomialSpec>(mono.kind).k == 3);

    const FunctionSpec bl = parse_function_spec("blaschke:seed=7,deg=4");
    CHECK(std::get<BlaschkeSpec>(bl.kind).zeros.size() == 4);

    const FunctionSpec hg = parse_function_spec("herglotz:a0=0.2,seed=9,terms=5");
    CHECK(std::get<HerglotzSpec>(hg.kind).a0 == doctest::Approx(0.2));
    CHECK(std::get<HerglotzSpec>(hg.kind).weights.size() == 5);

    CHECK_THROWS_AS((void)parse_function_spec("nope:a=1"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_function_spec("phi:b=1"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_function_spec("lac:a=0.5,p=2,m=1,sign=?"),
                    std::invalid_argument);
}

TEST_CASE("spec invariants are enforced") {
    CHECK_THROWS_AS((void)realize(FunctionSpec{PhiSpec{1.0}}), std::invalid_argument);
    CHECK_THROWS_AS((void)realize(FunctionSpec{PsiSpec{-0.1}}), std::invalid_argument);
    BlaschkeSpec outside;
    outside.zeros = {{1.2, 0.0}};
    CHECK_THROWS_AS((void)realize(FunctionSpec{outside}), std::invalid_argument);
    HerglotzSpec unnormalized;
    unnormalized.a0 = 0.3;
    unnormalized.weights = {0.6, 0.6};
    unnormalized.angles = {0.1, 0.2};
    CHECK_THROWS_AS((void)realize(FunctionSpec{unnormalized}), std::invalid_argument);
}

TEST_CASE("(1-x^p)/(1-x): bounds on a dense grid with the x = 1 limit") {
    for (double p : {0.2, 0.5, 1.0}) {
        for (int i = 0; i <= 1000; ++i) {
            const double x = i / 1000.0;
            CHECK(detail::pow_diff_ratio(x, p) >= p - 1e-12);
        }
        CHECK(detail::pow_diff_ratio(1.0, p) == doctest::Approx(p));
    }
    for (double p : {1.5, 2.0, 3.0}) {
        for (int i = 0; i <= 1000; ++i) {
            const double x = i / 1000.0;
            const double t = detail::pow_diff_ratio(x, p);
            CHECK(t >= 1.0 - 1e-12);
            CHECK(t <= p + 1e-12);
        }
    }
}
