#include <doctest.h>

#include <bohrlab/extremal.hpp>
#include <bohrlab/functionals.hpp>

#include <cmath>

#include "oracles.hpp"

using namespace bohrlab;

namespace {

TruncatedSeries sized(FunctionSpec spec, double r) { return realize(with_order_for(spec, r)); }

}  // namespace

TEST_CASE("series_stats: majorant, alternating, norm, area") {
    // boundary case r = 1/(1+2a) where M_phi = 1 exactly
    const TruncatedSeries phi = sized(FunctionSpec{PhiSpec{0.5}}, 0.55);
    CHECK(series_stats(phi, 0.5).M_f == doctest::Approx(1.0).epsilon(1e-10));

    const TruncatedSeries psi = sized(FunctionSpec{PsiSpec{0.5}}, 0.55);
    CHECK(series_stats(psi, 0.4).area_ratio ==
          doctest::Approx(4.0 * 0.25 * 0.16 / (0.84 * 0.84)).epsilon(1e-10));
    CHECK(series_stats(psi, 0.5).A_f0 == doctest::Approx(-1.0 / 3.0).epsilon(1e-10));

    const SeriesStats at0 = series_stats(psi, 0.0);
    CHECK(at0.M_f == doctest::Approx(0.5));
    CHECK(at0.A_f == doctest::Approx(0.5));
    CHECK(at0.norm_sq == doctest::Approx(0.25));
    CHECK(at0.area_ratio == 0.0);
}

TEST_CASE("series_stats: structural invariants on random samples") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const TruncatedSeries s = sample_class(seed % 2 ? SampleClass::B : SampleClass::P,
                                               seed, 1 + static_cast<int>(seed % 8));
        for (double r : {0.2, 0.5, 0.8}) {
            const SeriesStats st = series_stats(s, r);
            const double a0 = std::abs(s.coeff(0));
            CHECK(st.M_f == doctest::Approx(a0 + st.M_f0).epsilon(1e-14));
            CHECK(st.A_f == doctest::Approx(a0 + st.A_f0).epsilon(1e-14));
            CHECK(std::abs(st.A_f0) <= st.M_f0 + 1e-15);
            CHECK(st.norm_sq == doctest::Approx(a0 * a0 + st.norm0_sq).epsilon(1e-14));
            CHECK(std::isfinite(st.area_ratio));
        }
    }
}

TEST_CASE("weighted_sum: definitions coincide") {
    const TruncatedSeries phi = sized(FunctionSpec{PhiSpec{0.4}}, 0.7);
    for (double r : {0.2, 0.5}) {
        const SeriesStats st = series_stats(phi, r);
        CHECK(weighted_sum(phi, WeightSequence::geometric(), 0, r) ==
              doctest::Approx(st.M_f).epsilon(1e-13));
        // lacunary(k) picks the a_{km} r^{km} subsequence
        double direct = 0.0;
        for (std::size_t n = 0; n <= phi.order(); n += 2)
            direct += std::abs(phi.coeff(n)) * std::pow(r, static_cast<double>(n));
        CHECK(weighted_sum(phi, WeightSequence::lacunary(2), 0, r) ==
              doctest::Approx(direct).epsilon(1e-13));
        // odd part obeys the alternating-series estimate
        const double odd = weighted_sum(phi, WeightSequence::odd_only(), 1, r);
        CHECK(odd <= r / (1.0 - r * r) * (1.0 - st.norm_sq) + 1e-10);
    }
}

TEST_CASE("refinement_G: geometric closed form and brute-force sum") {
    const TruncatedSeries phi = sized(FunctionSpec{PhiSpec{0.5}}, 0.4);
    const double r = 0.2;
    const SeriesStats st = series_stats(phi, r);
    const double closed = (r / (1.0 - r) + 1.0 / (1.0 + 0.5)) * st.norm0_sq;
    CHECK(refinement_G(phi, WeightSequence::geometric(), r) ==
          doctest::Approx(closed).epsilon(1e-10));

    double brute = 0.0;
    for (std::size_t n = 1; n <= phi.order(); ++n) {
        const double an = std::abs(phi.coeff(n));
        double tail = 0.0;
        for (std::size_t k = 2 * n + 1; k < 3000; ++k) tail += std::pow(r, static_cast<double>(k));
        brute += an * an * (std::pow(r, 2.0 * n) / 1.5 + tail);
    }
    CHECK(refinement_G(phi, WeightSequence::geometric(), r) ==
          doctest::Approx(brute).epsilon(1e-10));

    const TruncatedSeries constant = realize(FunctionSpec{MonomialSpec{0}});
    CHECK(refinement_G(constant, WeightSequence::geometric(), 0.3) == 0.0);
}

TEST_CASE("lemmaG_sides: sharp for phi, inequality on samples") {
    const WeightSequence kinds[] = {WeightSequence::geometric(), WeightSequence::lacunary(2),
                                    WeightSequence::harmonic()};
    for (const WeightSequence& w : kinds) {
        for (double a : {0.0, 0.3, 0.7}) {
            const TruncatedSeries phi = sized(FunctionSpec{PhiSpec{a}}, 0.6);
            for (double r : {0.1, 0.3, 0.5}) {
                const LemmaGSides sides = lemmaG_sides(phi, w, 1.0, r);
                CHECK(std::abs(sides.lhs - sides.rhs) <= tail_error(phi, r) + 1e-10);
            }
        }
    }
    // constant function: lhs reduces to the head term
    const TruncatedSeries c = scale(realize(FunctionSpec{MonomialSpec{0}}), {0.6, 0.0}, 4);
    const LemmaGSides sides = lemmaG_sides(c, WeightSequence::geometric(), 1.5, 0.3);
    CHECK(sides.lhs == doctest::Approx(std::pow(0.6, 1.5)));
    CHECK(sides.lhs <= sides.rhs);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const TruncatedSeries s = sample_class(SampleClass::B, seed, 1 + static_cast<int>(seed % 8));
        const LemmaGSides g = lemmaG_sides(s, WeightSequence::geometric(), 1.0, 0.3);
        CHECK(g.lhs <= g.rhs + tail_error(s, 0.3) + 1e-9);
    }
}

TEST_CASE("bohr_power: identity with the weighted form of the extremal") {
    const WeightSequence geo = WeightSequence::geometric();
    for (double a : {0.0, 0.4, 0.9}) {
        const TruncatedSeries psi = sized(FunctionSpec{PsiSpec{a}}, 0.65);
        for (double p : {0.3, 1.0, 2.0}) {
            for (double r : {0.1, 0.4, 0.6}) {
                const double z0 = zeta(geo, 0, r);
                const double head = (1.0 - std::pow(a, p)) / (2.0 * (1.0 - a));
                const double closed = z0 + 2.0 * (1.0 - a) * (phi(geo, 1, r) - head * z0);
                CHECK(bohr_power(psi, geo, p, r) ==
                      doctest::Approx(closed).epsilon(1e-9));
            }
        }
        CHECK(bohr_power(psi, geo, 1.0, 0.3) ==
              doctest::Approx(series_stats(psi, 0.3).M_f).epsilon(1e-12));
    }
    const TruncatedSeries c = scale(realize(FunctionSpec{MonomialSpec{0}}), {0.5, 0.0}, 4);
    CHECK(bohr_power(c, geo, 2.0, 0.4) == doctest::Approx(0.25));

    // complex or negative constant terms are rejected
    std::vector<Complex> cc{{0.3, 0.2}, {0.1, 0.0}};
    const TruncatedSeries complex_head(std::move(cc), TailBound{});
    CHECK_THROWS_AS((void)bohr_power(complex_head, geo, 1.0, 0.2), std::domain_error);
}

TEST_CASE("rogosinski_E: extremal tail term and the m -> infinity limit") {
    const WeightSequence geo = WeightSequence::geometric();
    const TruncatedSeries psi = sized(FunctionSpec{PsiSpec{0.5}}, 0.6);
    const double r = 0.4;
    for (int m : {1, 2, 3}) {
        const double rm = std::pow(r, m);
        const double extra = std::pow(2.0 * 0.5 * rm / (1.0 - rm), 2.0);
        const double want = bohr_power(psi, geo, 1.0, r) + extra;
        CHECK(rogosinski_E(psi, geo, 1.0, 2.0, m, r, 256) ==
              doctest::Approx(want).epsilon(1e-9));
    }
    CHECK(rogosinski_E(psi, geo, 1.0, 2.0, 60, r, 64) ==
          doctest::Approx(bohr_power(psi, geo, 1.0, r)).epsilon(1e-12));
    CHECK(rogosinski_E(psi, geo, 1.0, 1.0, 1, 0.0, 16) ==
          doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("d_lambda: trivial cases and monotonicity") {
    const TruncatedSeries psi = sized(FunctionSpec{PsiSpec{0.47431}}, 0.3);
    CHECK(d_lambda(psi, 0.0, 0.24683) <= 1.0);

    const TruncatedSeries c = scale(realize(FunctionSpec{MonomialSpec{0}}), {0.7, 0.0}, 4);
    CHECK(d_lambda(c, 3.0, 0.5) == doctest::Approx(0.7));

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const TruncatedSeries s = sample_class(SampleClass::P, seed, 1 + static_cast<int>(seed % 8));
        double prev = -1.0;
        for (int i = 1; i <= 20; ++i) {
            const double v = d_lambda(s, 0.5, 0.03 * i);
            CHECK(v >= prev);
            prev = v;
        }
        double prev_lam = -1.0;
        for (double lam : {0.0, 0.3, 0.8, 2.0}) {
            const double v = d_lambda(s, lam, 0.3);
            CHECK(v >= prev_lam);
            prev_lam = v;
        }
    }
}

TEST_CASE("lemma2: the closed-form A(r) of the extremal family") {
    for (double a : {0.3, 0.7}) {
        for (int p : {1, 2, 3}) {
            const TruncatedSeries f =
                sized(FunctionSpec{LacunaryMobiusSpec{a, p, 0, +1}}, 0.75);
            for (double r : {0.2, 0.5, 0.7}) {
                const double x = std::pow(r, 2 * p);
                CHECK(lemma2_A(f, p, 0, r) ==
                      doctest::Approx((1.0 - a * a) * x / (1.0 - x)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("lemma2_lhs: direct-summation oracle for f = z") {
    const TruncatedSeries z = realize(FunctionSpec{MonomialSpec{1}});
    const double r = 0.3;
    // A(r) = (1/(1+0) + r^2/(1-r^2)) |a_1|^2 r^2
    const double A = (1.0 + 0.09 / 0.91) * 0.09;
    CHECK(lemma2_lhs(z, 1, 0, r, 64) == doctest::Approx(0.3 + A).epsilon(1e-12));
    CHECK(lemma2_lhs(z, 1, 0, 0.0, 16) == doctest::Approx(0.0));

    const TruncatedSeries c = scale(realize(FunctionSpec{MonomialSpec{0}}), {0.4, 0.0}, 2);
    CHECK(lemma2_lhs(c, 2, 0, 0.0, 16) == doctest::Approx(0.4));

    // off-lattice support is rejected
    const TruncatedSeries phi = sized(FunctionSpec{PhiSpec{0.5}}, 0.4);
    CHECK_THROWS_AS((void)lemma2_lhs(phi, 2, 1, 0.3, 16), SupportViolation);
}

TEST_CASE("lemma4_sides: sharp function, single coefficient, additivity") {
    const WeightSequence geo = WeightSequence::geometric();
    for (double a : {0.2, 0.6}) {
        for (const auto& [p, m] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 3}}) {
            const TruncatedSeries f =
                sized(FunctionSpec{LacunaryMobiusSpec{a, p, m, -1}}, 0.8);
            for (double r : {0.3, 0.6}) {
                const Lemma4Sides sides = lemma4_sides(f, geo, p, m, r);
                const double budget = tail_error(f, r) / (1.0 - r) + 1e-10;
                CHECK(std::abs(sides.lhs41 - sides.rhs41) <= budget);
                CHECK(std::abs(sides.lhs42 - sides.rhs42) <= budget);
                CHECK(std::abs(sides.lhs44 - sides.rhs44) <= budget);
            }
        }
    }

    // only a_m nonzero: lhs41 reduces to |a_m| zeta_0(r^p)
    const TruncatedSeries zm = scale(realize(FunctionSpec{MonomialSpec{1}}), {0.8, 0.0}, 1);
    const Lemma4Sides only = lemma4_sides(zm, geo, 2, 1, 0.5);
    CHECK(only.lhs41 == doctest::Approx(0.8));
    CHECK(only.lhs42 == doctest::Approx(0.8 * 0.8 * phi_parity(geo, 1, Parity::odd, 0.25)));
    CHECK(only.lhs44 == doctest::Approx(0.0));

    // additive identity: lhs41 + lhs42 - |a_m| zeta0 - |a_m|^2 sum zeta_{2k+1} = lhs44
    oracle::Rng rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = 1 + rng.uint_below(3);
        const int m = rng.uint_below(p + 1);
        const TruncatedSeries g = sample_class(SampleClass::B, 9000 + trial, 1 + trial % 8);
        const TruncatedSeries f = compose_lacunary(g, p, m);
        const double r = rng.in(0.05, 0.85);
        const double s = std::pow(r, p);
        const Lemma4Sides sides = lemma4_sides(f, geo, p, m, r);
        const double b0 = std::abs(f.coeff(m));
        const double lhs = sides.lhs41 + sides.lhs42 - b0 * zeta(geo, 0, s) -
                           b0 * b0 * phi_parity(geo, 1, Parity::odd, s);
        CHECK(lhs == doctest::Approx(sides.lhs44).epsilon(1e-12));
    }
}

TEST_CASE("alt_refined: the z^{p+m} displays of both parity cases") {
    const WeightSequence plain = WeightSequence::plain_monomial(128);
    {
        // case I: p odd (plain monomials), f = z^{p+m}
        const int p = 1, m = 0;
        const TruncatedSeries f = realize(FunctionSpec{MonomialSpec{p + m}});
        for (double r : {0.3, 0.6}) {
            const AltRefined alt = alt_refined(f, plain, p, m, r);
            CHECK(alt.case_I);
            const double want = zeta(plain, m, r) * phi_parity(plain, 1, Parity::odd, r);
            CHECK(std::abs(alt.C_star) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    {
        // case II: p even, f = z^{p+m}
        const int p = 2, m = 0;
        const TruncatedSeries f = realize(FunctionSpec{MonomialSpec{p + m}});
        for (double r : {0.3, 0.6}) {
            const AltRefined alt = alt_refined(f, plain, p, m, r);
            CHECK_FALSE(alt.case_I);
            const double want = zeta(plain, m, r) * phi(plain, 1, r * r);
            CHECK(std::abs(alt.D_star) == doctest::Approx(want).epsilon(1e-12));
        }
        const AltRefined at0 = alt_refined(f, plain, p, m, 0.0);
        CHECK(at0.A_star == 0.0);
        CHECK(at0.B_star == 0.0);
        CHECK(at0.D_star == 0.0);
    }
    // mixed parities: tau = (0, 1, 3, 4) has even and odd steps in one class
    const WeightSequence mixed =
        WeightSequence::monomial({{1.0, 0}, {1.0, 1}, {0.5, 3}, {0.25, 4}});
    const TruncatedSeries f = realize(FunctionSpec{MonomialSpec{1}});
    CHECK_THROWS_AS((void)alt_refined(f, mixed, 1, 0, 0.3), ParityError);
}

TEST_CASE("parity dispatch over random monomial tables") {
    oracle::Rng rng(4242);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<MonomialEntry> t{{1.0, 0}};
        long tau = 0;
        for (int n = 1; n < 12; ++n) {
            tau += 1 + rng.uint_below(3);
            t.push_back({rng.in(0.0, 2.0), tau});
        }
        const WeightSequence w = WeightSequence::monomial(t);
        const int p = 1 + rng.uint_below(4);
        const int m = rng.uint_below(6);
        const int n = rng.uint_below(12);
        const long deg = t[static_cast<std::size_t>(m)].tau + p * t[static_cast<std::size_t>(n)].tau;
        CHECK((degree_parity(w, p, m, n) == Parity::even) == (deg % 2 == 0));
    }
}

TEST_CASE("theorem6_lhs: fixed-term sharpness value and the trivial case") {
    // f = z^{2p+m} at the root of r^{2p} + r^{p+m} - 1 gives exactly 1
    for (const auto& [p, m] : std::vector<std::pair<int, int>>{{1, 0}, {3, 2}}) {
        const TruncatedSeries f = realize(FunctionSpec{MonomialSpec{2 * p + m}});
        const double R = oracle::bisect(
            [p = p, m = m](double r) { return std::pow(r, 2 * p) + std::pow(r, p + m) - 1.0; },
            0.01, 0.999);
        CHECK(theorem6_lhs(f, p, m, R, 64, Theorem6Variant::fixed_term) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
    const TruncatedSeries c = scale(realize(FunctionSpec{MonomialSpec{0}}), {0.6, 0.0}, 2);
    CHECK(theorem6_lhs(c, 1, 0, 0.3, 64, Theorem6Variant::abs_f) == doctest::Approx(0.6));
    CHECK_THROWS_AS((void)theorem6_E(c, 2, 0, 0.3), std::domain_error);  // even p
    CHECK_THROWS_AS((void)theorem6_E(c, 1, 1, 0.3), std::domain_error);  // odd m
}

TEST_CASE("alternating refinement vs the plain alternating bound") {
    // |x + t| >= |x| for t >= 0 exactly when x >= -t/2, so the refined form
    // dominates wherever the inner sum clears that threshold and reverses
    // strictly below it
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const TruncatedSeries s = sample_class(SampleClass::B, seed, 1 + static_cast<int>(seed % 8));
        const double r = 0.35;
        const SeriesStats st = series_stats(s, r);
        const CircleRange c = circle_abs_range(s, r, 64);
        const double fac = 1.0 / (1.0 + std::abs(s.coeff(0))) + r * r / (1.0 - r * r);
        const double refined = fac * st.norm0_sq;
        for (double v : {c.min_abs, c.max_abs}) {
            const double inner = v + st.A_f0;
            const double plain = std::abs(inner);
            const double with_term = std::abs(inner + refined);
            if (inner >= -0.5 * refined + 1e-12) CHECK(with_term + 1e-12 >= plain);
            if (inner < -0.5 * refined - 1e-12) CHECK(with_term < plain);
        }
    }
}

TEST_CASE("Lemma F bound on the sampled Re f < 1 corpus") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const TruncatedSeries s =
            sample_class(SampleClass::P, seed, 1 + static_cast<int>(seed % 8));
        const double a0 = s.coeff(0).real();
        double worst = 0.0;
        for (std::size_t n = 1; n <= s.order(); ++n)
            worst = std::max(worst, std::abs(s.coeff(n)));
        CHECK(worst <= 2.0 * (1.0 - a0) + 1e-12);
    }
}
