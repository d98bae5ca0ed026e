// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file test_exponent_law.cc
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "sbmre/errors.hpp"
#include "sbmre/exponent_law.hpp"
#include "sbmre/rng.hpp"

using namespace sbmre;
using doctest::Approx;

namespace
{
std::vector<ExponentLaw> sample_laws()
{
    return {validate(Degenerate{0.7}), validate(TwoPoint{0.5, 1.5, 0.5}),
            validate(TwoPoint{0.3, 0.7, 0.1}), validate(Beta{0.5, 1.5, 0.5, 0.5}),
            validate(Beta{0.5, 1.5, 0.3, 0.7}), validate(Beta{0.2, 1.9, 2.0, 5.0})};
}

// Plain 30-term series, independent of the library's stopping rule
double series_1f1(double a, double b, double z)
{
    double term = 1, sum = 1;
    for (int n = 0; n < 30; ++n)
    {
        term *= (a + n) / (b + n) * z / (n + 1);
        sum += term;
    }
    return sum;
}
}  // namespace

TEST_CASE("validate accepts and rejects")
{
    auto law = validate(TwoPoint{0.5, 1.5, 0.5});
    auto const* tp = law.get_if<TwoPoint>();
    REQUIRE(tp);
    CHECK(tp->a1 == 0.5);
    CHECK(tp->a2 == 1.5);
    CHECK(tp->p == 0.5);
    CHECK(law.k_bound() == 2.5);
    CHECK(validate(law).spec() == law.spec());

    CHECK_THROWS_AS(validate(TwoPoint{1.5, 0.5, 0.5}), ParameterError);
    CHECK_THROWS_AS(validate(Beta{0.5, 1.5, 0, 0.5}), ParameterError);
    CHECK_THROWS_AS(validate(Beta{0.5, 1.5, 0.5, -1}), ParameterError);
    CHECK_THROWS_AS(validate(TwoPoint{0.5, 1.5, 0}), ParameterError);
    CHECK_THROWS_AS(validate(TwoPoint{0.5, 1.5, 1}), ParameterError);
    CHECK_THROWS_AS(validate(Degenerate{0}), ParameterError);
    CHECK_THROWS_AS(validate(Degenerate{2}, 1.5), ParameterError);
    CHECK_THROWS_AS(validate(Degenerate{NAN}), ParameterError);
}

TEST_CASE("parse_law and spec round trip")
{
    for (auto const* s : {"degenerate:alpha=0.7", "twopoint:a1=0.5,a2=1.5,p=0.5",
                          "beta:a1=0.5,a2=1.5,gamma=0.3,beta=0.7"})
    {
        CHECK(parse_law(s).spec() == s);
    }
    CHECK(parse_law("degenerate:alpha=0.7,k=3").k_bound() == 3);
    CHECK_THROWS_AS(parse_law("gauss:mu=1"), ParameterError);
    CHECK_THROWS_AS(parse_law("twopoint:a1=0.5,a2=1.5"), ParameterError);
    CHECK_THROWS_AS(parse_law("twopoint:a1=0.5,a2=x,p=0.5"), ParameterError);
    CHECK_THROWS_AS(parse_law("degenerate:alpha=0.7,zeta=1"), ParameterError);
}

TEST_CASE("mgf examples")
{
    for (auto const& law : sample_laws())
        CHECK(std::abs(mgf(law, 0) - 1) <= 1e-12);
    CHECK(mgf(validate(Degenerate{0.7}), 0) == 1);
    CHECK(mgf(validate(TwoPoint{0.5, 1.5, 0.5}), 0) == 1);
    CHECK(mgf(validate(TwoPoint{0.5, 1.5, 0.5}), std::log(4.0))
          == Approx(5.0).epsilon(1e-14));
    CHECK(mgf(validate(Beta{0.5, 1.5, 0.5, 0.5}), 1)
          == Approx(std::exp(0.5) * series_1f1(0.5, 1, 1)).epsilon(1e-13));
}

TEST_CASE("beta mgf matches direct quadrature of the density")
{
    // Confirms the first 1F1 parameter is gamma, not the exponent
    auto law = validate(Beta{0.5, 1.5, 0.3, 0.7});
    for (double s : {-3.0, -0.5, 0.7, 2.0})
    {
        double const direct = expect(law, [s](double a) { return std::exp(s * a); });
        CHECK(mgf(law, s) == Approx(direct).epsilon(1e-8));
    }
}

TEST_CASE("mean_power")
{
    for (auto const& law : sample_laws())
    {
        CHECK(mean_power(law, 1) == Approx(1).epsilon(1e-12));
        CHECK(mean_power(law, 0) == 0);
        for (double t : {1e-3, 0.3, 7.0, 1e5})
        {
            CHECK(mean_power(law, t) == Approx(mgf(law, std::log(t))).epsilon(1e-12));
            double const direct = expect(law, [t](double a) { return std::pow(t, a); });
            CHECK(mean_power(law, t) == Approx(direct).epsilon(1e-8));
        }
    }
    CHECK(mean_power(validate(TwoPoint{0.5, 1.5, 0.5}), 4) == Approx(5.0).epsilon(1e-14));
    CHECK_THROWS_AS(mean_power(validate(Degenerate{1}), -1), DomainError);
}

TEST_CASE("expect examples")
{
    for (auto const& law : sample_laws())
        CHECK(expect(law, [](double) { return 1.0; }) == Approx(1).epsilon(1e-9));
    auto id = [](double a) { return a; };
    CHECK(expect(validate(TwoPoint{0.5, 1.5, 0.5}), id) == Approx(1.0).epsilon(1e-15));
    CHECK(expect(validate(Beta{0.5, 1.5, 1, 1}), id) == Approx(1.0).epsilon(1e-9));
    // Singular density at both ends: mean 0.5 + 0.3 = 0.8
    CHECK(expect(validate(Beta{0.5, 1.5, 0.3, 0.7}), id) == Approx(0.8).epsilon(1e-9));
    CHECK(expect(validate(Degenerate{0.7}), id) == 0.7);
}

TEST_CASE("sample")
{
    RngStream rs(7, 0);
    auto deg = validate(Degenerate{0.7});
    for (int i = 0; i < 10; ++i)
        CHECK(sample(deg, rs) == 0.7);

    auto check_mean = [&](ExponentLaw const& law, double mean) {
        std::size_t const n = 100000;
        double s = 0, s2 = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            double const a = sample(law, rs);
            CHECK(a >= law.min_exponent());
            CHECK(a <= law.max_exponent());
            s += a;
            s2 += a * a;
        }
        double const m = s / n;
        double const se = std::sqrt((s2 / n - m * m) / n);
        CHECK(std::abs(m - mean) < 3 * se);
    };
    check_mean(validate(TwoPoint{0.3, 0.7, 0.5}), 0.5);
    check_mean(validate(Beta{0.5, 1.5, 2, 2}), 1.0);
}

TEST_CASE("empirical mgf of samples")
{
    RngStream rs(99, 1);
    for (auto const& law : sample_laws())
    {
        std::size_t const n = 100000;
        std::vector<double> a(n);
        for (auto& v : a)
            v = sample(law, rs);
        for (double s : {-1.0, 0.5, 1.0})
        {
            double m = 0, m2 = 0;
            for (double v : a)
            {
                double const e = std::exp(s * v);
                m += e;
                m2 += e * e;
            }
            m /= n;
            double const se = std::sqrt(std::max(m2 / n - m * m, 0.0) / n);
            CHECK(std::abs(m - mgf(law, s)) <= 3 * se + 1e-10 * m);
        }
    }
}

TEST_CASE("format_double is shortest round trip")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-7) == "1e-07");
    CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
}
