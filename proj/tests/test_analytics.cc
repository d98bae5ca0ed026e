// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file test_analytics.cc
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sbmre/analytics.hpp"
#include "sbmre/errors.hpp"

using namespace sbmre;
using doctest::Approx;

namespace
{
double const kInvSqrt2Pi = 1 / std::sqrt(2 * std::numbers::pi);
}

TEST_CASE("pdf")
{
    for (double a : {0.3, 1.0, 1.8})
        CHECK(pdf(validate(Degenerate{a}), 0, 1) == Approx(kInvSqrt2Pi).epsilon(1e-15));
    double const want = 0.5 / std::sqrt(2 * std::numbers::pi * 2)
                        + 0.5 / std::sqrt(2 * std::numbers::pi * 8);
    CHECK(pdf(validate(TwoPoint{0.5, 1.5, 0.5}), 0, 4) == Approx(want).epsilon(1e-15));

    // Beta mixture integrates to one in x
    auto law = validate(Beta{0.5, 1.5, 0.3, 0.7});
    double s = 0;
    double const h = 0.01;
    for (int i = -3000; i <= 3000; ++i)
        s += pdf(law, i * h, 2) * h;
    CHECK(s == Approx(1).epsilon(1e-8));
    CHECK_THROWS_AS(pdf(law, 0, 0), DomainError);
}

TEST_CASE("abs_moment")
{
    CHECK(abs_moment_constant(2) == Approx(1).epsilon(1e-15));
    CHECK(abs_moment_constant(4) == Approx(3).epsilon(1e-14));
    for (auto const& law : {validate(Degenerate{0.6}), validate(TwoPoint{0.5, 1.5, 0.5}),
                            validate(Beta{0.5, 1.5, 0.3, 0.7})})
    {
        for (double t : {0.1, 1.0, 7.0})
            CHECK(abs_moment(law, 2, t) == Approx(mean_power(law, t)).epsilon(1e-12));
    }
    CHECK(abs_moment(validate(Degenerate{1}), 1, 1)
          == Approx(std::sqrt(2 / std::numbers::pi)).epsilon(1e-15));
    for (double a : {0.5, 1.3})
    {
        for (double t : {0.2, 3.0})
        {
            CHECK(abs_moment(validate(Degenerate{a}), 4, t)
                  == Approx(3 * std::pow(t, 2 * a)).epsilon(1e-14));
        }
    }
}

TEST_CASE("autocovariance")
{
    auto tp = validate(TwoPoint{0.5, 1.5, 0.5});
    CHECK(autocovariance(tp, 3, 3) == Approx(second_moment(tp, 3)));
    CHECK(autocovariance(validate(Degenerate{0.7}), 2, 3) == Approx(std::pow(2, 0.7)));
    CHECK(autocovariance(tp, 4, 9) == Approx(5.0).epsilon(1e-14));
    CHECK(autocovariance(tp, 9, 4) == Approx(5.0).epsilon(1e-14));
}

TEST_CASE("etamsd")
{
    for (double tau : {1e-4, 0.3, 2.0, 9.9})
        CHECK(etamsd(validate(Degenerate{1}), tau, 10) == Approx(tau).epsilon(1e-13));

    auto tp = validate(TwoPoint{0.5, 1.5, 0.3});
    CHECK(etamsd(tp, 0.7, 10)
          == Approx(0.3 * sbm::etamsd(0.5, 0.7, 10) + 0.7 * sbm::etamsd(1.5, 0.7, 10))
                 .epsilon(1e-14));

    // Defining time integral, trapezoid on 1e6 panels with the moment-generating
    // route for E[(t+tau)^A - t^A]
    auto law = validate(Beta{0.5, 1.5, 0.5, 0.5});
    double const tau = 1, T = 10, L = T - tau;
    int const n = 1000000;
    double const h = L / n;
    auto g = [&](double t) { return mean_power(law, t + tau) - mean_power(law, t); };
    double s = 0.5 * (g(0) + g(L));
    for (int i = 1; i < n; ++i)
        s += g(i * h);
    s *= h / L;
    CHECK(etamsd(law, tau, T) == Approx(s).epsilon(1e-6));

    CHECK_THROWS_AS(etamsd(law, 10, 10), DomainError);
    CHECK_THROWS_AS(etamsd(law, 0, 10), DomainError);
}

TEST_CASE("tamsd variance against an independent double-integral oracle")
{
    // 30-digit mpmath evaluation of 4/L^2 int int ((t1+tau)^a - s^a)^2, tau = 1
    struct Row
    {
        double a, T, v;
    };
    for (auto r : {Row{0.5, 1.5, 0.546654443970081330648574550014},
                   Row{0.5, 3, 0.117821872722308130292904681142},
                   Row{1.0, 1.5, 1.41666666666666666666666666667},
                   Row{1.0, 3, 0.583333333333333333333333333333},
                   Row{1.5, 1.5, 2.31586117165980348554132856306},
                   Row{1.5, 3, 1.9548525838779139129705806186}})
    {
        CHECK(sbm::tamsd_variance(r.a, 1, r.T) == Approx(r.v).epsilon(1e-11));
    }
    // Brownian motion, tau = 1 <= L: the inner integral is 1/3 for t1 < L - 1
    // and (1 - (t1 + 1 - L)^3) / 3 after that, so V = 4/L^2 [(L - 1)/3 + 1/4]
    for (double T : {2.0, 5.0, 40.0})
    {
        double const L = T - 1;
        double const bm = 4 / (L * L) * ((L - 1) / 3 + 0.25);
        CHECK(sbm::tamsd_variance(1, 1, T) == Approx(bm).epsilon(1e-11));
    }
}

TEST_CASE("closed-form bracket agrees with the covariance integral")
{
    for (double a : {0.3, 0.5, 1.0, 1.5})
    {
        for (double r : {2.0, 2.5, 4.0, 10.0, 50.0})
        {
            CHECK(sbm::tamsd_variance_bracket(a, 1, r)
                  == Approx(sbm::tamsd_variance(a, 1, r)).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(sbm::tamsd_variance_bracket(0.5, 1, 1.5), DomainError);
}

TEST_CASE("eb decomposition")
{
    auto law = validate(TwoPoint{0.3, 0.7, 0.4});
    double const tau = 2, T = 50;
    auto r = eb(law, tau, T);
    double const m1 = sbm::etamsd(0.3, tau, T), m2 = sbm::etamsd(0.7, tau, T);
    double const v1 = sbm::tamsd_variance(0.3, tau, T);
    double const v2 = sbm::tamsd_variance(0.7, tau, T);
    double const mean = 0.4 * m1 + 0.6 * m2;
    double const within = 0.4 * v1 + 0.6 * v2;
    double const between = 0.4 * 0.6 * (m1 - m2) * (m1 - m2);
    CHECK(r.within == Approx(within).epsilon(1e-12));
    CHECK(r.between == Approx(between).epsilon(1e-12));
    CHECK(r.numerator == Approx(within + between).epsilon(1e-12));
    CHECK(r.denominator == Approx(mean * mean).epsilon(1e-12));
    CHECK(r.eb == Approx((within + between) / (mean * mean)).epsilon(1e-12));

    auto deg = eb(validate(Degenerate{0.8}), tau, T);
    CHECK(deg.between == 0);
    CHECK(deg.eb == Approx(sbm::eb(0.8, tau, T)).epsilon(1e-12));

    auto lim = eb(validate(TwoPoint{0.3, 0.7, 0.5}), 1, 1e5);
    CHECK(std::abs(lim.eb - 1) < 0.10);

    for (auto const& l : {validate(Beta{0.5, 1.5, 0.3, 0.7}), validate(TwoPoint{0.5, 1.5, 0.5})})
    {
        auto near = eb(l, 0.99 * 10, 10);
        CHECK(near.denominator > 0);
        CHECK(std::isfinite(near.eb));
        CHECK(near.eb > 0);
    }
}

TEST_CASE("hitting density")
{
    auto lev = validate(Degenerate{1});
    CHECK(hitting_pdf(lev, 1, 1) == Approx(std::exp(-0.5) * kInvSqrt2Pi).epsilon(1e-15));
    CHECK(hitting_survival(lev, 1, 0) == 1);
    for (auto const& law : {validate(Degenerate{0.5}), validate(TwoPoint{0.5, 1.5, 0.5}),
                            validate(Beta{0.5, 1.5, 0.3, 0.7})})
    {
        auto n = hitting_normalization(law, 1);
        CHECK(std::abs(n.total() - 1) < 1e-6);
        CHECK(n.tail_bound > 0);
        // survival is one minus the integrated density
        for (double t : {3.0, 200.0, 1e4})
        {
            auto part = hitting_normalization(law, 1, t);
            CHECK(part.integral == Approx(1 - hitting_survival(law, 1, t)).epsilon(1e-8));
        }
    }
    CHECK_THROWS_AS(hitting_pdf(lev, 0, 1), DomainError);
}
