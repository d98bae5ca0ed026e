// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file asymptotics.cc
#include "sbmre/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "sbmre/analytics.hpp"
#include "sbmre/errors.hpp"

namespace sbmre
{
namespace
{
constexpr double kLagRatioLimit = 0.1;

void check_lag(double tau, double T)
{
    if (!(tau > 0) || !(T > tau))
        throw DomainError("require 0 < tau < T");
}

std::string lag_warning(double tau, double T)
{
    if (tau / T >= kLagRatioLimit)
    {
        return "RegimeWarning: tau/T = " + format_double(tau / T)
               + " is not small (asymptotic needs tau/T < 0.1)";
    }
    return {};
}

// Bracket of the alpha = 1/2 branch
double log_branch(double tau, double T)
{
    return std::log(T / tau) + 2 * std::numbers::ln2 - 5.0 / 6;
}
}  // namespace

char const* to_string(Regime r)
{
    switch (r)
    {
        case Regime::short_time:
            return "short_time";
        case Regime::long_time:
            return "long_time";
        case Regime::small_lag_ratio:
            return "small_lag_ratio";
    }
    return "?";
}

char const* to_string(TaylorOrder o)
{
    switch (o)
    {
        case TaylorOrder::leading:
            return "leading";
        case TaylorOrder::taylor3:
            return "taylor3";
        case TaylorOrder::taylor3_printed:
            return "taylor3-printed";
    }
    return "?";
}

void check_two_point(TwoPoint const& law)
{
    if (!(law.a1 > 0) || !(law.a2 > 0))
        throw ParameterError("two-point: exponents must be positive");
    if (!(law.p >= 0 && law.p <= 1))
        throw ParameterError("two-point: p must lie in [0,1]");
}

AsymptoticValue sbm_etamsd_asymp(double alpha, double tau, double T)
{
    check_lag(tau, T);
    return {tau * std::pow(T, alpha - 1), Regime::small_lag_ratio,
            lag_warning(tau, T)};
}

double c_alpha(double alpha)
{
    if (!(alpha > 0 && alpha < 0.5))
        throw DomainError("c_alpha: alpha must lie in (0, 1/2)");
    double const a = alpha;
    double const num = (1 - a) * (2 - a) * beta_fn(a + 2, 1 - 2 * a)
                       - 2 * (a * a + a - 1);
    return num / (2 * (a + 1) * (a + 1) * (a + 1));
}

double c_alpha_fit(double alpha, double lag_ratio)
{
    if (!(alpha > 0 && alpha < 0.5))
        throw DomainError("c_alpha_fit: alpha must lie in (0, 1/2)");
    if (!(lag_ratio > 0 && lag_ratio < 1))
        throw DomainError("c_alpha_fit: lag_ratio must lie in (0, 1)");
    double const T = 1 / lag_ratio;
    return sbm::eb(alpha, 1, T) / std::pow(lag_ratio, 2 * alpha);
}

AsymptoticValue sbm_eb_asymp(double alpha, double tau, double T)
{
    check_lag(tau, T);
    if (!(alpha > 0))
        throw DomainError("sbm_eb_asymp: alpha must be positive");
    double const r = tau / T;
    double v = 0;
    if (alpha < 0.5)
        v = c_alpha(alpha) * std::pow(r, 2 * alpha);
    else if (alpha == 0.5)
        v = r / 12 * log_branch(tau, T);
    else
        v = alpha * alpha / (3 * (2 * alpha - 1)) * r;
    return {v, Regime::small_lag_ratio, lag_warning(tau, T)};
}

AsymptoticValue tp_msd_asymp(TwoPoint const& law, double t, Regime regime)
{
    check_two_point(law);
    if (!(t > 0))
        throw DomainError("tp_msd_asymp: t must be positive");
    AsymptoticValue out;
    out.regime = regime;
    if (regime == Regime::short_time)
    {
        out.value = law.p * std::pow(t, law.a1);
        if (t >= 1)
            out.warning = "RegimeWarning: short_time needs t << 1";
    }
    else if (regime == Regime::long_time)
    {
        out.value = (1 - law.p) * std::pow(t, law.a2);
        if (t <= 1)
            out.warning = "RegimeWarning: long_time needs t >> 1";
    }
    else
    {
        throw DomainError("tp_msd_asymp: regime must be short_time or long_time");
    }
    return out;
}

AsymptoticValue
tp_etamsd_asymp(TwoPoint const& law, double tau, double T, TaylorOrder order)
{
    check_two_point(law);
    check_lag(tau, T);
    auto term = [&](double a) {
        switch (order)
        {
            case TaylorOrder::leading:
                return tau * std::pow(T, a - 1);
            case TaylorOrder::taylor3:
                return tau * std::pow(T, a - 1)
                       + (1 - a / 2) * tau * tau * std::pow(T, a - 2)
                       - std::pow(tau, a + 1) / ((a + 1) * T);
            case TaylorOrder::taylor3_printed:
                return tau * std::pow(T, a - 1)
                       + std::pow(tau, a + 1) / ((a + 1) * T)
                       - a * tau * tau * std::pow(T, a - 2);
        }
        return 0.0;
    };
    return {law.p * term(law.a1) + (1 - law.p) * term(law.a2),
            Regime::small_lag_ratio, lag_warning(tau, T)};
}

AsymptoticValue tp_eb_asymp(TwoPoint const& law, double tau, double T)
{
    check_two_point(law);
    check_lag(tau, T);
    double const a1 = law.a1;
    double const a2 = law.a2;
    double const p = law.p;
    if (a1 == a2)
    {
        throw DomainError("tp_eb_asymp: a1 == a2 is degenerate; use "
                          "sbm_eb_asymp");
    }
    if (a1 > a2)
    {
        throw ParameterError("tp_eb_asymp: require a1 < a2");
    }
    // Per-exponent contribution to E[Var(delta|A)] after division by (tau/T)^2
    auto within = [&](double a, double w) {
        if (a < 0.5)
            return w * c_alpha(a) * std::pow(tau, 2 * a);
        if (a == 0.5)
            return w / 12 * tau * log_branch(tau, T);
        return w * a * a / (3 * (2 * a - 1)) * tau * std::pow(T, 2 * a - 1);
    };
    double const t1 = std::pow(T, a1);
    double const t2 = std::pow(T, a2);
    double const cross = p * (1 - p) * (t1 - t2) * (t1 - t2);
    double const den = (p * t1 + (1 - p) * t2) * (p * t1 + (1 - p) * t2);
    double const num = within(a1, p) + within(a2, 1 - p) + cross;
    return {num / den, Regime::small_lag_ratio, lag_warning(tau, T)};
}

double tp_eb_limit(double p)
{
    if (!(p >= 0 && p <= 1))
        throw DomainError("tp_eb_limit: p must lie in [0,1]");
    if (p == 0 || p == 1)
        return 0;
    return p / (1 - p);
}

AsymptoticValue beta_msd_asymp(Beta const& law, double t, Regime regime)
{
    if (!(t > 0) || t == 1)
        throw DomainError("beta_msd_asymp: t must be positive and != 1");
    double const w = law.a2 - law.a1;
    double const lead = std::exp(ln_gamma(law.gamma + law.beta)
                                 - ln_gamma(law.gamma));
    AsymptoticValue out;
    out.regime = regime;
    if (regime == Regime::short_time)
    {
        if (t > 1)
            throw DomainError("beta_msd_asymp: short_time needs t < 1");
        out.value = lead * std::pow(t, law.a1)
                    / std::pow(w * std::log(1 / t), law.gamma);
    }
    else if (regime == Regime::long_time)
    {
        if (t < 1)
            throw DomainError("beta_msd_asymp: long_time needs t > 1");
        out.value = lead * std::pow(t, law.a2)
                    / std::pow(w * std::log(t), law.beta);
    }
    else
    {
        throw DomainError("beta_msd_asymp: regime must be short_time or "
                          "long_time");
    }
    return out;
}

double hitting_tail_exponent(ExponentLaw const& law)
{
    return -1 - law.min_exponent() / 2;
}

}  // namespace sbmre
