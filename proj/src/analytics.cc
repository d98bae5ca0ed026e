// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file analytics.cc
#include "sbmre/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sbmre/detail/gauss_kronrod.hpp"
#include "sbmre/errors.hpp"

namespace sbmre
{
namespace
{
constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;

void check_lag(double tau, double T)
{
    if (!(tau > 0) || !(T > 0) || !std::isfinite(T))
    {
        throw DomainError("require tau > 0 and finite T > 0");
    }
    if (!(tau < T))
    {
        throw DomainError("require tau < T");
    }
}

void check_positive(double v, char const* what)
{
    if (!(v > 0))
        throw DomainError(std::string(what) + " must be positive");
}

QuadratureSpec spec_of(double rel, PanelStrategy s)
{
    QuadratureSpec q;
    q.rel_tol = rel;
    q.abs_tol = 0;
    q.panel_strategy = s;
    return q;
}

// Sum of integrals over consecutive [b_i, b_{i+1}], choosing geometric panels
// where the interval spans many decades.
double piecewise_integral(Integrand const& f, std::vector<double> bp,
                          double rel_tol, PanelStrategy first_strategy)
{
    double total = 0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
    {
        if (!(bp[i] < bp[i + 1]))
            continue;
        PanelStrategy s = i == 0 ? first_strategy : PanelStrategy::uniform;
        if (bp[i] > 0 && bp[i + 1] / bp[i] > 1e3)
            s = PanelStrategy::geometric;
        total += integrate(f, bp[i], bp[i + 1], spec_of(rel_tol, s));
    }
    return total;
}
}  // namespace

namespace sbm
{
double pdf(double alpha, double x, double t)
{
    check_positive(t, "t");
    double const v = std::pow(t, alpha);
    return kInvSqrt2Pi / std::sqrt(v) * std::exp(-x * x / (2 * v));
}

double second_moment(double alpha, double t)
{
    return t == 0 ? 0 : std::pow(t, alpha);
}

double abs_moment(double alpha, double q, double t)
{
    check_positive(q, "q");
    return abs_moment_constant(q) * std::pow(t, q * alpha / 2);
}

double autocovariance(double alpha, double s, double t)
{
    return second_moment(alpha, std::min(s, t));
}

double etamsd(double alpha, double tau, double T)
{
    check_lag(tau, T);
    double const a1 = alpha + 1;
    // T^{a+1} (1 - (1 - tau/T)^{a+1}) - tau^{a+1}
    double const head = -std::pow(T, a1) * std::expm1(a1 * std::log1p(-tau / T));
    return (head - std::pow(tau, a1)) / (a1 * (T - tau));
}

double tamsd_variance(double alpha, double tau, double T)
{
    check_lag(tau, T);
    double const a = alpha;
    double const L = T - tau;

    QuadratureSpec const inner_spec = spec_of(1e-12, PanelStrategy::uniform);
    auto inner = [&](double t1) -> double {
        double const u = std::min(t1 + tau, L);
        if (!(u > t1))
            return 0;
        if (t1 >= tau)
        {
            // s = t1 + tau v; difference t1^a [(1+r)^a - (1+vr)^a], r = tau/t1
            double const r = tau / t1;
            double const c = std::pow(t1, a);
            double const top = std::expm1(a * std::log1p(r));
            auto g = [&](double v) {
                double const d = c * (top - std::expm1(a * std::log1p(v * r)));
                return d * d;
            };
            return tau * detail::gauss_kronrod21(g, 0, (u - t1) / tau).value;
        }
        double const top = std::pow(t1 + tau, a);
        auto g = [&](double s) {
            double const d = top - std::pow(s, a);
            return d * d;
        };
        return integrate(g, t1, u, inner_spec);
    };

    std::vector<double> bp{0};
    if (tau < L)
        bp.push_back(tau);
    if (T - 2 * tau > bp.back() && T - 2 * tau < L)
        bp.push_back(T - 2 * tau);
    bp.push_back(L);
    double const outer
        = piecewise_integral(inner, bp, 1e-10, PanelStrategy::geometric);
    return 4 * outer / (L * L);
}

double tamsd_variance_bracket(double alpha, double tau, double T)
{
    check_lag(tau, T);
    if (2 * tau > T)
        throw DomainError("tamsd_variance_bracket: needs T >= 2 tau");
    double const a = alpha;
    double const r = T / tau;
    double const L = r - 1;
    double const a1 = a + 1;
    double const d = 2 * a + 1;

    auto f = [a](double x) { return std::pow(x, a + 1) * std::pow(1 + x, a); };
    double inner = 0;
    if (L <= 1)
    {
        inner = integrate(f, 0, L, spec_of(1e-13, PanelStrategy::uniform));
    }
    else
    {
        inner = integrate(f, 0, 1, spec_of(1e-13, PanelStrategy::uniform))
                + integrate(f, 1, L, spec_of(1e-13, PanelStrategy::geometric));
    }
    double const bracket
        = std::pow(L, d) / d
          + (3 * a + 1) * std::pow(L, d + 1) / (2 * a1 * a1 * d)
          - 2 * std::pow(r, a1) * std::pow(L, a1) / (a1 * a1)
          + std::pow(r, 2 * a1) / (2 * a1 * d)
          - (2 * a * a + a + 1) / (2 * a1 * a1 * d) + 2 / a1 * inner;
    return 4 * std::pow(tau, 2 * a1) / ((T - tau) * (T - tau)) * bracket;
}

double eb(double alpha, double tau, double T)
{
    double const m = etamsd(alpha, tau, T);
    return tamsd_variance(alpha, tau, T) / (m * m);
}

double hitting_pdf(double alpha, double b, double t)
{
    check_positive(b, "b");
    check_positive(t, "t");
    double const ta = std::pow(t, alpha);
    return alpha * b * kInvSqrt2Pi * std::exp(-b * b / (2 * ta))
           * std::pow(t, -1 - alpha / 2);
}

double hitting_survival(double alpha, double b, double t)
{
    check_positive(b, "b");
    if (t <= 0)
        return 1;
    return std::erf(b / std::sqrt(2 * std::pow(t, alpha)));
}
}  // namespace sbm

double abs_moment_constant(double q)
{
    check_positive(q, "q");
    return std::exp(q / 2 * std::numbers::ln2 + ln_gamma((q + 1) / 2))
           / std::sqrt(std::numbers::pi);
}

double pdf(ExponentLaw const& law, double x, double t)
{
    check_positive(t, "t");
    return expect(law, [&](double a) { return sbm::pdf(a, x, t); });
}

double second_moment(ExponentLaw const& law, double t)
{
    return mean_power(law, t);
}

double abs_moment(ExponentLaw const& law, double q, double t)
{
    check_positive(q, "q");
    check_positive(t, "t");
    // E[t^{qA/2}] = M(q log(t) / 2)
    return abs_moment_constant(q) * mgf(law, q / 2 * std::log(t));
}

double autocovariance(ExponentLaw const& law, double s, double t)
{
    check_positive(s, "s");
    check_positive(t, "t");
    return mean_power(law, std::min(s, t));
}

double etamsd(ExponentLaw const& law, double tau, double T)
{
    check_lag(tau, T);
    if (auto const* d = law.get_if<Degenerate>())
    {
        return sbm::etamsd(d->alpha, tau, T);
    }
    if (auto const* tp = law.get_if<TwoPoint>())
    {
        return tp->p * sbm::etamsd(tp->a1, tau, T)
               + (1 - tp->p) * sbm::etamsd(tp->a2, tau, T);
    }
    double const L = T - tau;
    auto f = [&](double t) {
        return mean_power(law, t + tau) - mean_power(law, t);
    };
    std::vector<double> bp{0};
    if (tau < L)
        bp.push_back(tau);
    bp.push_back(L);
    return piecewise_integral(f, bp, 1e-11, PanelStrategy::geometric) / L;
}

EBReport eb(ExponentLaw const& law, double tau, double T)
{
    check_lag(tau, T);
    EBReport r;
    r.tau = tau;
    r.horizon = T;
    auto m = [&](double a) { return sbm::etamsd(a, tau, T); };
    double const mbar = expect(law, m);
    r.within = expect(law, [&](double a) {
        return sbm::tamsd_variance(a, tau, T);
    });
    r.between = expect(law, [&](double a) {
        double const d = m(a) - mbar;
        return d * d;
    });
    r.numerator = r.within + r.between;
    r.denominator = mbar * mbar;
    r.eb = r.numerator / r.denominator;
    return r;
}

double hitting_pdf(ExponentLaw const& law, double b, double t)
{
    check_positive(b, "b");
    check_positive(t, "t");
    return expect(law, [&](double a) { return sbm::hitting_pdf(a, b, t); });
}

double hitting_survival(ExponentLaw const& law, double b, double t)
{
    check_positive(b, "b");
    return expect(law,
                  [&](double a) { return sbm::hitting_survival(a, b, t); });
}

HittingNormalization
hitting_normalization(ExponentLaw const& law, double b, double t_max)
{
    check_positive(b, "b");
    if (!(t_max > 1))
        throw DomainError("hitting_normalization: t_max must exceed 1");
    auto f = [&](double t) { return hitting_pdf(law, b, t); };
    double const bp1[] = {0, 1};
    double const bp2[] = {1, t_max};
    auto const head
        = integrate_detailed(f, bp1, spec_of(1e-8, PanelStrategy::uniform));
    auto const tail
        = integrate_detailed(f, bp2, spec_of(1e-8, PanelStrategy::geometric));
    HittingNormalization out;
    out.integral = head.value + tail.value;
    out.quadrature_error = head.error + tail.error;
    // int_{t_max}^inf a b/sqrt(2 pi) t^{-1-a/2} dt = 2 b/sqrt(2 pi) t_max^{-a/2}
    out.tail_bound = expect(law, [&](double a) {
        return 2 * b * kInvSqrt2Pi * std::pow(t_max, -a / 2);
    });
    return out;
}

}  // namespace sbmre
