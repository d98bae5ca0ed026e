// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file exponent_law.cc
#include "sbmre/exponent_law.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "sbmre/errors.hpp"
#include "sbmre/rng.hpp"

namespace sbmre
{
namespace
{
template<class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};

void require(bool ok, std::string const& msg)
{
    if (!ok)
        throw ParameterError(msg);
}

bool finite_positive(double v)
{
    return std::isfinite(v) && v > 0;
}

std::map<std::string, double, std::less<>>
parse_fields(std::string_view body, std::string_view spec)
{
    std::map<std::string, double, std::less<>> out;
    while (!body.empty())
    {
        auto const comma = body.find(',');
        auto item = body.substr(0, comma);
        body = comma == std::string_view::npos ? std::string_view{}
                                               : body.substr(comma + 1);
        auto const eq = item.find('=');
        require(eq != std::string_view::npos,
                "law spec '" + std::string(spec) + "': expected key=value, got '"
                    + std::string(item) + "'");
        std::string key(item.substr(0, eq));
        auto value = item.substr(eq + 1);
        double v = 0;
        auto [ptr, ec] = std::from_chars(value.data(),
                                         value.data() + value.size(), v);
        require(ec == std::errc{} && ptr == value.data() + value.size(),
                "law spec '" + std::string(spec) + "': bad number for '" + key
                    + "'");
        require(out.emplace(key, v).second,
                "law spec '" + std::string(spec) + "': duplicate key '" + key
                    + "'");
    }
    return out;
}

double take(std::map<std::string, double, std::less<>>& fields,
            std::string_view key, std::string_view spec)
{
    auto it = fields.find(key);
    require(it != fields.end(), "law spec '" + std::string(spec)
                                    + "': missing '" + std::string(key) + "'");
    double v = it->second;
    fields.erase(it);
    return v;
}

// Integral of g(a1 + (a2-a1) u) u^(c-1) (1-u)^(d-1) over u in [0, 1/2],
// with the singular factor absorbed by u = w^(1/c) when c < 1.
double beta_half(std::function<double(double)> const& g_of_u, double c,
                 double d, bool mirrored, double rel_tol)
{
    QuadratureSpec spec;
    spec.rel_tol = rel_tol;
    spec.abs_tol = 0;
    auto at = [&](double u) { return mirrored ? g_of_u(1 - u) : g_of_u(u); };
    if (c < 1)
    {
        double const wmax = std::pow(0.5, c);
        auto f = [&](double w) {
            double const u = std::pow(w, 1 / c);
            return at(u) * std::pow(1 - u, d - 1);
        };
        return integrate(f, 0, wmax, spec) / c;
    }
    auto f = [&](double u) {
        return at(u) * std::pow(u, c - 1) * std::pow(1 - u, d - 1);
    };
    return integrate(f, 0, 0.5, spec);
}

}  // namespace

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

ExponentLaw validate(LawParams params, std::optional<double> k_bound)
{
    double const top = std::visit(
        Overloaded{[](Degenerate const& d) { return d.alpha; },
                   [](TwoPoint const& t) { return t.a2; },
                   [](Beta const& b) { return b.a2; }},
        params);
    double const k = k_bound.value_or(top + 1);
    require(finite_positive(k), "k_bound must be positive");

    std::visit(
        Overloaded{
            [&](Degenerate const& d) {
                require(finite_positive(d.alpha),
                        "degenerate: alpha must be positive");
                require(d.alpha < k, "degenerate: alpha must be below k_bound");
            },
            [&](TwoPoint const& t) {
                require(finite_positive(t.a1), "twopoint: a1 must be positive");
                require(t.a1 < t.a2, "twopoint: require a1 < a2");
                require(t.a2 < k, "twopoint: a2 must be below k_bound");
                require(t.p > 0 && t.p < 1, "twopoint: p must lie in (0,1)");
            },
            [&](Beta const& b) {
                require(finite_positive(b.a1), "beta: a1 must be positive");
                require(b.a1 < b.a2, "beta: require a1 < a2");
                require(b.a2 < k, "beta: a2 must be below k_bound");
                require(finite_positive(b.gamma), "beta: gamma must be positive");
                require(finite_positive(b.beta), "beta: beta must be positive");
            }},
        params);
    return ExponentLaw(params, k);
}

double ExponentLaw::min_exponent() const
{
    return std::visit(Overloaded{[](Degenerate const& d) { return d.alpha; },
                                 [](TwoPoint const& t) { return t.a1; },
                                 [](Beta const& b) { return b.a1; }},
                      params_);
}

double ExponentLaw::max_exponent() const
{
    return std::visit(Overloaded{[](Degenerate const& d) { return d.alpha; },
                                 [](TwoPoint const& t) { return t.a2; },
                                 [](Beta const& b) { return b.a2; }},
                      params_);
}

bool ExponentLaw::is_degenerate() const
{
    return std::holds_alternative<Degenerate>(params_);
}

std::string ExponentLaw::spec() const
{
    std::string s = std::visit(
        Overloaded{[](Degenerate const& d) {
                       return "degenerate:alpha=" + format_double(d.alpha);
                   },
                   [](TwoPoint const& t) {
                       return "twopoint:a1=" + format_double(t.a1)
                              + ",a2=" + format_double(t.a2)
                              + ",p=" + format_double(t.p);
                   },
                   [](Beta const& b) {
                       return "beta:a1=" + format_double(b.a1)
                              + ",a2=" + format_double(b.a2)
                              + ",gamma=" + format_double(b.gamma)
                              + ",beta=" + format_double(b.beta);
                   }},
        params_);
    if (k_bound_ != max_exponent() + 1)
    {
        s += ",k=" + format_double(k_bound_);
    }
    return s;
}

ExponentLaw parse_law(std::string_view spec)
{
    auto const colon = spec.find(':');
    require(colon != std::string_view::npos,
            "law spec '" + std::string(spec) + "': expected kind:key=value,...");
    auto kind = spec.substr(0, colon);
    auto fields = parse_fields(spec.substr(colon + 1), spec);
    std::optional<double> k;
    if (auto it = fields.find("k"); it != fields.end())
    {
        k = it->second;
        fields.erase(it);
    }
    LawParams params;
    if (kind == "degenerate")
    {
        params = Degenerate{take(fields, "alpha", spec)};
    }
    else if (kind == "twopoint")
    {
        double a1 = take(fields, "a1", spec);
        double a2 = take(fields, "a2", spec);
        params = TwoPoint{a1, a2, take(fields, "p", spec)};
    }
    else if (kind == "beta")
    {
        double a1 = take(fields, "a1", spec);
        double a2 = take(fields, "a2", spec);
        double g = take(fields, "gamma", spec);
        params = Beta{a1, a2, g, take(fields, "beta", spec)};
    }
    else
    {
        throw ParameterError("law spec '" + std::string(spec)
                             + "': unknown kind (degenerate, twopoint, beta)");
    }
    require(fields.empty(), "law spec '" + std::string(spec)
                                + "': unknown key '"
                                + (fields.empty() ? "" : fields.begin()->first)
                                + "'");
    return validate(params, k);
}

double mgf(ExponentLaw const& law, double s)
{
    return std::visit(
        Overloaded{
            [&](Degenerate const& d) { return std::exp(d.alpha * s); },
            [&](TwoPoint const& t) {
                // Written so that s = 0 gives exactly 1
                double const e2 = std::exp(t.a2 * s);
                return e2 + t.p * (std::exp(t.a1 * s) - e2);
            },
            [&](Beta const& b) {
                return std::exp(b.a1 * s)
                       * kummer_1f1(b.gamma, b.gamma + b.beta, s * (b.a2 - b.a1));
            }},
        law.params());
}

double mean_power(ExponentLaw const& law, double t)
{
    if (!(t >= 0))
    {
        throw DomainError("mean_power: t must be nonnegative");
    }
    if (t == 0)
    {
        return 0;
    }
    return mgf(law, std::log(t));
}

double expect(ExponentLaw const& law, std::function<double(double)> const& g,
              ExpectOptions const& opts)
{
    return std::visit(
        Overloaded{
            [&](Degenerate const& d) { return g(d.alpha); },
            [&](TwoPoint const& t) {
                return t.p * g(t.a1) + (1 - t.p) * g(t.a2);
            },
            [&](Beta const& b) {
                double const width = b.a2 - b.a1;
                std::function<double(double)> g_of_u = [&](double u) {
                    return g(b.a1 + width * u);
                };
                double const lower
                    = beta_half(g_of_u, b.gamma, b.beta, false, opts.rel_tol);
                double const upper
                    = beta_half(g_of_u, b.beta, b.gamma, true, opts.rel_tol);
                return (lower + upper) / beta_fn(b.gamma, b.beta);
            }},
        law.params());
}

double sample(ExponentLaw const& law, RngStream& stream)
{
    return std::visit(
        Overloaded{[&](Degenerate const& d) { return d.alpha; },
                   [&](TwoPoint const& t) {
                       return stream.uniform() < t.p ? t.a1 : t.a2;
                   },
                   [&](Beta const& b) {
                       return b.a1
                              + (b.a2 - b.a1) * stream.beta(b.gamma, b.beta);
                   }},
        law.params());
}

}  // namespace sbmre
