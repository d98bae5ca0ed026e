// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file time_grid.cc
#include "sbmre/time_grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "sbmre/errors.hpp"
#include "sbmre/exponent_law.hpp"

namespace sbmre
{
namespace
{
void require(bool ok, std::string const& msg)
{
    if (!ok)
        throw ParameterError(msg);
}

double to_double(std::string_view s, std::string_view ctx)
{
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size(),
            "grid spec '" + std::string(ctx) + "': bad number '"
                + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    while (true)
    {
        auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos)
            break;
        s = s.substr(pos + 1);
    }
    return out;
}

std::size_t to_count(double v, std::string_view key, std::string_view ctx)
{
    require(v >= 1 && v == std::floor(v) && v < 1e12,
            "grid spec '" + std::string(ctx) + "': " + std::string(key)
                + " must be a positive integer");
    return static_cast<std::size_t>(v);
}
}  // namespace

TimeGrid::TimeGrid(GridKind kind, std::vector<double> times, double step,
                   std::string spec)
    : kind_(kind), times_(std::move(times)), step_(step), spec_(std::move(spec))
{
}

TimeGrid TimeGrid::linear(double horizon, std::size_t steps)
{
    require(std::isfinite(horizon) && horizon > 0,
            "linear grid: T must be positive");
    require(steps >= 1, "linear grid: N must be >= 1");
    std::vector<double> t(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
    {
        t[k] = horizon * static_cast<double>(k) / static_cast<double>(steps);
    }
    return TimeGrid(GridKind::linear, std::move(t),
                    horizon / static_cast<double>(steps),
                    "linear:T=" + format_double(horizon)
                        + ",N=" + std::to_string(steps));
}

TimeGrid
TimeGrid::logarithmic(double t_min, double horizon, std::size_t points)
{
    require(std::isfinite(t_min) && t_min > 0 && std::isfinite(horizon),
            "log grid: tmin must be positive");
    require(horizon > t_min, "log grid: require tmin < T");
    require(points >= 2, "log grid: N must be >= 2");
    std::vector<double> t(points + 1);
    t[0] = 0;
    double const l0 = std::log(t_min);
    double const l1 = std::log(horizon);
    for (std::size_t k = 0; k < points; ++k)
    {
        double const f = static_cast<double>(k) / static_cast<double>(points - 1);
        t[k + 1] = std::exp(l0 + f * (l1 - l0));
    }
    t[1] = t_min;
    t[points] = horizon;
    return TimeGrid(GridKind::logarithmic, std::move(t), 0,
                    "log:tmin=" + format_double(t_min) + ",T="
                        + format_double(horizon)
                        + ",N=" + std::to_string(points));
}

TimeGrid TimeGrid::per_decade(double t_min, double horizon,
                              std::size_t points_per_decade)
{
    require(t_min > 0 && horizon > t_min && points_per_decade >= 1,
            "ppd grid: require 0 < tmin < T and ppd >= 1");
    double const decades = std::log10(horizon / t_min);
    auto const n = static_cast<std::size_t>(
                       std::ceil(decades * static_cast<double>(points_per_decade)
                                 - 1e-9))
                   + 1;
    return logarithmic(t_min, horizon, std::max<std::size_t>(n, 2));
}

TimeGrid TimeGrid::explicit_times(std::vector<double> times)
{
    require(!times.empty() && times[0] == 0,
            "explicit grid: times must start at 0");
    for (std::size_t i = 1; i < times.size(); ++i)
    {
        require(std::isfinite(times[i]) && times[i] > times[i - 1],
                "explicit grid: times must be strictly increasing");
    }
    std::string spec = "explicit:";
    for (std::size_t i = 0; i < times.size(); ++i)
    {
        spec += (i ? "," : "") + format_double(times[i]);
    }
    return TimeGrid(GridKind::explicit_times, std::move(times), 0,
                    std::move(spec));
}

TimeGrid TimeGrid::parse(std::string_view spec)
{
    auto const colon = spec.find(':');
    require(colon != std::string_view::npos,
            "grid spec '" + std::string(spec) + "': expected kind:...");
    auto kind = spec.substr(0, colon);
    auto body = spec.substr(colon + 1);
    if (kind == "explicit")
    {
        std::vector<double> t;
        for (auto item : split(body, ','))
            t.push_back(to_double(item, spec));
        return explicit_times(std::move(t));
    }
    std::map<std::string, double, std::less<>> f;
    for (auto item : split(body, ','))
    {
        auto eq = item.find('=');
        require(eq != std::string_view::npos,
                "grid spec '" + std::string(spec) + "': expected key=value");
        f[std::string(item.substr(0, eq))] = to_double(item.substr(eq + 1), spec);
    }
    auto get = [&](char const* key) {
        auto it = f.find(key);
        require(it != f.end(), "grid spec '" + std::string(spec)
                                   + "': missing '" + key + "'");
        double v = it->second;
        f.erase(it);
        return v;
    };
    std::optional<TimeGrid> g;
    if (kind == "linear")
    {
        double T = get("T");
        g = linear(T, to_count(get("N"), "N", spec));
    }
    else if (kind == "log")
    {
        double tmin = get("tmin");
        double T = get("T");
        g = logarithmic(tmin, T, to_count(get("N"), "N", spec));
    }
    else if (kind == "ppd")
    {
        double tmin = get("tmin");
        double T = get("T");
        g = per_decade(tmin, T, to_count(get("ppd"), "ppd", spec));
    }
    else
    {
        throw ParameterError("grid spec '" + std::string(spec)
                             + "': unknown kind (linear, log, ppd, explicit)");
    }
    require(f.empty(), "grid spec '" + std::string(spec) + "': unknown key '"
                           + (f.empty() ? "" : f.begin()->first) + "'");
    return *g;
}

double TimeGrid::points_per_decade() const
{
    if (kind_ != GridKind::logarithmic)
        return 0;
    double const decades = std::log10(times_.back() / times_[1]);
    return static_cast<double>(times_.size() - 2) / decades;
}

std::optional<std::size_t> TimeGrid::index_of(double t, double rel_tol) const
{
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    double const tol = rel_tol * std::max(std::abs(t), 1e-300);
    std::optional<std::size_t> best;
    double best_d = tol;
    for (auto c : {it, it == times_.begin() ? it : std::prev(it)})
    {
        if (c == times_.end())
            continue;
        double const d = std::abs(*c - t);
        if (d <= best_d)
        {
            best_d = d;
            best = static_cast<std::size_t>(c - times_.begin());
        }
    }
    return best;
}

std::string TimeGrid::spec() const
{
    return spec_;
}

}  // namespace sbmre
