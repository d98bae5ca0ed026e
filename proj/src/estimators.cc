// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file estimators.cc
#include "sbmre/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sbmre/errors.hpp"
#include "sbmre/parallel.hpp"

namespace sbmre
{
namespace
{
// Step of a uniformly spaced grid, if it is one
std::optional<double> uniform_step(TimeGrid const& grid)
{
    if (grid.kind() == GridKind::linear)
        return grid.step();
    auto const t = grid.times();
    if (t.size() < 2)
        return std::nullopt;
    double const h = t[1] - t[0];
    for (std::size_t k = 1; k + 1 < t.size(); ++k)
    {
        if (std::abs((t[k + 1] - t[k]) - h) > 1e-9 * h)
            return std::nullopt;
    }
    return h;
}

std::size_t grid_index(TimeGrid const& grid, double t, char const* who)
{
    auto idx = grid.index_of(t);
    if (!idx)
    {
        throw DomainError(std::string(who) + ": time " + format_double(t)
                          + " is not on the grid");
    }
    return *idx;
}

double sample_variance(std::span<double const> v, double mean)
{
    double s = 0;
    for (double x : v)
        s += (x - mean) * (x - mean);
    return s / static_cast<double>(v.size() - 1);
}

double variance_ratio(std::span<double const> v)
{
    double m = 0;
    for (double x : v)
        m += x;
    m /= static_cast<double>(v.size());
    return sample_variance(v, m) / (m * m);
}
}  // namespace

MeanSE mean_and_stderr(std::span<double const> values)
{
    if (values.empty())
        throw DomainError("mean_and_stderr: no values");
    double m = 0;
    for (double v : values)
        m += v;
    m /= static_cast<double>(values.size());
    if (values.size() < 2)
        return {m, 0};
    double const var = sample_variance(values, m);
    return {m, std::sqrt(var / static_cast<double>(values.size()))};
}

double tamsd(Trajectory const& traj, double tau)
{
    auto const& grid = *traj.grid;
    auto const h = uniform_step(grid);
    if (!h)
    {
        throw DomainError("tamsd: grid is not uniformly spaced");
    }
    if (!(tau > 0) || tau > grid.horizon() * (1 + 1e-12))
    {
        throw DomainError("tamsd: require 0 < tau <= T");
    }
    double const lag_f = tau / *h;
    double const lag_r = std::round(lag_f);
    if (lag_r < 1 || std::abs(lag_f - lag_r) > 1e-9 * lag_f)
    {
        throw DomainError("tamsd: tau " + format_double(tau)
                          + " is not a multiple of the grid step");
    }
    auto const lag = static_cast<std::size_t>(lag_r);
    std::size_t const n = traj.x.size() - 1;
    if (lag > n)
        throw DomainError("tamsd: tau exceeds the horizon");
    std::size_t const m = n - lag;
    auto const& x = traj.x;
    auto sq = [&](std::size_t k) {
        double const d = x[k + lag] - x[k];
        return d * d;
    };
    if (m == 0)
        return sq(0);
    double s = 0.5 * (sq(0) + sq(m));
    for (std::size_t k = 1; k < m; ++k)
        s += sq(k);
    return s / static_cast<double>(m);
}

CurveSeries ensemble_mean_tamsd(Ensemble const& ens,
                                std::span<double const> taus)
{
    CurveSeries c;
    c.label = "ensemble mean TAMSD";
    std::vector<double> v(ens.size());
    for (double tau : taus)
    {
        for (std::size_t i = 0; i < ens.size(); ++i)
            v[i] = tamsd(ens.trajectories[i], tau);
        auto const ms = mean_and_stderr(v);
        c.points.push_back({tau, ms.mean, ms.std_error});
    }
    return c;
}

CurveSeries ensemble_eb(Ensemble const& ens, std::span<double const> taus,
                        std::size_t resamples, unsigned threads)
{
    std::size_t const n = ens.size();
    if (n < 2)
        throw DomainError("ensemble_eb: need at least two trajectories");
    CurveSeries c;
    c.label = "ensemble EB";
    c.points.resize(taus.size());
    parallel_for(taus.size(), threads, [&](std::size_t j) {
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = tamsd(ens.trajectories[i], taus[j]);
        double const est = variance_ratio(d);

        RngStream rs(ens.base_seed, kBootstrapStreamBase + j);
        std::vector<double> boot(resamples);
        std::vector<double> pick(n);
        for (std::size_t b = 0; b < resamples; ++b)
        {
            for (std::size_t i = 0; i < n; ++i)
            {
                auto k = static_cast<std::size_t>(rs.uniform()
                                                  * static_cast<double>(n));
                pick[i] = d[std::min(k, n - 1)];
            }
            boot[b] = variance_ratio(pick);
        }
        double se = 0;
        if (resamples >= 2)
        {
            double bm = 0;
            for (double x : boot)
                bm += x;
            bm /= static_cast<double>(resamples);
            se = std::sqrt(sample_variance(boot, bm));
        }
        // Identical paths give 0/0 only if all increments vanish
        c.points[j] = {taus[j], std::isnan(est) ? 0.0 : est, se};
    });
    return c;
}

CurveSeries empirical_msd(Ensemble const& ens, std::span<double const> times)
{
    return empirical_abs_moment(ens, 2, times);
}

CurveSeries empirical_abs_moment(Ensemble const& ens, double q,
                                 std::span<double const> times)
{
    if (!(q > 0))
        throw DomainError("empirical_abs_moment: q must be positive");
    CurveSeries c;
    c.label = q == 2 ? "empirical MSD" : "empirical E|X|^" + format_double(q);
    std::vector<double> v(ens.size());
    for (double t : times)
    {
        std::size_t const k = grid_index(*ens.grid, t, "empirical_msd");
        for (std::size_t i = 0; i < ens.size(); ++i)
        {
            double const x = std::abs(ens.trajectories[i].x[k]);
            v[i] = q == 2 ? x * x : std::pow(x, q);
        }
        auto const ms = mean_and_stderr(v);
        c.points.push_back({(*ens.grid)[k], ms.mean, ms.std_error});
    }
    return c;
}

CurveSeries histogram_pdf(std::span<double const> samples, BinSpec const& spec)
{
    if (samples.empty())
        throw DomainError("histogram_pdf: no samples");
    if (spec.bins < 1)
        throw ParameterError("histogram_pdf: need at least one bin");
    auto const [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    double lo = spec.lo.value_or(*mn);
    double hi = spec.hi.value_or(*mx);
    std::size_t bins = spec.bins;
    if (!(hi > lo))
    {
        // Degenerate sample: one unit-width bin centred on the value
        lo -= 0.5;
        hi += 0.5;
        bins = 1;
    }
    double const width = (hi - lo) / static_cast<double>(bins);
    std::vector<std::size_t> counts(bins, 0);
    for (double s : samples)
    {
        if (s < lo || s > hi)
            continue;
        auto k = static_cast<std::size_t>((s - lo) / width);
        counts[std::min(k, bins - 1)]++;
    }
    double const n = static_cast<double>(samples.size());
    CurveSeries c;
    c.label = "histogram density";
    for (std::size_t k = 0; k < bins; ++k)
    {
        double const p = static_cast<double>(counts[k]) / n;
        c.points.push_back({lo + (static_cast<double>(k) + 0.5) * width,
                            p / width, std::sqrt(p * (1 - p) / n) / width});
    }
    return c;
}

CurveSeries quadratic_variation(Trajectory const& traj)
{
    if (traj.x.size() < 2)
        throw DomainError("quadratic_variation: need at least two grid points");
    CurveSeries c;
    c.label = "quadratic variation";
    auto const t = traj.grid->times();
    double qv = 0;
    c.points.push_back({t[0], 0, std::nullopt});
    for (std::size_t k = 1; k < traj.x.size(); ++k)
    {
        double const d = traj.x[k] - traj.x[k - 1];
        qv += d * d;
        c.points.push_back({t[k], qv, std::nullopt});
    }
    return c;
}

StochExpMean stoch_exp_mean(Ensemble const& ens, double lambda, double t)
{
    std::size_t const k = grid_index(*ens.grid, t, "stoch_exp_mean");
    double const tk = (*ens.grid)[k];
    std::vector<double> v(ens.size());
    for (std::size_t i = 0; i < ens.size(); ++i)
    {
        auto const& tr = ens.trajectories[i];
        double const qv = tk == 0 ? 0 : std::pow(tk, tr.exponent);
        v[i] = std::exp(lambda * tr.x[k] - lambda * lambda * qv / 2);
    }
    auto const ms = mean_and_stderr(v);
    StochExpMean out{ms.mean, ms.std_error, {}};
    if (ms.std_error > 0.1 * std::abs(ms.mean))
    {
        out.warning = "VarianceWarning: stderr/mean = "
                      + format_double(ms.std_error / ms.mean) + " > 0.1";
    }
    return out;
}

TailFit hitting_tail_fit(std::span<double const> hit_times,
                         std::size_t censored_count, FitRange const& range,
                         double horizon)
{
    if (!(range.lo > 0) || !(range.hi > range.lo) || !(range.bins_per_decade > 0))
        throw ParameterError("hitting_tail_fit: need 0 < lo < hi and bins > 0");
    double const decades = std::log10(range.hi / range.lo);
    auto const nb = static_cast<std::size_t>(
        std::max(1.0, std::round(decades * range.bins_per_decade)));
    std::vector<double> edges(nb + 1);
    for (std::size_t k = 0; k <= nb; ++k)
    {
        edges[k] = range.lo
                   * std::pow(10.0, decades * static_cast<double>(k)
                                        / static_cast<double>(nb));
    }
    edges[nb] = range.hi;
    std::size_t used_bins = nb;
    if (horizon > 0)
    {
        while (used_bins > 0 && edges[used_bins] > horizon * (1 + 1e-12))
            --used_bins;
    }
    std::vector<std::size_t> counts(used_bins, 0);
    std::size_t in_range = 0;
    for (double t : hit_times)
    {
        if (t < edges[0] || t >= edges[used_bins])
            continue;
        auto it = std::upper_bound(edges.begin(), edges.begin() + used_bins + 1, t);
        auto k = static_cast<std::size_t>(it - edges.begin()) - 1;
        counts[k]++;
        ++in_range;
    }
    if (in_range < 1000)
    {
        throw DomainError("hitting_tail_fit: only " + std::to_string(in_range)
                          + " samples in the fit range (need >= 1000)");
    }
    double const total
        = static_cast<double>(hit_times.size() + censored_count);
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t k = 0; k < used_bins; ++k)
    {
        if (counts[k] == 0)
            continue;
        double const w = edges[k + 1] - edges[k];
        xs.push_back(0.5 * (std::log(edges[k]) + std::log(edges[k + 1])));
        ys.push_back(std::log(static_cast<double>(counts[k]) / (total * w)));
    }
    if (xs.size() < 3)
        throw DomainError("hitting_tail_fit: fewer than three occupied bins");
    double const n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    double const slope = sxy / sxx;
    double rss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        double const r = ys[i] - my - slope * (xs[i] - mx);
        rss += r * r;
    }
    TailFit fit;
    fit.slope = slope;
    fit.std_error = std::sqrt(rss / (n - 2) / sxx);
    fit.samples_in_range = in_range;
    fit.bins_used = xs.size();
    return fit;
}

}  // namespace sbmre
