// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file process.cc
#include "sbmre/process.hpp"

#include <cmath>

#include "sbmre/errors.hpp"
#include "sbmre/parallel.hpp"

namespace sbmre
{
namespace
{
// Grid logarithms shared by all paths: var_k = t_k^a expm1(a log1p(dt/t_k))
class ClockTable
{
  public:
    explicit ClockTable(TimeGrid const& grid)
        : log_t_(grid.size()), log_ratio_(grid.size())
    {
        auto const t = grid.times();
        for (std::size_t k = 0; k + 1 < t.size(); ++k)
        {
            log_t_[k + 1] = std::log(t[k + 1]);
            log_ratio_[k] = t[k] == 0 ? 0 : std::log1p((t[k + 1] - t[k]) / t[k]);
        }
    }

    std::size_t steps() const { return log_t_.size() - 1; }

    double variance(std::size_t k, double a) const
    {
        if (k == 0)
            return std::exp(a * log_t_[1]);
        return std::exp(a * log_t_[k]) * std::expm1(a * log_ratio_[k]);
    }

  private:
    std::vector<double> log_t_;
    std::vector<double> log_ratio_;
};

Trajectory
simulate_with(ClockTable const& clock, double a, GridPtr grid, RngStream& stream)
{
    Trajectory traj;
    traj.exponent = a;
    traj.x.resize(grid->size());
    double x = 0;
    for (std::size_t k = 0; k < clock.steps(); ++k)
    {
        x += std::sqrt(clock.variance(k, a)) * stream.normal();
        traj.x[k + 1] = x;
    }
    traj.grid = std::move(grid);
    return traj;
}
}  // namespace

std::vector<double> clock_increments(TimeGrid const& grid, double exponent)
{
    ClockTable const clock(grid);
    std::vector<double> v(clock.steps());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = clock.variance(k, exponent);
    return v;
}

Trajectory simulate_sbm(double alpha, GridPtr grid, RngStream& stream)
{
    if (!(alpha > 0))
    {
        throw ParameterError("simulate_sbm: alpha must be positive");
    }
    ClockTable const clock(*grid);
    return simulate_with(clock, alpha, std::move(grid), stream);
}

Trajectory
simulate_sbmre(ExponentLaw const& law, GridPtr grid, RngStream& stream)
{
    double const a = sample(law, stream);
    return simulate_sbm(a, std::move(grid), stream);
}

Ensemble simulate_ensemble(ExponentLaw const& law, GridPtr grid,
                           std::size_t n_traj, std::uint64_t base_seed,
                           unsigned threads)
{
    if (n_traj < 1)
    {
        throw ParameterError("simulate_ensemble: n_traj must be >= 1");
    }
    ClockTable const clock(*grid);
    Ensemble ens{law, grid, {}, base_seed};
    ens.trajectories.resize(n_traj);
    parallel_for(n_traj, threads, [&](std::size_t i) {
        RngStream stream(base_seed, i);
        double const a = sample(law, stream);
        ens.trajectories[i] = simulate_with(clock, a, grid, stream);
    });
    return ens;
}

std::vector<double> HittingSample::hit_times() const
{
    std::vector<double> out;
    for (auto const& r : records)
    {
        if (!r.censored)
            out.push_back(r.time);
    }
    return out;
}

std::size_t HittingSample::censored_count() const
{
    std::size_t n = 0;
    for (auto const& r : records)
        n += r.censored;
    return n;
}

HittingSample sample_hitting_times(ExponentLaw const& law, double barrier,
                                   TimeGrid const& grid, std::size_t n_traj,
                                   std::uint64_t base_seed, unsigned threads,
                                   HittingOptions const& options)
{
    if (!(barrier > 0))
    {
        throw ParameterError("sample_hitting_times: barrier must be positive");
    }
    if (n_traj < 1 || grid.size() < 2)
    {
        throw ParameterError(
            "sample_hitting_times: need n_traj >= 1 and a grid with >= 2 "
            "points");
    }
    HittingSample out;
    out.barrier = barrier;
    out.horizon = grid.horizon();
    out.records.resize(n_traj);
    auto const t = grid.times();
    ClockTable const clock(grid);

    parallel_for(n_traj, threads, [&](std::size_t i) {
        RngStream stream(base_seed, i);
        double const a = sample(law, stream);
        HittingTime rec{grid.horizon(), true, a};
        double x = 0;
        for (std::size_t k = 0; k < clock.steps(); ++k)
        {
            double const var = clock.variance(k, a);
            double const next = x + std::sqrt(var) * stream.normal();
            bool hit = next >= barrier;
            if (!hit && options.bridge_correction)
            {
                // P(max of the bridge from x to next exceeds b)
                double const p
                    = std::exp(-2 * (barrier - x) * (barrier - next) / var);
                hit = stream.uniform() < p;
            }
            if (hit)
            {
                rec.time = t[k + 1];
                rec.censored = false;
                break;
            }
            x = next;
        }
        out.records[i] = rec;
    });
    return out;
}

}  // namespace sbmre
