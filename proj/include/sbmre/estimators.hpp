// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/estimators.hpp
//! Monte Carlo estimators over trajectories and ensembles.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "curve_series.hpp"
#include "process.hpp"

namespace sbmre
{
//! Stream index base for bootstrap resampling (disjoint from trajectories).
inline constexpr std::uint64_t kBootstrapStreamBase = std::uint64_t{1} << 62;

struct MeanSE
{
    double mean = 0;
    double std_error = 0;
};

MeanSE mean_and_stderr(std::span<double const> values);

/*!
 * Time-averaged MSD on a uniform grid, trapezoid-weighted over window starts:
 * delta = [d_0^2/2 + d_1^2 + ... + d_{M-1}^2 + d_M^2/2] / M with M = N - tau/dt.
 * tau must be a multiple of the step; tau == T gives the single window d_0^2.
 */
double tamsd(Trajectory const& traj, double tau);

CurveSeries ensemble_mean_tamsd(Ensemble const& ens,
                                std::span<double const> taus);

//! Var(delta)/E[delta]^2 per lag, with a bootstrap standard error.
CurveSeries ensemble_eb(Ensemble const& ens, std::span<double const> taus,
                        std::size_t resamples = 1000, unsigned threads = 0);

CurveSeries empirical_msd(Ensemble const& ens, std::span<double const> times);

//! E|X(t)|^q per time.
CurveSeries empirical_abs_moment(Ensemble const& ens, double q,
                                 std::span<double const> times);

struct BinSpec
{
    std::optional<double> lo;
    std::optional<double> hi;
    std::size_t bins = 50;
};

CurveSeries histogram_pdf(std::span<double const> samples, BinSpec const& bins);

//! Running sum of squared increments at each grid time.
CurveSeries quadratic_variation(Trajectory const& traj);

struct StochExpMean
{
    double mean = 0;
    double std_error = 0;
    std::string warning;  //!< VarianceWarning when stderr/mean > 0.1
};

//! Mean of exp(lambda x(t) - lambda^2 t^a / 2) with each path's exponent.
StochExpMean stoch_exp_mean(Ensemble const& ens, double lambda, double t);

struct FitRange
{
    double lo = 0;
    double hi = 0;
    double bins_per_decade = 5;
};

struct TailFit
{
    double slope = 0;
    double std_error = 0;
    std::size_t samples_in_range = 0;
    std::size_t bins_used = 0;
};

/*!
 * Least-squares slope of the log empirical density in log-spaced bins.
 *
 * Densities are normalized by hits + censored paths. Only bins whose upper
 * edge is at or below `horizon` are used.
 */
TailFit hitting_tail_fit(std::span<double const> hit_times,
                         std::size_t censored_count, FitRange const& range,
                         double horizon = 0);

}  // namespace sbmre
