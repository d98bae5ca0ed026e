// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/time_grid.hpp
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbmre
{
enum class GridKind
{
    linear,
    logarithmic,
    explicit_times,
};

//---------------------------------------------------------------------------//
/*!
 * Strictly increasing sampling times starting at 0.
 *
 * Grid spec strings: "linear:T=10,N=1000", "log:tmin=1e-3,T=1e4,N=1400"
 * (N log-spaced points after t=0), "ppd:tmin=1e-3,T=1e4,ppd=200" (points
 * per decade), "explicit:0,0.5,1".
 */
class TimeGrid
{
  public:
    static TimeGrid linear(double horizon, std::size_t steps);
    static TimeGrid logarithmic(double t_min, double horizon, std::size_t points);
    static TimeGrid per_decade(double t_min, double horizon,
                               std::size_t points_per_decade);
    static TimeGrid explicit_times(std::vector<double> times);
    static TimeGrid parse(std::string_view spec);

    std::span<double const> times() const { return times_; }
    double operator[](std::size_t i) const { return times_[i]; }
    std::size_t size() const { return times_.size(); }
    double horizon() const { return times_.back(); }
    GridKind kind() const { return kind_; }
    //! Step of a linear grid (0 otherwise)
    double step() const { return step_; }
    //! Points per decade for logarithmic grids (0 otherwise)
    double points_per_decade() const;

    //! Index of a grid time within rel_tol (relative) of t
    std::optional<std::size_t> index_of(double t, double rel_tol = 1e-9) const;

    //! Canonical spec string (explicit grids list every time)
    std::string spec() const;

  private:
    TimeGrid(GridKind kind, std::vector<double> times, double step,
             std::string spec);
    GridKind kind_;
    std::vector<double> times_;
    double step_ = 0;
    std::string spec_;
};

}  // namespace sbmre
