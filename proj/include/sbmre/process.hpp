// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/process.hpp
//! Exact simulation of SBM / SBMRE paths and first hitting times.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "exponent_law.hpp"
#include "rng.hpp"
#include "time_grid.hpp"

namespace sbmre
{
using GridPtr = std::shared_ptr<TimeGrid const>;

struct Trajectory
{
    GridPtr grid;
    std::vector<double> x;
    double exponent = 0;
};

struct Ensemble
{
    ExponentLaw law;
    GridPtr grid;
    std::vector<Trajectory> trajectories;
    std::uint64_t base_seed = 0;

    std::size_t size() const { return trajectories.size(); }
};

//! Increment variances t_{k+1}^a - t_k^a, evaluated without cancellation.
std::vector<double> clock_increments(TimeGrid const& grid, double exponent);

Trajectory simulate_sbm(double alpha, GridPtr grid, RngStream& stream);
Trajectory simulate_sbmre(ExponentLaw const& law, GridPtr grid,
                          RngStream& stream);

//! Trajectory i uses RngStream(base_seed, i). threads = 0 uses the default.
Ensemble simulate_ensemble(ExponentLaw const& law, GridPtr grid,
                           std::size_t n_traj, std::uint64_t base_seed,
                           unsigned threads = 0);

struct HittingOptions
{
    //! Detect crossings between grid nodes with the Brownian-bridge
    //! exceedance probability in the running clock t^a.
    bool bridge_correction = true;
};

struct HittingTime
{
    double time = 0;  //!< first grid time at or after the crossing
    bool censored = false;
    double exponent = 0;
};

struct HittingSample
{
    std::vector<HittingTime> records;
    double barrier = 0;
    double horizon = 0;

    std::vector<double> hit_times() const;
    std::size_t censored_count() const;
};

HittingSample sample_hitting_times(ExponentLaw const& law, double barrier,
                                   TimeGrid const& grid, std::size_t n_traj,
                                   std::uint64_t base_seed,
                                   unsigned threads = 0,
                                   HittingOptions const& options = {});

//---------------------------------------------------------------------------//
// Persistence: CSV rows "traj_id,exponent,t,x" and a JSON manifest

void write_ensemble_csv(Ensemble const& ens, std::ostream& os);

struct EnsembleRecord
{
    std::size_t traj_id = 0;
    double exponent = 0;
    std::vector<double> t;
    std::vector<double> x;
};

std::vector<EnsembleRecord> read_ensemble_csv(std::istream& is);

std::string ensemble_manifest_json(Ensemble const& ens);

}  // namespace sbmre
