// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/validation.hpp
//! Built-in Monte Carlo versus analytic comparison suite.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sbmre
{
inline constexpr std::uint64_t kDefaultSeed = 7;

enum class Tolerance
{
    stderr_units,  //!< |observed - expected| <= tolerance * std_error
    relative,
    absolute,
};

struct Check
{
    std::string name;
    double observed = 0;
    double expected = 0;
    double tolerance = 0;
    Tolerance kind = Tolerance::relative;
    std::optional<double> std_error;
    bool passed = false;
    //! Informational checks are reported but do not affect the verdict
    bool gating = true;
    std::string note;

    //! (observed - expected) in standard errors, or relative deviation
    double deviation() const;
};

struct ScenarioResult
{
    std::string name;
    std::string description;
    std::vector<Check> checks;

    bool passed() const;
};

struct ValidationOptions
{
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    bool quick = false;  //!< reduced trajectory counts
};

struct ScenarioInfo
{
    std::string name;
    std::string description;
};

std::vector<ScenarioInfo> const& scenarios();

ScenarioResult run_scenario(std::string_view name, ValidationOptions const& opts);

//! Run one named scenario or "all".
std::vector<ScenarioResult>
run_validation(std::string_view name, ValidationOptions const& opts);

//! Deterministic JSON report (no timing or thread information).
std::string validation_report_json(std::vector<ScenarioResult> const& results,
                                   ValidationOptions const& opts);

//! Fixed-width pass/fail table for terminals.
std::string validation_table(std::vector<ScenarioResult> const& results);

bool all_passed(std::vector<ScenarioResult> const& results);

}  // namespace sbmre
