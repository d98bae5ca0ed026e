// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/numerics.hpp
//! Special functions and adaptive quadrature.
#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace sbmre
{
enum class PanelStrategy
{
    uniform,
    geometric,  //!< decade panels if lo > 0 and hi/lo > 1e3, else clustered to both ends
};

struct QuadratureSpec
{
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_depth = 50;
    PanelStrategy panel_strategy = PanelStrategy::uniform;
};

struct QuadratureResult
{
    double value = 0;
    double error = 0;
    std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Log of the gamma function for x > 0
double ln_gamma(double x);

// Euler beta function
double beta_fn(double x, double y);

// Confluent hypergeometric function 1F1(a; b; z) by power series
double kummer_1f1(double a, double b, double z);

// 1F1 by direct series without the Kummer transformation (z >= 0 only
// is well conditioned; exposed for cross-checks)
double kummer_1f1_series(double a, double b, double z);

double integrate(Integrand const& f, double lo, double hi,
                 QuadratureSpec const& spec = {});

//! Integrate over consecutive intervals [b0,b1], [b1,b2], ...; each interval
//! is split into panels according to spec.panel_strategy.
QuadratureResult integrate_detailed(Integrand const& f,
                                    std::span<double const> breakpoints,
                                    QuadratureSpec const& spec = {});

void validate(QuadratureSpec const& spec);

}  // namespace sbmre
