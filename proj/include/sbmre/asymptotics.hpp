// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/asymptotics.hpp
//! Closed-form asymptotic regimes, kept apart from the exact evaluators.
#pragma once

#include <string>

#include "exponent_law.hpp"

namespace sbmre
{
enum class Regime
{
    short_time,
    long_time,
    small_lag_ratio,
};

char const* to_string(Regime r);

//! Asymptotic value with its regime annotation. Evaluating outside the
//! regime is allowed; `warning` then holds a RegimeWarning note.
struct AsymptoticValue
{
    double value = 0;
    Regime regime = Regime::small_lag_ratio;
    std::string warning;

    bool in_regime() const { return warning.empty(); }
};

// tau T^{alpha-1}
AsymptoticValue sbm_etamsd_asymp(double alpha, double tau, double T);

// Prefactor of the alpha < 1/2 branch of the SBM EB asymptotics, as printed
double c_alpha(double alpha);

//! Exact SBM EB at tau/T = lag_ratio divided by (tau/T)^{2 alpha}; compare
//! against c_alpha(alpha) to quantify the printed prefactor.
double c_alpha_fit(double alpha, double lag_ratio = 1e-5);

// Piecewise in alpha vs 1/2
AsymptoticValue sbm_eb_asymp(double alpha, double tau, double T);

// p t^{a1} (short_time) or (1-p) t^{a2} (long_time). Accepts p in [0,1].
AsymptoticValue tp_msd_asymp(TwoPoint const& law, double t, Regime regime);

enum class TaylorOrder
{
    leading,          //!< (tau/T)(p T^{a1} + (1-p) T^{a2})
    taylor3,          //!< consistent second-order expansion in tau/T
    taylor3_printed,  //!< three-term sum with the printed signs
};

char const* to_string(TaylorOrder o);

AsymptoticValue
tp_etamsd_asymp(TwoPoint const& law, double tau, double T, TaylorOrder order);

// Five cases keyed on a1, a2 versus 1/2; DomainError if a1 == a2
AsymptoticValue tp_eb_asymp(TwoPoint const& law, double tau, double T);

// p/(1-p) for p in (0,1), else 0
double tp_eb_limit(double p);

// Gamma(g+b) t^{a1} / (Gamma(g) ((a2-a1) log(1/t))^g) for short times,
// Gamma(g+b) t^{a2} / (Gamma(g) ((a2-a1) log t)^b) for long times
AsymptoticValue beta_msd_asymp(Beta const& law, double t, Regime regime);

// -1 - a_min / 2
double hitting_tail_exponent(ExponentLaw const& law);

//! Accepts raw two-point parameters with p in [0,1] (asymptotic formulas
//! stay meaningful at the degenerate weights).
void check_two_point(TwoPoint const& law);

}  // namespace sbmre
