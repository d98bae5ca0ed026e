// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/analytics.hpp
//! Exact characteristics of SBM (fixed exponent) and SBMRE (random exponent).
#pragma once

#include "exponent_law.hpp"

namespace sbmre
{
namespace sbm
{
double pdf(double alpha, double x, double t);
double second_moment(double alpha, double t);
double abs_moment(double alpha, double q, double t);
double autocovariance(double alpha, double s, double t);

//! Expected TAMSD, evaluated in a cancellation-free form.
double etamsd(double alpha, double tau, double T);

//! Variance of the TAMSD from the covariance double integral
//! 4/(T-tau)^2 int_0^{T-tau} dt1 int_{t1}^{min(t1+tau,T-tau)}
//!   ((t1+tau)^a - s^a)^2 ds.
double tamsd_variance(double alpha, double tau, double T);

/*!
 * Variance of the TAMSD from the closed-form bracket with its inner integral
 * int_0^{T/tau-1} x^{a+1}(1+x)^a dx.
 *
 * The bracket cancels to O(1) from terms of size (T/tau)^{2a+2}; relative
 * accuracy degrades like 1e-16 (T/tau)^{2a+2} / (T/tau)^{2a+1}. Use only for
 * cross-checks at moderate T/tau. The bracket assumes T >= 2 tau (DomainError
 * otherwise); for T < 2 tau it is off by several percent.
 */
double tamsd_variance_bracket(double alpha, double tau, double T);

double eb(double alpha, double tau, double T);

double hitting_pdf(double alpha, double b, double t);
//! P(hitting time > t) = erf(b / sqrt(2 t^alpha))
double hitting_survival(double alpha, double b, double t);
}  // namespace sbm

//! c_q = 2^{q/2} Gamma((q+1)/2) / sqrt(pi), so E|N(0,v)|^q = c_q v^{q/2}
double abs_moment_constant(double q);

double pdf(ExponentLaw const& law, double x, double t);
double second_moment(ExponentLaw const& law, double t);
double abs_moment(ExponentLaw const& law, double q, double t);
double autocovariance(ExponentLaw const& law, double s, double t);
double etamsd(ExponentLaw const& law, double tau, double T);

struct EBReport
{
    double tau = 0;
    double horizon = 0;
    double numerator = 0;    //!< Var(delta)
    double denominator = 0;  //!< E[delta]^2
    double eb = 0;
    double within = 0;   //!< E[Var(delta | A)]
    double between = 0;  //!< Var(E[delta | A])
};

EBReport eb(ExponentLaw const& law, double tau, double T);

double hitting_pdf(ExponentLaw const& law, double b, double t);
double hitting_survival(ExponentLaw const& law, double b, double t);

struct HittingNormalization
{
    double integral = 0;    //!< int_0^{t_max} f dt
    double tail_bound = 0;  //!< upper bound of int_{t_max}^inf f dt
    double quadrature_error = 0;
    double total() const { return integral + tail_bound; }
};

//! Integrate the hitting density on [0,1] plus decade panels up to t_max.
HittingNormalization
hitting_normalization(ExponentLaw const& law, double b, double t_max = 1e12);

}  // namespace sbmre
