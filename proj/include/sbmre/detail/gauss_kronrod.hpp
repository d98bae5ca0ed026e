// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/detail/gauss_kronrod.hpp
//! 21-point Gauss-Kronrod rule (QUADPACK qk21 abscissae and weights).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace sbmre::detail
{
inline constexpr std::array<double, 11> gk21_x = {
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 11> gk21_wk = {
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208931996085,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};

// Gauss weights for the odd-indexed Kronrod abscissae (1, 3, ..., 9)
inline constexpr std::array<double, 5> gk21_wg = {
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct GKEstimate
{
    double value;
    double error;
    double abs_value;
    bool finite;
};

//! Kronrod value with the QUADPACK error heuristic.
template<class F>
GKEstimate gauss_kronrod21(F&& f, double lo, double hi)
{
    double const center = 0.5 * (lo + hi);
    double const half = 0.5 * (hi - lo);

    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};
    double const fc = f(center);
    double resk = gk21_wk[10] * fc;
    double resg = 0;
    double resabs = std::abs(resk);
    bool finite = std::isfinite(fc);
    for (int j = 0; j < 10; ++j)
    {
        double const dx = half * gk21_x[j];
        double const f1 = f(center - dx);
        double const f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        finite = finite && std::isfinite(f1) && std::isfinite(f2);
        resk += gk21_wk[j] * (f1 + f2);
        resabs += gk21_wk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
        {
            resg += gk21_wg[j / 2] * (f1 + f2);
        }
    }
    double const reskh = 0.5 * resk;
    double resasc = gk21_wk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
    {
        resasc += gk21_wk[j]
                  * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }

    double const ahalf = std::abs(half);
    double err = std::abs((resk - resg) * half);
    resasc *= ahalf;
    resabs *= ahalf;
    if (resasc != 0 && err != 0)
    {
        err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50 * eps))
    {
        err = std::max(50 * eps * resabs, err);
    }
    return {resk * half, err, resabs, finite};
}

}  // namespace sbmre::detail
