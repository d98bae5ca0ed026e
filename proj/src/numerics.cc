// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file numerics.cc
#include "sbmre/numerics.hpp"

#include <cmath>
#include <math.h>
#include <string>

#include "sbmre/errors.hpp"

namespace sbmre
{
namespace
{
constexpr long kMaxSeriesTerms = 1'000'000;
constexpr double kSeriesRelTol = 1e-17;
}  // namespace

double ln_gamma(double x)
{
    if (!(x > 0) || !std::isfinite(x))
    {
        throw DomainError("ln_gamma: argument must be positive and finite, got "
                          + std::to_string(x));
    }
    // Reentrant variant: std::lgamma writes the global signgam
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double beta_fn(double x, double y)
{
    if (!(x > 0) || !(y > 0))
    {
        throw DomainError("beta_fn: arguments must be positive");
    }
    return std::exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y));
}

namespace
{
// Series with the first parameter carried as an unevaluated sum a_hi + a_lo,
// so that (a + n) stays accurate when a is near a non-positive integer.
double kummer_series(double a_hi, double a_lo, double b, double z)
{
    if (!(b > 0))
    {
        throw DomainError("kummer_1f1: b must be positive");
    }
    double sum = 1;
    double term = 1;
    int small = 0;
    for (long n = 0; n < kMaxSeriesTerms; ++n)
    {
        double const an = (a_hi + static_cast<double>(n)) + a_lo;
        term *= an / (b + static_cast<double>(n)) * z / static_cast<double>(n + 1);
        sum += term;
        if (std::abs(term) <= kSeriesRelTol * std::abs(sum))
        {
            if (++small == 3)
            {
                return sum;
            }
        }
        else
        {
            small = 0;
        }
    }
    throw NumericsError("kummer_1f1: series did not converge within 1e6 terms"
                        " (a=" + std::to_string(a_hi + a_lo) + ", b="
                        + std::to_string(b) + ", z=" + std::to_string(z) + ")");
}
}  // namespace

double kummer_1f1_series(double a, double b, double z)
{
    return kummer_series(a, 0, b, z);
}

double kummer_1f1(double a, double b, double z)
{
    if (z == 0)
    {
        return 1;
    }
    if (z < 0)
    {
        // Kummer transform; b - a as an exact two-term sum
        double const s = b - a;
        double const bv = s - b;
        double const err = (b - (s - bv)) + (-a - bv);
        return std::exp(z) * kummer_series(s, err, b, -z);
    }
    return kummer_1f1_series(a, b, z);
}

}  // namespace sbmre
