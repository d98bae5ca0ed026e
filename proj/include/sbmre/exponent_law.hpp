// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/exponent_law.hpp
//! Law of the random anomalous diffusion exponent.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "numerics.hpp"

namespace sbmre
{
class RngStream;

struct Degenerate
{
    double alpha;
};

//! Mass p on a1 and 1-p on a2.
struct TwoPoint
{
    double a1;
    double a2;
    double p;
};

//! a1 + (a2-a1) Z with Z ~ beta(gamma, beta).
struct Beta
{
    double a1;
    double a2;
    double gamma;
    double beta;
};

using LawParams = std::variant<Degenerate, TwoPoint, Beta>;

//---------------------------------------------------------------------------//
/*!
 * Validated exponent law. Only constructed through validate() or parse_law(),
 * so every instance satisfies the support invariants.
 */
class ExponentLaw
{
  public:
    LawParams const& params() const { return params_; }
    double k_bound() const { return k_bound_; }

    //! Smallest and largest exponent in the support
    double min_exponent() const;
    double max_exponent() const;

    bool is_degenerate() const;
    template<class T>
    T const* get_if() const
    {
        return std::get_if<T>(&params_);
    }

    //! Canonical spec string, e.g. "twopoint:a1=0.5,a2=1.5,p=0.5"
    std::string spec() const;

    friend ExponentLaw validate(LawParams params, std::optional<double> k_bound);

  private:
    ExponentLaw(LawParams p, double k) : params_(p), k_bound_(k) {}
    LawParams params_;
    double k_bound_;
};

// Check invariants; k_bound defaults to the largest exponent + 1
ExponentLaw validate(LawParams params, std::optional<double> k_bound = {});
inline ExponentLaw validate(ExponentLaw const& law)
{
    return validate(law.params(), law.k_bound());
}

// Parse "degenerate:alpha=..", "twopoint:a1=..,a2=..,p=..",
// "beta:a1=..,a2=..,gamma=..,beta=.." with optional ",k=.."
ExponentLaw parse_law(std::string_view spec);

// E[exp(s A)]
double mgf(ExponentLaw const& law, double s);

// E[t^A]; 0 at t = 0
double mean_power(ExponentLaw const& law, double t);

struct ExpectOptions
{
    double rel_tol = 1e-9;
};

// E[g(A)]
double expect(ExponentLaw const& law, std::function<double(double)> const& g,
              ExpectOptions const& opts = {});

// One exponent draw
double sample(ExponentLaw const& law, RngStream& stream);

// Shortest round-trip decimal form of a double
std::string format_double(double v);

}  // namespace sbmre
