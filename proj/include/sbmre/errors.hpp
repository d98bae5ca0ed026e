// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/errors.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace sbmre
{
//! Invalid law, grid, or option parameters.
class ParameterError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! Argument outside the domain of a formula (e.g. tau >= T).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Iterative special-function evaluation failed.
class NumericsError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Adaptive quadrature failed to reach its tolerance.
class QuadratureError : public NumericsError
{
  public:
    QuadratureError(std::string const& what,
                    double worst_lo,
                    double worst_hi,
                    double worst_error,
                    double achieved_error,
                    double value);

    double worst_lo() const { return worst_lo_; }
    double worst_hi() const { return worst_hi_; }
    double worst_error() const { return worst_error_; }
    double achieved_error() const { return achieved_error_; }
    double value() const { return value_; }

  private:
    double worst_lo_;
    double worst_hi_;
    double worst_error_;
    double achieved_error_;
    double value_;
};

}  // namespace sbmre
