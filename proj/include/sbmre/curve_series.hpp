// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/curve_series.hpp
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sbmre
{
struct CurvePoint
{
    double abscissa = 0;
    double value = 0;
    std::optional<double> std_error;
};

//! (abscissa, value, standard error) triples with a label.
struct CurveSeries
{
    std::string label;
    std::vector<CurvePoint> points;
    //! Extra "# key: value" lines written after the label (regime notes etc.)
    std::vector<std::string> notes;
};

//! CSV with a "# label: ..." line, optional "# note" lines, then
//! "abscissa,value,stderr" rows; an absent stderr is an empty field.
void write_curve_csv(CurveSeries const& curve, std::ostream& os);
CurveSeries read_curve_csv(std::istream& is);

}  // namespace sbmre
