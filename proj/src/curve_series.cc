// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file curve_series.cc
#include "sbmre/curve_series.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "sbmre/errors.hpp"
#include "sbmre/exponent_law.hpp"

namespace sbmre
{
void write_curve_csv(CurveSeries const& curve, std::ostream& os)
{
    os << "# label: " << curve.label << '\n';
    for (auto const& n : curve.notes)
        os << "# " << n << '\n';
    os << "abscissa,value,stderr\n";
    for (auto const& p : curve.points)
    {
        os << format_double(p.abscissa) << ',' << format_double(p.value) << ',';
        if (p.std_error)
            os << format_double(*p.std_error);
        os << '\n';
    }
}

CurveSeries read_curve_csv(std::istream& is)
{
    CurveSeries c;
    std::string line;
    bool header = false;
    while (std::getline(is, line))
    {
        if (line.empty())
            continue;
        if (line.rfind("# label: ", 0) == 0)
        {
            c.label = line.substr(9);
            continue;
        }
        if (line[0] == '#')
        {
            c.notes.push_back(line.substr(line.size() > 1 ? 2 : 1));
            continue;
        }
        if (!header)
        {
            if (line != "abscissa,value,stderr")
                throw ParameterError("curve CSV: missing header");
            header = true;
            continue;
        }
        CurvePoint p;
        char const* s = line.data();
        char const* end = s + line.size();
        auto r1 = std::from_chars(s, end, p.abscissa);
        if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ',')
            throw ParameterError("curve CSV: malformed row '" + line + "'");
        auto r2 = std::from_chars(r1.ptr + 1, end, p.value);
        if (r2.ec != std::errc{} || r2.ptr == end || *r2.ptr != ',')
            throw ParameterError("curve CSV: malformed row '" + line + "'");
        if (r2.ptr + 1 != end)
        {
            double se = 0;
            auto r3 = std::from_chars(r2.ptr + 1, end, se);
            if (r3.ec != std::errc{} || r3.ptr != end)
                throw ParameterError("curve CSV: malformed row '" + line + "'");
            p.std_error = se;
        }
        c.points.push_back(p);
    }
    return c;
}

}  // namespace sbmre
