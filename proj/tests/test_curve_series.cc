// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file test_curve_series.cc
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "sbmre/curve_series.hpp"
#include "sbmre/errors.hpp"

using namespace sbmre;

TEST_CASE("round trip is exact")
{
    CurveSeries c;
    c.label = "msd twopoint";
    c.notes = {"regime: long_time", "RegimeWarning: tau/T = 0.5"};
    c.points = {{0, 0, 0.0},
                {0.1, 1.0 / 3, 1e-300},
                {1e6, std::nextafter(2.0, 3.0), std::nullopt},
                {-5, -1.2345678901234567e-12, 7.0}};
    std::stringstream ss;
    write_curve_csv(c, ss);
    auto back = read_curve_csv(ss);
    CHECK(back.label == c.label);
    CHECK(back.notes == c.notes);
    REQUIRE(back.points.size() == c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i)
    {
        CHECK(back.points[i].abscissa == c.points[i].abscissa);
        CHECK(back.points[i].value == c.points[i].value);
        CHECK(back.points[i].std_error == c.points[i].std_error);
    }

    std::stringstream again;
    write_curve_csv(back, again);
    std::stringstream first;
    write_curve_csv(c, first);
    CHECK(again.str() == first.str());
}

TEST_CASE("layout")
{
    CurveSeries c;
    c.label = "x";
    c.points = {{1, 2, std::nullopt}};
    std::ostringstream os;
    write_curve_csv(c, os);
    CHECK(os.str() == "# label: x\nabscissa,value,stderr\n1,2,\n");
}

TEST_CASE("malformed input")
{
    std::istringstream no_header("# label: x\n1,2,\n");
    CHECK_THROWS_AS(read_curve_csv(no_header), ParameterError);
    std::istringstream bad_row("abscissa,value,stderr\n1;2\n");
    CHECK_THROWS_AS(read_curve_csv(bad_row), ParameterError);
    std::istringstream trailing("abscissa,value,stderr\n1,2,3x\n");
    CHECK_THROWS_AS(read_curve_csv(trailing), ParameterError);
}
