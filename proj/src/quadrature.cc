// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file quadrature.cc
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "sbmre/detail/gauss_kronrod.hpp"
#include "sbmre/errors.hpp"
#include "sbmre/numerics.hpp"

namespace sbmre
{
QuadratureError::QuadratureError(std::string const& what,
                                 double worst_lo,
                                 double worst_hi,
                                 double worst_error,
                                 double achieved_error,
                                 double value)
    : NumericsError(what)
    , worst_lo_(worst_lo)
    , worst_hi_(worst_hi)
    , worst_error_(worst_error)
    , achieved_error_(achieved_error)
    , value_(value)
{
}

namespace
{
constexpr std::size_t kMaxSegments = 200'000;

struct Segment
{
    double lo;
    double hi;
    double value;
    double error;
    int depth;
};

struct ByError
{
    bool operator()(Segment const& a, Segment const& b) const
    {
        return a.error < b.error;
    }
};

[[noreturn]] void
fail(char const* why, Segment const& worst, double err, double value)
{
    std::ostringstream os;
    os.precision(6);
    os << "quadrature did not converge: " << why << "; worst panel ["
       << worst.lo << ", " << worst.hi << "] error " << worst.error
       << ", total error " << err << ", value " << value;
    throw QuadratureError(os.str(), worst.lo, worst.hi, worst.error, err,
                          value);
}

void add_panels(double lo, double hi, PanelStrategy s, std::vector<double>& out)
{
    out.push_back(lo);
    if (s == PanelStrategy::geometric)
    {
        if (lo > 0 && hi / lo > 1e3)
        {
            for (double p = lo * 10; p < hi / 1.5; p *= 10)
            {
                out.push_back(p);
            }
        }
        else
        {
            double const w = hi - lo;
            double f = std::ldexp(1.0, -40);
            for (int k = 0; k < 20; ++k, f *= 4)
            {
                out.push_back(lo + w * f);
            }
            out.push_back(lo + 0.5 * w);
            for (int k = 0; k < 20; ++k)
            {
                f /= 4;
                out.push_back(hi - w * f);
            }
        }
    }
}

}  // namespace

void validate(QuadratureSpec const& spec)
{
    if (!(spec.rel_tol >= 0) || !(spec.abs_tol >= 0)
        || (spec.rel_tol == 0 && spec.abs_tol == 0))
    {
        throw ParameterError("QuadratureSpec: tolerances must be positive");
    }
    if (spec.max_depth < 1)
    {
        throw ParameterError("QuadratureSpec: max_depth must be >= 1");
    }
}

QuadratureResult integrate_detailed(Integrand const& f,
                                    std::span<double const> breakpoints,
                                    QuadratureSpec const& spec)
{
    validate(spec);
    if (breakpoints.size() < 2)
    {
        throw ParameterError("integrate: need at least two breakpoints");
    }
    std::vector<double> nodes;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    {
        double const lo = breakpoints[i];
        double const hi = breakpoints[i + 1];
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        {
            throw ParameterError("integrate: breakpoints must be finite and "
                                 "strictly increasing");
        }
        add_panels(lo, hi, spec.panel_strategy, nodes);
    }
    nodes.push_back(breakpoints.back());

    QuadratureResult result;
    std::vector<Segment> heap;  // max-heap on error
    std::vector<Segment> frozen;
    long double total = 0;
    long double err = 0;
    long double frozen_err = 0;

    auto eval = [&](double lo, double hi, int depth) {
        auto est = detail::gauss_kronrod21(f, lo, hi);
        result.evaluations += 21;
        Segment s{lo, hi, est.value, est.error, depth};
        if (!est.finite)
        {
            fail("non-finite integrand value", s, static_cast<double>(err),
                 static_cast<double>(total));
        }
        return s;
    };

    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    {
        if (!(nodes[i] < nodes[i + 1]))
        {
            continue;
        }
        Segment s = eval(nodes[i], nodes[i + 1], 0);
        total += s.value;
        err += s.error;
        heap.push_back(s);
    }
    std::make_heap(heap.begin(), heap.end(), ByError{});

    auto tolerance = [&] {
        return std::max(static_cast<long double>(spec.abs_tol),
                        spec.rel_tol * std::abs(total));
    };

    auto resum = [&] {
        long double t = 0;
        long double e = 0;
        for (auto const& hs : heap)
        {
            t += hs.value;
            e += hs.error;
        }
        for (auto const& fs : frozen)
        {
            t += fs.value;
            e += fs.error;
        }
        total = t;
        err = e;
    };

    for (;;)
    {
        if (err <= tolerance())
        {
            // Confirm against a fresh sum so incremental drift cannot stop early
            resum();
            if (err <= tolerance())
                break;
        }
        if (frozen_err > tolerance() || heap.empty())
        {
            Segment worst = heap.empty() ? frozen.front() : heap.front();
            for (auto const& s : frozen)
            {
                if (s.error > worst.error)
                    worst = s;
            }
            fail("maximum subdivision depth reached", worst,
                 static_cast<double>(err), static_cast<double>(total));
        }
        if (heap.size() + frozen.size() > kMaxSegments)
        {
            fail("segment limit exceeded", heap.front(),
                 static_cast<double>(err), static_cast<double>(total));
        }
        std::pop_heap(heap.begin(), heap.end(), ByError{});
        Segment s = heap.back();
        heap.pop_back();
        double const mid = 0.5 * (s.lo + s.hi);
        if (s.depth >= spec.max_depth || !(s.lo < mid && mid < s.hi))
        {
            frozen_err += s.error;
            frozen.push_back(s);
            continue;
        }
        Segment l = eval(s.lo, mid, s.depth + 1);
        Segment r = eval(mid, s.hi, s.depth + 1);
        total += (static_cast<long double>(l.value) + r.value) - s.value;
        err += (static_cast<long double>(l.error) + r.error) - s.error;
        heap.push_back(l);
        std::push_heap(heap.begin(), heap.end(), ByError{});
        heap.push_back(r);
        std::push_heap(heap.begin(), heap.end(), ByError{});
    }

    result.value = static_cast<double>(total);
    result.error = static_cast<double>(err);
    return result;
}

double integrate(Integrand const& f, double lo, double hi,
                 QuadratureSpec const& spec)
{
    if (!(lo < hi))
    {
        throw ParameterError("integrate: require lo < hi");
    }
    double const bp[] = {lo, hi};
    return integrate_detailed(f, bp, spec).value;
}

}  // namespace sbmre
