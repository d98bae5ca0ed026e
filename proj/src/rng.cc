// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file rng.cc
#include "sbmre/rng.hpp"

#include <cmath>
#include <numbers>

namespace sbmre
{
namespace
{
constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo)
{
    __extension__ using u128 = unsigned __int128;
    auto const p = static_cast<u128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

inline PhiloxCounter round(PhiloxCounter const& c, PhiloxKey const& k)
{
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, c[0], hi0, lo0);
    mulhilo(kM1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}
}  // namespace

PhiloxCounter philox4x64_10(PhiloxCounter ctr, PhiloxKey key)
{
    ctr = round(ctr, key);
    for (int r = 1; r < 10; ++r)
    {
        key[0] += kW0;
        key[1] += kW1;
        ctr = round(ctr, key);
    }
    return ctr;
}

RngStream::RngStream(std::uint64_t base_seed, std::uint64_t stream_index)
    : key_{base_seed, stream_index}
{
}

std::uint64_t RngStream::next_u64()
{
    if (pos_ == 4)
    {
        buffer_ = philox4x64_10({block_, 0, 0, 0}, key_);
        ++block_;
        pos_ = 0;
    }
    return buffer_[pos_++];
}

double RngStream::uniform()
{
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal()
{
    if (has_cached_)
    {
        has_cached_ = false;
        return cached_normal_;
    }
    double const r = std::sqrt(-2 * std::log(uniform()));
    double const theta = 2 * std::numbers::pi * uniform();
    cached_normal_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

double RngStream::gamma(double shape)
{
    if (shape < 1)
    {
        // G(a) = G(a+1) * U^(1/a)
        double const g = gamma(shape + 1);
        return g * std::exp(std::log(uniform()) / shape);
    }
    double const d = shape - 1.0 / 3;
    double const c = 1 / std::sqrt(9 * d);
    for (;;)
    {
        double x = normal();
        double v = 1 + c * x;
        if (v <= 0)
            continue;
        v = v * v * v;
        double const u = uniform();
        double const x2 = x * x;
        if (u < 1 - 0.0331 * x2 * x2)
            return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1 - v + std::log(v)))
            return d * v;
    }
}

double RngStream::beta(double a, double b)
{
    double const x = gamma(a);
    double const y = gamma(b);
    return x / (x + y);
}

}  // namespace sbmre
