// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/rng.hpp
//! Counter-based random streams (Philox4x64-10).
#pragma once

#include <array>
#include <cstdint>

namespace sbmre
{
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

//! One Philox4x64 block with 10 rounds.
PhiloxCounter philox4x64_10(PhiloxCounter ctr, PhiloxKey key);

//---------------------------------------------------------------------------//
/*!
 * Random stream keyed by (base_seed, stream_index).
 *
 * Draw j of a stream is a pure function of (base_seed, stream_index, j), so
 * any partition of stream indices over workers gives identical results.
 */
class RngStream
{
  public:
    RngStream(std::uint64_t base_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    //! Uniform double in the open interval (0, 1), 53-bit resolution
    double uniform();
    //! Standard normal (Box-Muller, second value cached)
    double normal();
    //! Gamma(shape, 1) by Marsaglia-Tsang
    double gamma(double shape);
    //! Beta(a, b) as a ratio of gamma variates
    double beta(double a, double b);

    std::uint64_t base_seed() const { return key_[0]; }
    std::uint64_t stream_index() const { return key_[1]; }
    //! Number of 64-bit words consumed so far
    std::uint64_t draws() const { return block_ * 4 + pos_ - 4; }

  private:
    PhiloxKey key_;
    std::uint64_t block_ = 0;
    PhiloxCounter buffer_{};
    unsigned pos_ = 4;
    double cached_normal_ = 0;
    bool has_cached_ = false;
};

}  // namespace sbmre
