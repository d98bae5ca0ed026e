// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre/parallel.hpp
#pragma once

#include <cstddef>
#include <functional>

namespace sbmre
{
//! Worker cap: SBMRE_THREADS if set, else hardware concurrency.
unsigned default_threads();

//! Resolve a requested worker count (0 means default_threads()).
unsigned resolve_threads(unsigned requested);

/*!
 * Run body(i) for i in [0, n) on up to `threads` workers.
 *
 * Indices are split into contiguous chunks; body must only write state owned
 * by index i, which makes results independent of the worker count.
 */
void parallel_for(std::size_t n, unsigned threads,
                  std::function<void(std::size_t)> const& body);

}  // namespace sbmre
