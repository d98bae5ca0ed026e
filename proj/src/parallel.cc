// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file parallel.cc
#include "sbmre/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sbmre
{
unsigned default_threads()
{
    if (char const* env = std::getenv("SBMRE_THREADS"))
    {
        try
        {
            long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(std::min(v, 1024L));
        }
        catch (std::exception const&)
        {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

unsigned resolve_threads(unsigned requested)
{
    return requested == 0 ? default_threads() : requested;
}

void parallel_for(std::size_t n, unsigned threads,
                  std::function<void(std::size_t)> const& body)
{
    std::size_t const workers
        = std::min<std::size_t>(resolve_threads(threads), n);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
        std::size_t const lo = n * w / workers;
        std::size_t const hi = n * (w + 1) / workers;
        pool.emplace_back([&, lo, hi] {
            try
            {
                for (std::size_t i = lo; i < hi; ++i)
                    body(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace sbmre
