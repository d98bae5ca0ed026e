// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file acceptance.cc
//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sbmre/validation.hpp"

namespace fs = std::filesystem;
using namespace sbmre;

namespace
{
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion
{
    int id;
    std::string title;
    std::vector<std::string> scenarios;
    double limit_seconds;  // per scenario
};

struct Outcome
{
    bool passed = true;
    std::string detail;
};

Outcome run_criterion(Criterion const& c)
{
    Outcome out;
    std::ostringstream detail;
    std::ostringstream failures;
    for (auto const& name : c.scenarios)
    {
        auto const t0 = Clock::now();
        auto const r = run_scenario(name, {});
        double const dt = seconds_since(t0);
        std::size_t gating = 0, failed = 0;
        for (auto const& ck : r.checks)
        {
            if (!ck.gating)
                continue;
            ++gating;
            if (!ck.passed)
            {
                ++failed;
                failures << "\n      failed: " << ck.name << " observed " << ck.observed
                       << " expected " << ck.expected << " tol " << ck.tolerance;
            }
        }
        bool const fast = dt < c.limit_seconds;
        if (!fast)
            failures << "\n      " << name << " took " << dt << " s, limit " << c.limit_seconds;
        out.passed = out.passed && r.passed() && fast;
        detail << " [" << name << ": " << gating - failed << "/" << gating << " checks, "
               << std::fixed;
        detail.precision(2);
        detail << dt << " s]";
        detail.unsetf(std::ios::fixed);
        detail.precision(6);
    }
    out.detail = detail.str() + failures.str();
    return out;
}

std::string slurp(fs::path const& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

// Reports from `validate all` with 1 and 8 threads and a repeat must match
Outcome reproducibility()
{
    Outcome out;
    std::string tmpl = (fs::temp_directory_path() / "sbmre_accept_XXXXXX").string();
    if (!mkdtemp(tmpl.data()))
        return {false, " cannot create scratch directory"};
    fs::path const dir(tmpl);
    auto validate = [&](char const* threads, char const* file) {
        std::string const cmd = "'" + std::string(SBMRE_CLI_PATH)
                                + "' validate all --seed 7 --threads " + threads
                                + " --out '" + (dir / file).string() + "' > /dev/null 2>&1";
        int const st = std::system(cmd.c_str());
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    auto const t0 = Clock::now();
    int const s1 = validate("1", "t1.json");
    int const s8 = validate("8", "t8.json");
    int const s8b = validate("8", "t8b.json");
    double const dt = seconds_since(t0);
    std::ostringstream detail;
    for (int s : {s1, s8, s8b})
    {
        // 0 or 1 (failed checks) are both complete runs
        if (s != 0 && s != 1)
        {
            out.passed = false;
            detail << " validate exited " << s << ";";
        }
    }
    std::string const a = slurp(dir / "t1.json");
    std::string const b = slurp(dir / "t8.json");
    std::string const c = slurp(dir / "t8b.json");
    bool const same_threads = !b.empty() && b == c;
    bool const across_threads = !a.empty() && a == b;
    out.passed = out.passed && same_threads && across_threads && dt / 3 < 900;
    detail << " [repeat identical: " << (same_threads ? "yes" : "no")
           << ", threads 1 vs 8 identical: " << (across_threads ? "yes" : "no") << ", "
           << dt / 3 << " s per full suite]";
    out.detail = detail.str();
    fs::remove_all(dir);
    return out;
}
}  // namespace

int main()
{
    std::vector<Criterion> const criteria{
        {1, "degenerate reduction", {"degenerate"}, 5},
        {2, "BM TAMSD identity", {"bm-tamsd"}, 1},
        // three laws per scenario at 60 s each
        {3, "MSD validation", {"msd-twopoint", "msd-beta"}, 3 * 60},
        {4, "TAMSD validation", {"tamsd"}, 120},
        {5, "EB reproduction, A=(0.3,0.7)", {"fig8"}, 300},
        {6, "EB universal limit", {"eb-limit"}, 30},
        {7, "hitting normalization and tail", {"hitting"}, 180},
        {8, "martingale consequences", {"martingale"}, 120},
        {9, "q-moment identity", {"qmoment"}, 120},
        {10, "asymptotic slopes", {"asymptotics"}, 5},
        {11, "special functions", {"special-functions"}, 1},
    };
    bool all = true;
    for (auto const& c : criteria)
    {
        auto const o = run_criterion(c);
        all = all && o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": "
                  << c.title << o.detail << std::endl;
    }
    auto const o = reproducibility();
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion 12: reproducibility"
              << o.detail << std::endl;
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
