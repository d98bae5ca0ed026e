// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file ensemble_io.cc
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"
#include "sbmre/errors.hpp"
#include "sbmre/process.hpp"

namespace sbmre
{
void write_ensemble_csv(Ensemble const& ens, std::ostream& os)
{
    os << "traj_id,exponent,t,x\n";
    auto const t = ens.grid->times();
    std::string line;
    for (std::size_t i = 0; i < ens.trajectories.size(); ++i)
    {
        auto const& tr = ens.trajectories[i];
        std::string const head
            = std::to_string(i) + "," + format_double(tr.exponent) + ",";
        for (std::size_t k = 0; k < tr.x.size(); ++k)
        {
            line = head;
            line += format_double(t[k]);
            line += ',';
            line += format_double(tr.x[k]);
            line += '\n';
            os << line;
        }
    }
}

std::vector<EnsembleRecord> read_ensemble_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != "traj_id,exponent,t,x")
    {
        throw ParameterError("ensemble CSV: missing header traj_id,exponent,t,x");
    }
    std::vector<EnsembleRecord> out;
    std::size_t lineno = 1;
    while (std::getline(is, line))
    {
        ++lineno;
        if (line.empty())
            continue;
        double v[4];
        char const* p = line.data();
        char const* end = line.data() + line.size();
        for (int c = 0; c < 4; ++c)
        {
            auto [q, ec] = std::from_chars(p, end, v[c]);
            if (ec != std::errc{} || (c < 3 && (q == end || *q != ','))
                || (c == 3 && q != end))
            {
                throw ParameterError("ensemble CSV: malformed line "
                                     + std::to_string(lineno));
            }
            p = q + 1;
        }
        auto const id = static_cast<std::size_t>(v[0]);
        if (out.empty() || out.back().traj_id != id)
        {
            out.push_back({id, v[1], {}, {}});
        }
        out.back().t.push_back(v[2]);
        out.back().x.push_back(v[3]);
    }
    return out;
}

std::string ensemble_manifest_json(Ensemble const& ens)
{
    nlohmann::ordered_json j;
    j["law"] = ens.law.spec();
    j["grid"] = ens.grid->spec();
    j["n_traj"] = ens.trajectories.size();
    j["base_seed"] = ens.base_seed;
    j["code_version"] = SBMRE_VERSION;
    return j.dump(2);
}

}  // namespace sbmre
