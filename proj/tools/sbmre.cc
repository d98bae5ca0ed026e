// Copyright 2026 The sbmre Authors
// SPDX-License-Identifier: Apache-2.0
//! \file sbmre.cc
//! Command-line driver: simulate, characteristic, asymptotic, validate, replay.
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sbmre/analytics.hpp"
#include "sbmre/asymptotics.hpp"
#include "sbmre/curve_series.hpp"
#include "sbmre/errors.hpp"
#include "sbmre/exponent_law.hpp"
#include "sbmre/parallel.hpp"
#include "sbmre/process.hpp"
#include "sbmre/time_grid.hpp"
#include "sbmre/validation.hpp"

namespace
{
using namespace sbmre;
using nlohmann::ordered_json;

// Exit codes
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kNumerics = 3;
constexpr int kIo = 4;

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

double parse_number(std::string const& flag, std::string_view text)
{
    double v = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        throw UsageError("--" + flag + ": '" + std::string(text) + "' is not a number");
    return v;
}

//! "v", "lo:hi" (50 log points), "lo:hi:n" (linear) or "lo:hi:nL" (log).
std::vector<double> parse_values(std::string const& flag, std::string const& text)
{
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    for (;;)
    {
        auto c = rest.find(':');
        parts.push_back(rest.substr(0, c));
        if (c == std::string_view::npos)
            break;
        rest = rest.substr(c + 1);
    }
    if (parts.size() == 1)
        return {parse_number(flag, parts[0])};
    if (parts.size() > 3)
        throw UsageError("--" + flag + ": expected lo:hi:count, got '" + text + "'");
    double const lo = parse_number(flag, parts[0]);
    double const hi = parse_number(flag, parts[1]);
    bool log = true;
    long count = 50;
    if (parts.size() == 3)
    {
        std::string_view c = parts[2];
        log = !c.empty() && (c.back() == 'L' || c.back() == 'l');
        if (log)
            c.remove_suffix(1);
        auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
        if (ec != std::errc() || ptr != c.data() + c.size() || count < 1)
        {
            throw UsageError("--" + flag + ": bad count '" + std::string(parts[2])
                             + "'");
        }
    }
    if (!(hi >= lo))
        throw UsageError("--" + flag + ": range needs lo <= hi");
    if (log && !(lo > 0))
        throw UsageError("--" + flag + ": log-spaced range needs lo > 0");
    if (count == 1)
        return {lo};
    std::vector<double> v(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
    {
        double const f = static_cast<double>(i) / static_cast<double>(count - 1);
        v[static_cast<std::size_t>(i)]
            = log ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
    }
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::uint64_t parse_seed(std::string const& text)
{
    if (text == "random")
        return (std::uint64_t{std::random_device{}()} << 32) | std::random_device{}();
    std::uint64_t s = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), s);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError("--seed: expected a non-negative integer or 'random'");
    return s;
}

std::string default_seed_text()
{
    if (char const* env = std::getenv("SBMRE_SEED"); env && *env)
        return env;
    return std::to_string(kDefaultSeed);
}

ExponentLaw law_from(std::string const& spec)
{
    try
    {
        return parse_law(spec);
    }
    catch (std::exception const& e)
    {
        throw UsageError(std::string("--law: ") + e.what());
    }
}

GridPtr grid_from(std::string const& spec)
{
    try
    {
        return std::make_shared<TimeGrid const>(TimeGrid::parse(spec));
    }
    catch (std::exception const& e)
    {
        throw UsageError(std::string("--grid: ") + e.what());
    }
}

//---------------------------------------------------------------------------//
// Curve evaluation shared by characteristic and asymptotic

using Params = std::map<std::string, double>;

struct CurveOptions
{
    std::string regime = "auto";
    std::string order = "leading";
};

struct PointValue
{
    double value = 0;
    std::string regime;
    std::string warning;
};

struct CurveDef
{
    std::string name;
    std::string summary;
    //! Parameters in order; the first is the default abscissa
    std::vector<std::pair<std::string, std::string>> params;  // flag, default
    bool needs_law = true;
    std::function<PointValue(ExponentLaw const*, Params const&, CurveOptions const&)>
        eval;
};

PointValue plain(double v)
{
    return {v, {}, {}};
}

PointValue annotated(AsymptoticValue const& a)
{
    return {a.value, to_string(a.regime), a.warning};
}

TwoPoint const& need_two_point(ExponentLaw const* law)
{
    auto const* tp = law->get_if<TwoPoint>();
    if (!tp)
        throw UsageError("--law: this asymptotic needs a twopoint law");
    return *tp;
}

Beta const& need_beta(ExponentLaw const* law)
{
    auto const* b = law->get_if<Beta>();
    if (!b)
        throw UsageError("--law: this asymptotic needs a beta law");
    return *b;
}

std::vector<CurveDef> const& characteristics()
{
    static std::vector<CurveDef> const defs{
        {"pdf", "density of X(t) at x", {{"x", "-5:5:201"}, {"t", "1"}}, true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const&) {
             return plain(pdf(*l, p.at("x"), p.at("t")));
         }},
        {"msd", "second moment E[X(t)^2]", {{"t", "0.01:100:50L"}}, true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const&) {
             return plain(second_moment(*l, p.at("t")));
         }},
        {"qmoment", "absolute moment E|X(t)|^q", {{"t", "0.01:100:50L"}, {"q", "2"}},
         true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const&) {
             return plain(abs_moment(*l, p.at("q"), p.at("t")));
         }},
        {"autocov", "autocovariance E[X(s)X(t)]", {{"t", "0.01:100:50L"}, {"s", "1"}},
         true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const&) {
             return plain(autocovariance(*l, p.at("s"), p.at("t")));
         }},
        {"etamsd", "expected TAMSD at lag tau, horizon T",
         {{"tau", "0.01:1:50L"}, {"T", "10"}}, true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const&) {
             return plain(etamsd(*l, p.at("tau"), p.at("T")));
         }},
        {"eb", "ergodicity breaking parameter", {{"tau", "0.01:1:20L"}, {"T", "10"}},
         true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const&) {
             return plain(eb(*l, p.at("tau"), p.at("T")).eb);
         }},
        {"hitting", "first hitting time density of barrier b",
         {{"t", "0.01:10000:100L"}, {"b", "1"}}, true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const&) {
             return plain(hitting_pdf(*l, p.at("b"), p.at("t")));
         }},
    };
    return defs;
}

Regime pick_regime(std::string const& mode, double t)
{
    if (mode == "short")
        return Regime::short_time;
    if (mode == "long")
        return Regime::long_time;
    return t < 1 ? Regime::short_time : Regime::long_time;
}

TaylorOrder pick_order(std::string const& s)
{
    if (s == "leading")
        return TaylorOrder::leading;
    if (s == "taylor3")
        return TaylorOrder::taylor3;
    return TaylorOrder::taylor3_printed;
}

std::vector<CurveDef> const& asymptotics()
{
    static std::vector<CurveDef> const defs{
        {"sbm-etamsd", "SBM expected TAMSD for tau << T",
         {{"tau", "0.001:0.1:50L"}, {"alpha", "0.5"}, {"T", "10"}}, false,
         [](ExponentLaw const*, Params const& p, CurveOptions const&) {
             return annotated(sbm_etamsd_asymp(p.at("alpha"), p.at("tau"), p.at("T")));
         }},
        {"c-alpha", "SBM EB prefactor C(alpha) for alpha < 1/2",
         {{"alpha", "0.05:0.45:9"}}, false,
         [](ExponentLaw const*, Params const& p, CurveOptions const&) {
             double const a = p.at("alpha");
             double const fit = c_alpha_fit(a);
             PointValue v = plain(c_alpha(a));
             v.warning = "prefactor fitted from exact EB: " + format_double(fit);
             return v;
         }},
        {"sbm-eb", "SBM EB for tau << T", {{"tau", "1:100:20L"}, {"alpha", "0.75"},
                                            {"T", "10000"}},
         false,
         [](ExponentLaw const*, Params const& p, CurveOptions const&) {
             return annotated(sbm_eb_asymp(p.at("alpha"), p.at("tau"), p.at("T")));
         }},
        {"tp-msd", "two-point MSD, short or long time", {{"t", "1e-6:1e6:61L"}}, true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const& o) {
             double const t = p.at("t");
             return annotated(
                 tp_msd_asymp(need_two_point(l), t, pick_regime(o.regime, t)));
         }},
        {"tp-etamsd", "two-point expected TAMSD for tau << T",
         {{"tau", "1:100:20L"}, {"T", "10000"}}, true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const& o) {
             return annotated(tp_etamsd_asymp(need_two_point(l), p.at("tau"),
                                              p.at("T"), pick_order(o.order)));
         }},
        {"tp-eb", "two-point EB for tau << T", {{"T", "1e2:1e6:41L"}, {"tau", "1"}},
         true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const&) {
             return annotated(tp_eb_asymp(need_two_point(l), p.at("tau"), p.at("T")));
         }},
        {"tp-eb-limit", "two-point EB limit p/(1-p)", {}, true,
         [](ExponentLaw const* l, Params const&, CurveOptions const&) {
             return plain(tp_eb_limit(need_two_point(l).p));
         }},
        {"beta-msd", "beta-law MSD, short or long time", {{"t", "1e-8:1e8:80L"}},
         true,
         [](ExponentLaw const* l, Params const& p, CurveOptions const& o) {
             double const t = p.at("t");
             return annotated(
                 beta_msd_asymp(need_beta(l), t, pick_regime(o.regime, t)));
         }},
        {"hitting-tail", "hitting density tail exponent -1-a_min/2", {}, true,
         [](ExponentLaw const* l, Params const&, CurveOptions const&) {
             return plain(hitting_tail_exponent(*l));
         }},
    };
    return defs;
}

std::string names_of(std::vector<CurveDef> const& defs)
{
    std::string s;
    for (auto const& d : defs)
        s += (s.empty() ? "" : ", ") + d.name;
    return s;
}

std::string footer_for(std::vector<CurveDef> const& defs)
{
    std::ostringstream os;
    os << "Names:\n";
    for (auto const& d : defs)
    {
        os << "  " << d.name << "  " << d.summary;
        if (d.needs_law)
            os << " [--law]";
        os << '\n';
        for (auto const& [flag, def] : d.params)
            os << "      --" << flag << " (default " << def << ")\n";
    }
    os << "Value flags take v, lo:hi:count (linear), lo:hi:countL (log) or lo:hi "
          "(50 log points);\nat most one flag may be a range and it becomes the "
          "abscissa.\n";
    return os.str();
}

//---------------------------------------------------------------------------//

struct Run
{
    std::vector<std::string> argv;  // resolved, without program name
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::vector<std::string> files;
    ordered_json info = ordered_json::object();
};

void write_text(std::string const& path, std::string const& text)
{
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f)
        throw std::ios_base::failure("cannot write '" + path + "'");
}

void write_manifest(Run& run, std::string const& out)
{
    ordered_json j;
    std::string echo = "sbmre";
    for (auto const& a : run.argv)
        echo += " " + a;
    j["command"] = echo;
    j["argv"] = run.argv;
    for (auto& [k, v] : run.info.items())
        j[k] = v;
    if (!j.contains("law"))
        j["law"] = nullptr;
    if (!j.contains("grid"))
        j["grid"] = nullptr;
    if (!j.contains("seed"))
        j["seed"] = nullptr;
    if (!j.contains("n_traj"))
        j["n_traj"] = nullptr;
    j["tolerance_overrides"] = ordered_json::object();
    j["code_version"] = SBMRE_VERSION;
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - run.start)
                            .count();
    j["wall_clock_seconds"] = secs;
    j["files"] = run.files;
    write_text(out + ".manifest.json", j.dump(2) + "\n");
}

// Replace or append "--flag value" in an argv
void set_flag(std::vector<std::string>& argv, std::string const& flag,
              std::string const& value)
{
    for (std::size_t i = 0; i + 1 < argv.size(); ++i)
    {
        if (argv[i] == flag)
        {
            argv[i + 1] = value;
            return;
        }
        if (argv[i].rfind(flag + "=", 0) == 0)
        {
            argv[i] = flag + "=" + value;
            return;
        }
    }
    if (!argv.empty() && argv.back().rfind(flag + "=", 0) == 0)
    {
        argv.back() = flag + "=" + value;
        return;
    }
    argv.push_back(flag);
    argv.push_back(value);
}

CurveSeries evaluate_curve(CurveDef const& def, ExponentLaw const* law,
                           std::map<std::string, std::string> const& given,
                           CurveOptions const& opts, std::string const& kind)
{
    std::map<std::string, std::vector<double>> values;
    std::string abscissa = def.params.empty() ? "" : def.params.front().first;
    int ranges = 0;
    for (auto const& [flag, def_text] : def.params)
    {
        auto it = given.find(flag);
        auto v = parse_values(flag, it == given.end() ? def_text : it->second);
        if (v.size() > 1)
        {
            if (ranges++ == 0)
                abscissa = flag;
        }
        values[flag] = std::move(v);
    }
    for (auto const& [flag, text] : given)
    {
        bool known = std::any_of(def.params.begin(), def.params.end(),
                                 [&](auto const& p) { return p.first == flag; });
        if (!known)
            throw UsageError("--" + flag + ": not used by " + kind + " " + def.name);
    }
    if (ranges > 1)
        throw UsageError(kind + " " + def.name + ": at most one flag may be a range");

    CurveSeries c;
    c.label = kind + " " + def.name + (law ? " law=" + law->spec() : "")
              + (abscissa.empty() ? "" : " abscissa=" + abscissa);
    for (auto const& [flag, v] : values)
    {
        if (flag != abscissa)
            c.notes.push_back(flag + ": " + format_double(v.front()));
    }
    std::set<std::string> regimes;
    std::size_t const n = abscissa.empty() ? 1 : values[abscissa].size();
    for (std::size_t i = 0; i < n; ++i)
    {
        Params p;
        for (auto const& [flag, v] : values)
            p[flag] = flag == abscissa ? v[i] : v.front();
        PointValue const pv = def.eval(law, p, opts);
        double const x = abscissa.empty() ? 0 : values[abscissa][i];
        c.points.push_back({x, pv.value, std::nullopt});
        if (!pv.regime.empty() && regimes.insert(pv.regime).second)
            c.notes.push_back("regime: " + pv.regime);
        if (!pv.warning.empty())
            c.notes.push_back("at " + format_double(x) + ": " + pv.warning);
    }
    return c;
}

std::string curve_text(CurveSeries const& c)
{
    std::ostringstream os;
    write_curve_csv(c, os);
    return os.str();
}

int run_cli(std::vector<std::string> args);

int dispatch(std::vector<std::string> const& args)
{
    CLI::App app{"Scaled Brownian motion with random exponent: simulation, "
                 "exact characteristics, asymptotics and Monte Carlo validation.",
                 "sbmre"};
    app.set_version_flag("--version", SBMRE_VERSION);
    app.require_subcommand(1);
    app.footer("Environment: SBMRE_SEED overrides the default seed (7), "
               "SBMRE_THREADS the default worker count.\nExit codes: 0 ok, 1 "
               "validation failed, 2 usage error, 3 numerical failure, 4 I/O.");

    std::string seed_text = default_seed_text();
    unsigned threads = 0;
    auto add_seed = [&](CLI::App* sc) {
        sc->add_option("--seed", seed_text,
                       "RNG seed, or 'random' (default 7, env SBMRE_SEED)");
    };
    auto add_threads = [&](CLI::App* sc) {
        sc->add_option("--threads", threads,
                       "worker cap; 0 = SBMRE_THREADS or all cores (default 0)");
    };

    // simulate
    auto* sim = app.add_subcommand("simulate", "simulate an ensemble and write CSV");
    std::string law_text, grid_text, out;
    long long n_traj = 100;
    sim->add_option("--law", law_text,
                    "degenerate:alpha=..|twopoint:a1=..,a2=..,p=..|"
                    "beta:a1=..,a2=..,gamma=..,beta=..")
        ->required();
    sim->add_option("--grid", grid_text,
                    "linear:T=..,N=..|log:tmin=..,T=..,N=..|ppd:tmin=..,T=..,ppd=..|"
                    "explicit:0,t1,..")
        ->required();
    sim->add_option("--n", n_traj, "number of trajectories (default 100)");
    add_seed(sim);
    add_threads(sim);
    sim->add_option("--out", out, "output CSV (default ensemble.csv)");

    // characteristic / asymptotic
    std::string cname, aname;
    CurveOptions copts;
    std::map<std::string, std::string> given;
    auto* chr = app.add_subcommand("characteristic", "exact formula over a grid");
    auto* asy = app.add_subcommand("asymptotic", "asymptotic formula over a grid");
    auto const& cdefs = characteristics();
    auto const& adefs = asymptotics();
    std::vector<std::string> cnames, anames;
    for (auto const& d : cdefs)
        cnames.push_back(d.name);
    for (auto const& d : adefs)
        anames.push_back(d.name);
    chr->add_option("name", cname, "one of: " + names_of(cdefs))
        ->required()
        ->check(CLI::IsMember(cnames));
    asy->add_option("name", aname, "one of: " + names_of(adefs))
        ->required()
        ->check(CLI::IsMember(anames));
    chr->footer(footer_for(cdefs));
    asy->footer(footer_for(adefs));
    for (auto* sc : {chr, asy})
    {
        sc->add_option("--law", law_text, "exponent law spec");
        sc->add_option("--out", out, "output CSV (default <name>.csv)");
    }
    std::map<std::string, std::string> flag_text;
    auto value_flag = [&](CLI::App* sc, std::string const& flag) {
        sc->add_option("--" + flag, flag_text[flag + "@" + sc->get_name()],
                       "value or range, see below");
    };
    for (auto const& f : {"x", "t", "s", "q", "tau", "T", "b"})
        value_flag(chr, f);
    for (auto const& f : {"t", "tau", "T", "alpha"})
        value_flag(asy, f);
    asy->add_option("--regime", copts.regime,
                    "auto|short|long for tp-msd and beta-msd (default auto: "
                    "short below t=1)")
        ->check(CLI::IsMember({"auto", "short", "long"}));
    asy->add_option("--order", copts.order,
                    "leading|taylor3|taylor3-printed for tp-etamsd (default leading)")
        ->check(CLI::IsMember({"leading", "taylor3", "taylor3-printed"}));

    // validate
    auto* val = app.add_subcommand("validate", "Monte Carlo vs analytic suite");
    std::string scenario = "all";
    bool quick = false;
    std::string snames;
    for (auto const& s : scenarios())
        snames += "\n  " + s.name + "  " + s.description;
    val->add_option("name", scenario, "scenario name or 'all' (default all)");
    val->add_flag("--quick", quick, "reduced trajectory counts");
    add_seed(val);
    add_threads(val);
    val->add_option("--out", out, "JSON report (default validation.json)");
    val->footer("Scenarios:" + snames);

    // replay
    auto* rep = app.add_subcommand("replay", "re-run the command in a manifest");
    std::string manifest_path, replay_out;
    rep->add_option("manifest", manifest_path, "path to a .manifest.json")
        ->required();
    rep->add_option("--out", replay_out, "override the output path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try
    {
        app.parse(rev);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    Run run;
    run.argv = args;

    if (*rep)
    {
        std::ifstream f(manifest_path);
        if (!f)
            throw std::ios_base::failure("replay: cannot read '" + manifest_path + "'");
        ordered_json j;
        try
        {
            j = ordered_json::parse(f);
        }
        catch (std::exception const& e)
        {
            throw UsageError("replay: " + std::string(e.what()));
        }
        if (!j.contains("argv") || !j["argv"].is_array())
            throw UsageError("replay: manifest has no argv array");
        auto argv = j["argv"].get<std::vector<std::string>>();
        if (argv.empty() || argv.front() == "replay")
            throw UsageError("replay: manifest argv must name a run subcommand");
        if (!replay_out.empty())
            set_flag(argv, "--out", replay_out);
        return run_cli(argv);
    }

    if (*sim || *val)
    {
        auto const seed = parse_seed(seed_text);
        set_flag(run.argv, "--seed", std::to_string(seed));
        run.info["seed"] = seed;
        if (*sim)
        {
            if (n_traj < 1)
                throw UsageError("--n: need at least one trajectory");
            auto const law = law_from(law_text);
            auto const grid = grid_from(grid_text);
            if (out.empty())
                out = "ensemble.csv";
            set_flag(run.argv, "--out", out);
            auto const ens = simulate_ensemble(law, grid,
                                               static_cast<std::size_t>(n_traj),
                                               seed, threads);
            std::ostringstream os;
            write_ensemble_csv(ens, os);
            write_text(out, os.str());
            run.files.push_back(out);
            run.info["law"] = law.spec();
            run.info["grid"] = grid->spec();
            run.info["n_traj"] = n_traj;
            write_manifest(run, out);
            std::cout << "wrote " << out << " (" << n_traj << " trajectories)\n";
            return kOk;
        }
        ValidationOptions opts;
        opts.seed = seed;
        opts.threads = threads;
        opts.quick = quick;
        if (out.empty())
            out = "validation.json";
        set_flag(run.argv, "--out", out);
        auto const results = run_validation(scenario, opts);
        write_text(out, validation_report_json(results, opts));
        run.files.push_back(out);
        run.info["scenario"] = scenario;
        run.info["quick"] = quick;
        write_manifest(run, out);
        std::cout << validation_table(results);
        bool const ok = all_passed(results);
        std::cout << (ok ? "all scenarios passed" : "validation FAILED") << '\n';
        return ok ? kOk : kFailed;
    }

    bool const is_chr = static_cast<bool>(*chr);
    auto const& defs = is_chr ? cdefs : adefs;
    std::string const& name = is_chr ? cname : aname;
    std::string const sc_name = is_chr ? "characteristic" : "asymptotic";
    auto const def = std::find_if(defs.begin(), defs.end(),
                                  [&](CurveDef const& d) { return d.name == name; });
    for (auto const& [key, text] : flag_text)
    {
        auto at = key.find('@');
        if (!text.empty() && key.substr(at + 1) == sc_name)
            given[key.substr(0, at)] = text;
    }
    std::optional<ExponentLaw> law;
    if (def->needs_law)
    {
        if (law_text.empty())
            throw UsageError("--law: required by " + sc_name + " " + name);
        law = law_from(law_text);
        run.info["law"] = law->spec();
    }
    else if (!law_text.empty())
    {
        throw UsageError("--law: not used by " + sc_name + " " + name);
    }
    if (out.empty())
        out = name + ".csv";
    set_flag(run.argv, "--out", out);
    auto const curve = evaluate_curve(*def, law ? &*law : nullptr, given, copts, sc_name);
    write_text(out, curve_text(curve));
    run.files.push_back(out);
    write_manifest(run, out);
    if (curve.points.size() == 1)
        std::cout << format_double(curve.points.front().value) << '\n';
    else
        std::cout << "wrote " << out << " (" << curve.points.size() << " rows)\n";
    return kOk;
}

int run_cli(std::vector<std::string> args)
{
    try
    {
        return dispatch(args);
    }
    catch (UsageError const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (ParameterError const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (DomainError const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (QuadratureError const& e)
    {
        std::cerr << "error: " << e.what()
                  << "\n  worst panel [" << e.worst_lo() << ", " << e.worst_hi()
                  << "] error " << e.worst_error() << ", achieved "
                  << e.achieved_error() << ", partial value " << e.value() << '\n';
        return kNumerics;
    }
    catch (NumericsError const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerics;
    }
    catch (std::ios_base::failure const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    return run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
