// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The isac-irs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// isac-sim: command-line front end.
//
//   isac-sim validate  --config FILE|defaults
//   isac-sim analyze   --config FILE|defaults [--out FILE]
//   isac-sim scan      --config FILE|defaults [--seed N] [--out FILE]
//   isac-sim estimate  --config FILE|defaults [--seed N] [--whole] [--out FILE]
//   isac-sim reproduce FIG [--trials N | --full-scale] [--seed N] [--format csv|json] [--out FILE]
//   isac-sim sweep     --config FILE|defaults --param NAME --values a,b,... [--param2 NAME --values2 ...]
//
// Data goes to --out or standard output; diagnostics go to standard error.

#include "isac/analytics.hpp"
#include "isac/beam_scanning.hpp"
#include "isac/config.hpp"
#include "isac/estimation.hpp"
#include "isac/experiment.hpp"
#include "isac/results_io.hpp"
#include "isac/serialize.hpp"
#include "isac/strategy.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

using namespace isac;

namespace {

constexpr int kFullScaleTrials = 1000;

struct Options
{
    std::string config = "defaults";
    std::string out;
    std::uint64_t seed = 42;
    int trials = 200;
    bool full_scale = false;
    std::string format = "csv";
    std::string figure;
    bool whole = false;
    std::string estimator = "phase1";
    std::string strategy = "communication-only";
    std::string param;
    std::vector<double> values;
    std::string param2;
    std::vector<double> values2;
    int m_e = 0;
};

ScenarioParams load_params(const std::string &config)
{
    if (config == "defaults")
        return {};
    KeyValueConfig cfg = KeyValueConfig::load(config);
    ScenarioParams p = scenario_params_from_config(cfg);
    cfg.require_all_consumed();
    return p;
}

Scenario load_scenario(const std::string &config)
{
    return Scenario::make(load_params(config));
}

void write_text(const std::string &text, const std::string &path)
{
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f || !(f << text << '\n'))
        throw std::runtime_error("cannot write " + path);
}

void write_rows(const std::vector<SummaryRow> &rows, const Options &o)
{
    const OutputFormat fmt = parse_format(o.format);
    if (o.out.empty())
        write_results(rows, fmt, std::cout);
    else
        emit_results(rows, fmt, o.out);
}

int run_validate(const Options &o)
{
    const Validation v = validate_scenario(load_params(o.config));
    if (!v.ok()) {
        for (const auto &msg : v.violations)
            std::cerr << "invalid: " << msg << '\n';
        return 1;
    }
    std::cout << "valid\n";
    return 0;
}

int run_analyze(const Options &o)
{
    write_text(to_json(analyze(load_scenario(o.config))), o.out);
    return 0;
}

int run_scan(const Options &o)
{
    const Scenario s = load_scenario(o.config);
    Rng rng(StreamKey{o.seed, label_hash("scan"), 0, 0, 1});
    const ScanRecord rec = simulate_phase1(s, path_gains(s), rng);
    if (!rec.sensing_valid)
        std::cerr << "warning: target lies in the undetectable region\n";
    write_text(to_json(rec), o.out);
    return 0;
}

int run_estimate(const Options &o)
{
    const Scenario s = load_scenario(o.config);
    const PathGains g = path_gains(s);
    const Codebook cb = dft_codebook(s.m_re(), s.codebook_size());
    Rng r1(StreamKey{o.seed, label_hash("estimate"), 0, 0, 1});
    const ScanRecord rec = simulate_phase1(s, g, cb, r1);
    const EstimationResult first = mle_phase1(rec.se_echo, cb.columns, s);
    const StrategyDecision d = decide_strategy(first.theta_hat.value, cb.directions[rec.best_index], rec.best_snr, s);

    nlohmann::json out;
    out["phase1"] = nlohmann::json::parse(to_json(first));
    out["decision"] = nlohmann::json::parse(to_json(d));
    out["theta_it"] = s.theta_it().value;
    if (o.whole) {
        Rng r2(StreamKey{o.seed, label_hash("estimate"), 0, 0, 2});
        const Phase2Outcome p2 = simulate_phase2(s, g, phase2_reflection(d, s.m_re()), r2);
        const EstimationResult w = mle_whole(rec.se_echo, cb.columns, p2.y2, p2.x2, s);
        out["whole"] = nlohmann::json::parse(to_json(w));
        out["user_rate"] = p2.user_rate;
    }
    if (!rec.sensing_valid)
        std::cerr << "warning: target lies in the undetectable region\n";
    write_text(out.dump(2), o.out);
    return 0;
}

int trials_of(const Options &o) { return o.full_scale ? kFullScaleTrials : o.trials; }

int run_reproduce(const Options &o)
{
    ExperimentSpec spec = figure_spec(o.figure, trials_of(o), o.seed);
    if (o.config != "defaults")
        spec.base = load_params(o.config);
    std::cerr << "running " << o.figure << " with " << spec.trials << " trials per point\n";
    write_rows(run_monte_carlo(spec), o);
    return 0;
}

int run_sweep(const Options &o)
{
    static const std::map<std::string, EstimatorKind> estimators = {{"phase1", EstimatorKind::kPhase1},
                                                                    {"whole", EstimatorKind::kWhole}};
    static const std::map<std::string, StrategyMode> strategies = {
        {"auto", StrategyMode::kAuto},
        {"single-beam", StrategyMode::kSingleBeam},
        {"beam-split", StrategyMode::kBeamSplit},
        {"communication-only", StrategyMode::kCommunicationOnly}};

    ExperimentSpec spec;
    spec.figure_id = "sweep";
    spec.base = load_params(o.config);
    spec.trials = trials_of(o);
    spec.seed = o.seed;
    spec.estimator = estimators.at(o.estimator);
    spec.strategy = strategies.at(o.strategy);
    spec.forced_m_e = o.m_e;
    spec.axes = {{o.param, o.values}};
    if (!o.param2.empty())
        spec.axes.push_back({o.param2, o.values2});
    write_rows(run_monte_carlo(spec), o);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"IRS-aided ISAC simulator"};
    app.require_subcommand(1);
    Options o;

    const auto add_config = [&](CLI::App *c) {
        c->add_option("--config", o.config, "scenario file, or 'defaults'")->capture_default_str();
    };
    const auto add_out = [&](CLI::App *c) { c->add_option("--out", o.out, "output file (default: stdout)"); };
    const auto add_seed = [&](CLI::App *c) { c->add_option("--seed", o.seed, "master seed")->capture_default_str(); };
    const auto add_campaign = [&](CLI::App *c) {
        c->add_option("--trials", o.trials, "Monte-Carlo trials per point")->capture_default_str()->check(
            CLI::PositiveNumber);
        c->add_flag("--full-scale", o.full_scale, "use 1000 trials per point");
        c->add_option("--format", o.format, "csv or json")->capture_default_str()->check(
            CLI::IsMember({"csv", "json"}));
    };

    auto *validate = app.add_subcommand("validate", "check a scenario file");
    add_config(validate);
    auto *analyze_cmd = app.add_subcommand("analyze", "closed-form predictions as JSON");
    add_config(analyze_cmd);
    add_out(analyze_cmd);
    auto *scan = app.add_subcommand("scan", "one Phase-I beam sweep as JSON");
    add_config(scan);
    add_seed(scan);
    add_out(scan);
    auto *estimate = app.add_subcommand("estimate", "scan, estimate and decide once");
    add_config(estimate);
    add_seed(estimate);
    add_out(estimate);
    estimate->add_flag("--whole", o.whole, "also run Phase II and the whole-phase estimator");

    auto *reproduce = app.add_subcommand("reproduce", "desk-scale figure campaign");
    reproduce->add_option("figure", o.figure, "figure id")->required()->check(CLI::IsMember(figure_ids()));
    add_config(reproduce);
    add_seed(reproduce);
    add_out(reproduce);
    add_campaign(reproduce);

    auto *sweep = app.add_subcommand("sweep", "custom one- or two-axis campaign");
    add_config(sweep);
    add_seed(sweep);
    add_out(sweep);
    add_campaign(sweep);
    sweep->add_option("--param", o.param, "swept parameter")->required()->check(CLI::IsMember(sweep_parameters()));
    sweep->add_option("--values", o.values, "comma-separated values")->required()->delimiter(',');
    auto *p2 = sweep->add_option("--param2", o.param2, "inner swept parameter")->check(
        CLI::IsMember(sweep_parameters()));
    sweep->add_option("--values2", o.values2, "inner values")->delimiter(',')->needs(p2);
    sweep->add_option("--estimator", o.estimator, "phase1 or whole")->capture_default_str()->check(
        CLI::IsMember({"phase1", "whole"}));
    sweep->add_option("--strategy", o.strategy, "auto, single-beam, beam-split or communication-only")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "single-beam", "beam-split", "communication-only"}));
    sweep->add_option("--m-e", o.m_e, "sensing REs under beam-split")->capture_default_str();

    if (argc > 1 && argv[1][0] != '-') {
        const auto subs = app.get_subcommands([](const CLI::App *) { return true; });
        const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App *c) { return c->get_name() == argv[1]; });
        if (!known) {
            std::cerr << "unknown command: " << argv[1] << "\n" << app.help();
            return 2;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e, std::cerr, std::cerr);
        if (rc != 0)
            std::cerr << app.help();
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate)
            return run_validate(o);
        if (*analyze_cmd)
            return run_analyze(o);
        if (*scan)
            return run_scan(o);
        if (*estimate)
            return run_estimate(o);
        if (*reproduce)
            return run_reproduce(o);
        if (*sweep)
            return run_sweep(o);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
