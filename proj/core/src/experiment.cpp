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

#include "isac/experiment.hpp"

#include "isac/analytics.hpp"
#include "isac/beam_scanning.hpp"
#include "isac/estimation.hpp"
#include "isac/strategy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace isac {
namespace {

// Neumaier-compensated sum, evaluated in index order.
double stable_sum(const std::vector<double> &v)
{
    double sum = 0.0;
    double comp = 0.0;
    for (double x : v) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

std::vector<double> range(double lo, double hi, double step)
{
    std::vector<double> v;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int i = 0; i <= n; ++i)
        v.push_back(lo + i * step);
    return v;
}

void apply_sweep_value(SweepPoint &p, const std::string &name, double v)
{
    auto &q = p.params;
    const auto as_int = [&] { return static_cast<int>(std::lround(v)); };
    if (name == "tx_power_dbm") {
        q.tx_power_w = dbm_to_watts(v);
    } else if (name == "zeta_it") {
        q.zeta_it = v;
    } else if (name == "zeta_iu") {
        q.zeta_iu = v;
    } else if (name == "m_e") {
        p.m_e = as_int();
    } else if (name == "scan_ratio") {
        q.codebook_size = static_cast<int>(std::lround(v * q.coherence_symbols));
        q.scan_symbols = q.codebook_size;
    } else if (name == "codebook_size") {
        q.codebook_size = as_int();
        q.scan_symbols = q.codebook_size;
    } else if (name == "m_se") {
        q.m_se = as_int();
    } else if (name == "m_re") {
        q.m_re = as_int();
    } else if (name == "n_bs") {
        q.n_bs = as_int();
    } else if (name == "d_it") {
        q.d_it = v;
    } else {
        throw std::invalid_argument("unknown sweep parameter: " + name);
    }
}

struct TrialOutcome
{
    double se = 0.0;
    double se_deg = 0.0;
    double rate = 0.0;
    StrategyKind kind = StrategyKind::kCommunicationOnly;
};

// Everything a trial needs that depends only on the sweep point.
struct PointContext
{
    Scenario s;
    PathGains gains;
    Codebook cb;
    CMatrix w1;
    int m_e;

    PointContext(const SweepPoint &p)
        : s(Scenario::make(p.params)),
          gains(path_gains(s)),
          cb(dft_codebook(s.m_re(), s.codebook_size())),
          w1(cb.columns * cb.columns.adjoint()),
          m_e(p.m_e)
    {
        if (m_e < 0 || m_e > s.m_re())
            throw std::invalid_argument("m_e must lie in [0, m_re]");
    }
};

StrategyDecision choose(const ExperimentSpec &spec, const PointContext &pc, double theta_hat, double eta, double gamma_ell)
{
    StrategyDecision d = decide_strategy(theta_hat, eta, gamma_ell, pc.s);
    switch (spec.strategy) {
    case StrategyMode::kAuto:
        break;
    case StrategyMode::kSingleBeam:
        d.kind = StrategyKind::kSingleBeam;
        d.m_e = 0;
        break;
    case StrategyMode::kBeamSplit:
        d.kind = StrategyKind::kBeamSplit;
        d.m_e = pc.m_e;
        break;
    case StrategyMode::kCommunicationOnly:
        d.kind = StrategyKind::kCommunicationOnly;
        d.m_e = 0;
        break;
    }
    return d;
}

TrialOutcome run_trial(const ExperimentSpec &spec, const PointContext &pc, std::uint64_t label, std::size_t point,
                       std::size_t trial)
{
    const Scenario &s = pc.s;
    Rng r1(StreamKey{spec.seed, label, point, trial, 1});
    const ScanRecord rec = simulate_phase1(s, pc.gains, pc.cb, r1);
    const CMatrix z1 = rec.se_echo * pc.cb.columns.adjoint();
    const EstimationResult e1 = MleProblem::from_statistics(s, z1, pc.w1).solve();

    const double eta = pc.cb.directions[rec.best_index];
    const StrategyDecision d = choose(spec, pc, e1.theta_hat.value, eta, rec.best_snr);
    const CVector phi = phase2_reflection(d, s.m_re());

    TrialOutcome out;
    out.kind = d.kind;
    double theta_hat = e1.theta_hat.value;
    if (spec.estimator == EstimatorKind::kWhole) {
        Rng r2(StreamKey{spec.seed, label, point, trial, 2});
        const Phase2Outcome p2 = simulate_phase2(s, pc.gains, phi, r2);
        // X2 = phi s^T, so Y2 X2^H = (Y2 s^H) phi^H and X2 X2^H = |s|^2 phi phi^H
        const CVector ys = p2.y2 * p2.symbols.adjoint();
        CMatrix z = z1 + ys * phi.adjoint();
        CMatrix w = pc.w1 + p2.symbols.squaredNorm() * (phi * phi.adjoint());
        theta_hat = MleProblem::from_statistics(s, std::move(z), std::move(w)).solve().theta_hat.value;
        out.rate = p2.user_rate;
    } else {
        const CVector dir = steering(s.m_re(), s.theta_iu_bar());
        const double snr = channel_gain(s, pc.gains) * std::norm(dir.dot(phi));
        out.rate = achievable_rate(static_cast<double>(s.data_symbols()) / s.coherence_symbols(), snr);
    }
    const double err = theta_hat - s.theta_it().value;
    out.se = err * err;
    const double deg = rad_to_deg(std::asin(std::clamp(theta_hat, -1.0, 1.0))) - s.params().zeta_it;
    out.se_deg = deg * deg;
    return out;
}

// Analytic columns: functions of the scenario alone, using the genie view
// (true target direction, beam nearest the user, noiseless gamma_l).
void fill_reference(const ExperimentSpec &spec, const PointContext &pc, SummaryRow &row)
{
    const Scenario &s = pc.s;
    row.crb_phase1 = crb_phase1_closed(s);
    row.p_no_outlier = no_outlier_prob(s);
    row.predicted_mse = mse_predict(row.p_no_outlier, row.crb_phase1);

    const int m = s.m_re();
    const double eta = pc.cb.directions[nearest_beam(pc.cb, s.theta_iu_bar().value)];
    const double delta_u = std::abs(wrap_direction(s.theta_iu_bar().value - eta));
    const double g_ch = channel_gain(s, pc.gains);
    const double k_full = beam_kernel(m, delta_u);
    const double gamma_ell = g_ch * k_full * k_full;

    const StrategyDecision d = choose(spec, pc, s.theta_it().value, eta, gamma_ell);
    const CVector phi = phase2_reflection(d, m);
    row.crb_whole = crb_whole(s, phi, s.data_symbols()).crb_w;

    const int users = d.kind == StrategyKind::kBeamSplit ? m - d.m_e : m;
    const double k = beam_kernel(users, delta_u);
    row.rate_reference = achievable_rate(static_cast<double>(s.data_symbols()) / s.coherence_symbols(), g_ch * k * k);
}

std::vector<SummaryRow> run_impl(const ExperimentSpec &spec, std::vector<TrialErrors> *per_point)
{
    if (spec.trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    const auto points = expand_sweep(spec);
    std::vector<PointContext> ctx;
    ctx.reserve(points.size());
    for (const auto &p : points)
        ctx.emplace_back(p);

    const std::uint64_t label = label_hash(spec.label());
    const std::size_t trials = static_cast<std::size_t>(spec.trials);
    const std::size_t jobs = points.size() * trials;
    std::vector<TrialOutcome> results(jobs);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    const auto worker = [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs)
                return;
            try {
                results[j] = run_trial(spec, ctx[j / trials], label, j / trials, j % trials);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure)
                    failure = std::current_exception();
                next = jobs;
                return;
            }
        }
    };
    const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(simulation_threads(), jobs));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n_threads; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    std::vector<SummaryRow> rows;
    if (per_point)
        per_point->assign(points.size(), {});
    for (std::size_t p = 0; p < points.size(); ++p) {
        std::vector<double> se(trials), se_deg(trials), rate(trials);
        int split = 0;
        int single = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto &o = results[p * trials + t];
            se[t] = o.se;
            se_deg[t] = o.se_deg;
            rate[t] = o.rate;
            split += o.kind == StrategyKind::kBeamSplit;
            single += o.kind == StrategyKind::kSingleBeam;
        }
        const double n = static_cast<double>(trials);
        SummaryRow row;
        row.sweep = points[p].values;
        row.trials = spec.trials;
        row.empirical_mse = stable_sum(se) / n;
        if (trials > 1) {
            std::vector<double> dev(trials);
            for (std::size_t t = 0; t < trials; ++t)
                dev[t] = (se[t] - row.empirical_mse) * (se[t] - row.empirical_mse);
            row.mse_stderr = std::sqrt(stable_sum(dev) / (n - 1.0) / n);
        }
        row.empirical_mse_deg2 = stable_sum(se_deg) / n;
        row.rate_mean = stable_sum(rate) / n;
        row.split_fraction = split / n;
        row.single_fraction = single / n;
        fill_reference(spec, ctx[p], row);
        rows.push_back(std::move(row));
        if (per_point) {
            (*per_point)[p].squared_error = std::move(se);
            (*per_point)[p].rate = std::move(rate);
        }
    }
    return rows;
}

} // namespace

const std::vector<std::string> &sweep_parameters()
{
    static const std::vector<std::string> names = {"tx_power_dbm", "zeta_it", "zeta_iu", "m_e",  "scan_ratio",
                                                   "codebook_size", "m_se",  "m_re",    "n_bs", "d_it"};
    return names;
}

const std::vector<std::string> &figure_ids()
{
    static const std::vector<std::string> ids = {"fig4", "fig5",  "fig6",  "fig8",  "fig9",
                                                 "fig10", "fig11", "fig12", "fig13", "fig14"};
    return ids;
}

ExperimentSpec figure_spec(const std::string &figure_id, int trials, std::uint64_t seed)
{
    ExperimentSpec spec;
    spec.figure_id = figure_id;
    spec.trials = trials;
    spec.seed = seed;
    const auto powers = range(-30.0, 30.0, 5.0);
    const auto target_angles = range(-40.0, 70.0, 5.0);

    if (figure_id == "fig4") {
        spec.axes = {{"tx_power_dbm", powers}};
    } else if (figure_id == "fig5") {
        spec.base.tx_power_w = dbm_to_watts(20.0);
        spec.axes = {{"scan_ratio", {0.064, 0.08, 0.1, 0.128, 0.16, 0.2, 0.25, 0.3}}};
    } else if (figure_id == "fig6") {
        spec.base.zeta_it = 0.0;
        spec.base.zeta_iu = 0.0;
        spec.estimator = EstimatorKind::kWhole;
        spec.strategy = StrategyMode::kSingleBeam;
        spec.axes = {{"tx_power_dbm", powers}};
    } else if (figure_id == "fig8") {
        spec.estimator = EstimatorKind::kWhole;
        spec.strategy = StrategyMode::kBeamSplit;
        spec.forced_m_e = 36;
        spec.axes = {{"zeta_it", range(-85.0, 85.0, 5.0)}};
    } else if (figure_id == "fig9" || figure_id == "fig10") {
        spec.base.zeta_it = figure_id == "fig9" ? 30.0 : 3.0;
        spec.estimator = EstimatorKind::kWhole;
        spec.strategy = StrategyMode::kBeamSplit;
        spec.axes = {{"m_e", range(0.0, 60.0, 4.0)}};
    } else if (figure_id == "fig11" || figure_id == "fig12") {
        spec.estimator = EstimatorKind::kWhole;
        spec.strategy = figure_id == "fig11" ? StrategyMode::kSingleBeam : StrategyMode::kAuto;
        spec.axes = {{"zeta_it", target_angles}};
    } else if (figure_id == "fig13" || figure_id == "fig14") {
        spec.estimator = EstimatorKind::kWhole;
        spec.strategy = figure_id == "fig13" ? StrategyMode::kSingleBeam : StrategyMode::kAuto;
        spec.axes = {{"zeta_it", range(-40.0, 70.0, 10.0)}, {"tx_power_dbm", range(-10.0, 30.0, 10.0)}};
    } else {
        throw std::invalid_argument("unknown figure id: " + figure_id);
    }
    return spec;
}

std::vector<SweepPoint> expand_sweep(const ExperimentSpec &spec)
{
    if (spec.axes.empty() || spec.axes.size() > 2)
        throw std::invalid_argument("a sweep needs one or two axes");
    for (const auto &a : spec.axes) {
        if (std::find(sweep_parameters().begin(), sweep_parameters().end(), a.param) == sweep_parameters().end())
            throw std::invalid_argument("unknown sweep parameter: " + a.param);
        if (a.values.empty())
            throw std::invalid_argument("sweep axis '" + a.param + "' has no values");
    }

    std::vector<SweepPoint> out;
    const auto make = [&](std::vector<std::pair<const SweepAxis *, double>> picks) {
        SweepPoint p;
        p.params = spec.base;
        p.m_e = spec.forced_m_e;
        for (const auto &[axis, v] : picks) {
            apply_sweep_value(p, axis->param, v);
            p.values.push_back(v);
        }
        auto v = validate_scenario(p.params);
        if (!v.ok())
            throw ScenarioError(v.violations);
        out.push_back(std::move(p));
    };
    if (spec.axes.size() == 1) {
        for (double v : spec.axes[0].values)
            make({{&spec.axes[0], v}});
    } else {
        for (double v0 : spec.axes[0].values)
            for (double v1 : spec.axes[1].values)
                make({{&spec.axes[0], v0}, {&spec.axes[1], v1}});
    }
    return out;
}

std::vector<SummaryRow> run_monte_carlo(const ExperimentSpec &spec) { return run_impl(spec, nullptr); }

std::vector<SummaryRow> run_monte_carlo(const ExperimentSpec &spec, std::vector<TrialErrors> &per_point)
{
    return run_impl(spec, &per_point);
}

std::vector<std::vector<double>> paired_compare(const ExperimentSpec &a, const ExperimentSpec &b)
{
    if (a.trials != b.trials)
        throw std::invalid_argument("paired comparison needs equal trial counts");
    const auto pa = expand_sweep(a);
    const auto pb = expand_sweep(b);
    if (pa.size() != pb.size())
        throw std::invalid_argument("paired comparison needs identical sweeps");
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (pa[i].values != pb[i].values || !(pa[i].params == pb[i].params))
            throw std::invalid_argument("paired comparison needs identical sweeps");

    ExperimentSpec bb = b;
    bb.stream_label = a.label();
    bb.seed = a.seed;
    std::vector<TrialErrors> ea;
    std::vector<TrialErrors> eb;
    run_monte_carlo(a, ea);
    run_monte_carlo(bb, eb);

    std::vector<std::vector<double>> deltas(ea.size());
    for (std::size_t p = 0; p < ea.size(); ++p) {
        deltas[p].resize(ea[p].squared_error.size());
        for (std::size_t t = 0; t < deltas[p].size(); ++t)
            deltas[p][t] = ea[p].squared_error[t] - eb[p].squared_error[t];
    }
    return deltas;
}

unsigned simulation_threads()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("ISAC_SIM_THREADS")) {
        char *end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1)
            n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

} // namespace isac
