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

#pragma once

// Monte-Carlo campaigns over one- or two-dimensional parameter sweeps.
//
// Every trial draws from its own stream keyed by (seed, stream label, sweep
// index, trial index, phase), so results do not depend on thread count or
// execution order, and two specs sharing a label see identical noise.

#include "isac/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isac {

enum class EstimatorKind
{
    kPhase1, ///< Phase-I echoes only
    kWhole,  ///< Phase I + Phase II echoes
};

enum class StrategyMode
{
    kAuto,              ///< decide_strategy() on the Phase-I outcome
    kSingleBeam,        ///< always keep the best beam
    kBeamSplit,         ///< always split with the forced m_e
    kCommunicationOnly, ///< best beam, decision recorded as communication-only
};

struct SweepAxis
{
    std::string param;
    std::vector<double> values;
};

/// Recognized sweep parameters.
const std::vector<std::string> &sweep_parameters();

struct ExperimentSpec
{
    std::string figure_id = "custom";
    /// Stream label; empty means figure_id. Two specs with equal labels and
    /// seeds draw identical noise.
    std::string stream_label;
    ScenarioParams base;
    std::vector<SweepAxis> axes; ///< one axis, or two for heatmaps (outer x inner)
    int trials = 200;
    std::uint64_t seed = 42;
    EstimatorKind estimator = EstimatorKind::kPhase1;
    StrategyMode strategy = StrategyMode::kCommunicationOnly;
    int forced_m_e = 0; ///< REs for sensing under kBeamSplit (overridden by an m_e sweep)

    [[nodiscard]] std::string label() const { return stream_label.empty() ? figure_id : stream_label; }
};

/// Throws std::invalid_argument for an unknown figure id.
ExperimentSpec figure_spec(const std::string &figure_id, int trials = 200, std::uint64_t seed = 42);
const std::vector<std::string> &figure_ids();

struct SummaryRow
{
    std::vector<double> sweep; ///< one value per axis
    double empirical_mse = 0.0;
    double mse_stderr = 0.0;
    double predicted_mse = 0.0;
    double crb_phase1 = 0.0;
    double crb_whole = 0.0;
    double rate_mean = 0.0;
    double rate_reference = 0.0;
    double p_no_outlier = 0.0;
    int trials = 0;

    // Carried for diagnostics; not part of the emitted tables.
    double empirical_mse_deg2 = 0.0; ///< physical-angle MSE
    double split_fraction = 0.0;     ///< share of trials that split the beam
    double single_fraction = 0.0;    ///< share of trials that kept the beam on the target

    friend bool operator==(const SummaryRow &, const SummaryRow &) = default;
};

/// One sweep point, resolved.
struct SweepPoint
{
    std::vector<double> values;
    ScenarioParams params;
    int m_e = 0;
};

/// Expands the axes of a spec into points; throws on unknown parameter names
/// and ScenarioError on invalid values.
std::vector<SweepPoint> expand_sweep(const ExperimentSpec &spec);

/// Per-trial squared errors of one sweep point (in trial order).
struct TrialErrors
{
    std::vector<double> squared_error;
    std::vector<double> rate;
};

std::vector<SummaryRow> run_monte_carlo(const ExperimentSpec &spec);

/// Same as run_monte_carlo but also returns the per-trial records.
std::vector<SummaryRow> run_monte_carlo(const ExperimentSpec &spec, std::vector<TrialErrors> &per_point);

/// Per-trial deltas (squared error of a minus that of b) under common random
/// numbers: b reuses a's stream label and seed. Throws std::invalid_argument
/// if the sweeps differ or trial counts differ.
std::vector<std::vector<double>> paired_compare(const ExperimentSpec &a, const ExperimentSpec &b);

/// Worker count: hardware concurrency, capped by ISAC_SIM_THREADS if set.
unsigned simulation_threads();

} // namespace isac
