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

#include "isac/units.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isac {

/// Raw experiment parameters, all in linear units (watts, m^2, meters, degrees).
///
/// Default-constructed values are the reference deployment: 28 GHz carrier,
/// 64-antenna BS, 64 REs, 12 SEs, DFT codebook of 64 beams, 30 dBm transmit
/// power, -120 dBm noise, BS/user/target at 30/10/5 m and -60/0/30 degrees,
/// 7 dBsm target RCS.
struct ScenarioParams
{
    int n_bs = 64;               ///< BS antennas N
    int m_re = 64;               ///< reflecting elements M
    int m_se = 12;               ///< sensing elements M_s
    int codebook_size = 64;      ///< L
    int coherence_symbols = 1000; ///< T
    int scan_symbols = 64;       ///< tau (one symbol per beam, so normally == L)
    double carrier_hz = 28e9;
    double tx_power_w = 1.0;
    double noise_power_w = 1e-15;
    double d_bi = 30.0;
    double d_iu = 10.0;
    double d_it = 5.0;
    double zeta_bi = -60.0;
    double zeta_iu = 0.0;
    double zeta_it = 30.0;
    double rcs_sqm = 5.011872336272722; ///< 10^0.7, i.e. 7 dBsm
    double rate_threshold_bps_hz = 5.0;
    double beta_ni = 8.0 / 9.0;

    /// BS-side departure direction. It cancels under matched transmit
    /// beamforming and only matters for the full-matrix synthesis path.
    double vartheta_bi = 0.2;
    /// Beam-splitting allocation against the worst-case user offset (true)
    /// or against the true offset (false, diagnostics only).
    bool worst_case_allocation = true;
    /// Shrink the split further so the user keeps the SNR target even when
    /// the sensing group's sidelobe adds destructively (see decide_strategy).
    bool interference_guard = true;

    friend bool operator==(const ScenarioParams &, const ScenarioParams &) = default;
};

class Scenario;

struct Validation;

/// Thrown when constructing a Scenario from invalid parameters.
class ScenarioError : public std::invalid_argument
{
public:
    ScenarioError(const std::vector<std::string> &violations);
    [[nodiscard]] const std::vector<std::string> &violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Validated, immutable parameter set. Safe to share across threads.
class Scenario
{
public:
    /// Validates and throws ScenarioError listing every violation.
    static Scenario make(const ScenarioParams &p);
    static Scenario defaults() { return make(ScenarioParams{}); }

    [[nodiscard]] const ScenarioParams &params() const { return p_; }

    [[nodiscard]] int n_bs() const { return p_.n_bs; }
    [[nodiscard]] int m_re() const { return p_.m_re; }
    [[nodiscard]] int m_se() const { return p_.m_se; }
    [[nodiscard]] int codebook_size() const { return p_.codebook_size; }
    [[nodiscard]] int coherence_symbols() const { return p_.coherence_symbols; }
    [[nodiscard]] int scan_symbols() const { return p_.scan_symbols; }
    [[nodiscard]] int data_symbols() const { return p_.coherence_symbols - p_.scan_symbols; }
    [[nodiscard]] double tx_power_w() const { return p_.tx_power_w; }
    [[nodiscard]] double noise_power_w() const { return p_.noise_power_w; }
    [[nodiscard]] double wavelength() const { return kSpeedOfLight / p_.carrier_hz; }

    [[nodiscard]] SpatialDirection theta_bi() const { return theta_bi_; }
    [[nodiscard]] SpatialDirection theta_iu() const { return theta_iu_; }
    [[nodiscard]] SpatialDirection theta_it() const { return theta_it_; }
    /// theta_IU - theta_BI, unclamped.
    [[nodiscard]] SpatialDirection theta_iu_bar() const { return theta_iu_ - theta_bi_; }
    /// theta_IT - theta_BI, unclamped.
    [[nodiscard]] SpatialDirection theta_it_bar() const { return theta_it_ - theta_bi_; }

    /// Data-phase SNR equivalent to the configured rate threshold, i.e. the
    /// gamma solving ((T - tau)/T) log2(1 + gamma) = rate_threshold.
    [[nodiscard]] double snr_threshold() const;

    /// Copy with a modified parameter set (re-validated).
    [[nodiscard]] Scenario with(const ScenarioParams &p) const { return make(p); }

private:
    explicit Scenario(const ScenarioParams &p);

    ScenarioParams p_;
    SpatialDirection theta_bi_;
    SpatialDirection theta_iu_;
    SpatialDirection theta_it_;

    friend Validation validate_scenario(const ScenarioParams &p);
};

struct Validation
{
    std::optional<Scenario> scenario;
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks every invariant individually; never throws.
Validation validate_scenario(const ScenarioParams &p);

} // namespace isac
