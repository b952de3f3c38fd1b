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

// Phase I: the REs sweep a DFT codebook, one beam per symbol, while the user
// measures received power and the SEs record the echoes.

#include "isac/channel.hpp"
#include "isac/regions.hpp"
#include "isac/rng.hpp"

#include <vector>

namespace isac {

/// L beams a_r(eta_i), eta_i = -1 + (2i - 1)/L for i = 1..L (stored 0-based).
struct Codebook
{
    CMatrix columns; ///< M x L
    std::vector<double> directions;

    [[nodiscard]] int elements() const { return static_cast<int>(columns.rows()); }
    [[nodiscard]] int size() const { return static_cast<int>(columns.cols()); }
};

/// Throws std::invalid_argument if l < m.
Codebook dft_codebook(int m, int l);

/// Index of the codebook direction closest to theta (wrapped distance, lowest index on ties).
int nearest_beam(const Codebook &cb, double theta);

enum class SynthesisPath
{
    kReduced, ///< BS dimension eliminated analytically (default)
    kFull,    ///< explicit channel matrices; test oracle
};

struct SimOptions
{
    bool noiseless = false;
    SynthesisPath path = SynthesisPath::kReduced;
};

struct ScanRecord
{
    std::vector<double> user_powers; ///< |y_u[t]|^2 per beam
    CMatrix se_raw;                  ///< M_s x L snapshots before cancellation
    CMatrix se_echo;                 ///< M_s x L after removing the BS -> SE direct term
    int best_index = 0;              ///< argmax of user_powers (0-based, lowest index on ties)
    double best_snr = 0.0;           ///< measured gamma_l = max(P / sigma^2 - 1, 0)
    double best_snr_genie = 0.0;     ///< noiseless SNR of the measured best beam
    int nearest_index = 0;           ///< beam truly closest to the user
    bool sensing_valid = true;       ///< false when the target sits in the undetectable region
};

/// Runs one beam sweep. Requires scan_symbols == codebook_size.
ScanRecord simulate_phase1(const Scenario &s, const PathGains &gains, const Codebook &cb, Rng &rng,
                           const SimOptions &opts = {});
ScanRecord simulate_phase1(const Scenario &s, const PathGains &gains, Rng &rng, const SimOptions &opts = {});

/// frac * log2(1 + snr).
double achievable_rate(double data_fraction, double snr);

/// ((T - tau)/T) log2(1 + G_ch kernel(M, delta_u)^2). Throws std::domain_error unless 0 <= delta_u <= 1/L.
double achievable_rate(const Scenario &s, double delta_u);

/// Offset of the user from its nearest codebook beam, in [0, 1/L].
double user_beam_offset(const Scenario &s);

/// { theta_IT : |theta_IT - theta_BI| < 2/M_s } (with wrap).
DirectionRegion undetectable_region(const Scenario &s);

} // namespace isac
