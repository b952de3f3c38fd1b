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

#include "isac/array.hpp"
#include "isac/scenario.hpp"

namespace isac {

/// Complex LoS path gains.
struct PathGains
{
    cplx alpha_g; ///< BS -> REs, lambda / (4 pi d_BI) e^{j 2 pi d_BI / lambda}
    cplx alpha_h; ///< REs -> user, lambda / (4 pi d_IU) e^{j 2 pi d_IU / lambda}
    cplx alpha_s; ///< REs -> target -> SEs, sqrt(lambda^2 kappa / (64 pi^3 d_IT^4)) e^{j 4 pi d_IT / lambda}
};

PathGains path_gains(const Scenario &s);

/// Rank-one LoS channel blocks.
struct ChannelSet
{
    CMatrix g;   ///< M x N, BS -> REs
    CVector h_u; ///< M, REs -> user
    CMatrix g_s; ///< M_s x N, BS -> SEs
    CMatrix h_t; ///< M_s x M, REs -> target -> SEs
    CVector w;   ///< N, matched transmit beam a_b(vartheta_BI) / sqrt(N)
};

ChannelSet assemble_channels(const Scenario &s, const PathGains &gains);

/// rho_t = P_t |alpha_g|^2 |alpha_s|^2 / sigma^2.
double target_snr(const Scenario &s, const PathGains &gains);

/// G_ch = N P_t |alpha_g|^2 |alpha_h|^2 / sigma^2 (user SNR per unit IRS gain^2).
double channel_gain(const Scenario &s, const PathGains &gains);

/// Received signals after the BS dimension has been collapsed by the
/// matched transmit beam (unit training/data symbol). This is the fast
/// path used in simulation; the *_full functions below are its oracle.
struct LinkModel
{
    double amplitude = 0.0; ///< sqrt(N P_t)
    PathGains gains;
    CVector user_dir;  ///< a_r(theta_IU - theta_BI)
    CVector q;         ///< a_r(theta_IT - theta_BI)
    CVector se_target; ///< a_s(theta_IT)
    CVector se_bs;     ///< a_s(theta_BI)

    /// Noiseless user sample for reflection phi.
    [[nodiscard]] cplx user(const CVector &phi) const;
    /// Noiseless SE snapshot (direct BS term included) for reflection phi.
    [[nodiscard]] CVector sensing(const CVector &phi) const;
    /// Target echo only, before cancellation: amp alpha_g alpha_s a_s(theta_IT) q^H phi.
    [[nodiscard]] CVector echo(const CVector &phi) const;
};

LinkModel reduced_link(const Scenario &s, const PathGains &gains);

/// sqrt(P_t) h_u^H diag(phi) G w.
cplx user_signal_full(const Scenario &s, const ChannelSet &ch, const CVector &phi);
/// sqrt(P_t) (H_t diag(phi) G + G_s) w.
CVector sensing_signal_full(const Scenario &s, const ChannelSet &ch, const CVector &phi);

} // namespace isac
