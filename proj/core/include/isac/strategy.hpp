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

// Phase II: after the sweep the IRS controller knows the best beam eta_l, the
// user's measured SNR gamma_l and a first target estimate. It then keeps the
// best beam (which may also light the target), splits the REs between user
// and target, or serves the user only.

#include "isac/channel.hpp"
#include "isac/regions.hpp"
#include "isac/rng.hpp"

#include <stdexcept>
#include <string_view>

namespace isac {

enum class StrategyKind
{
    kSingleBeam,
    kBeamSplit,
    kCommunicationOnly,
};

std::string_view to_string(StrategyKind k);

/// Regions of theta_IT, all relative to the chosen beam.
struct StrategyRegions
{
    DirectionRegion single_beam; ///< |theta - theta_BI - eta_l| < 2/M: the best beam reaches the target
    DirectionRegion split;       ///< |theta - theta_BI - eta_l| > 11/M and outside `undetectable`
    DirectionRegion undetectable; ///< |theta - theta_BI| < 2/M_s: echo removed with the direct path
};

StrategyRegions strategy_regions(const Scenario &s, double eta_ell);

struct StrategyDecision
{
    StrategyKind kind = StrategyKind::kCommunicationOnly;
    int m_e = 0;
    StrategyRegions regions;
    double delta_ut = 0.0;  ///< |wrap(theta_hat - theta_BI - eta_l)|
    double eta_ell = 0.0;
    double theta_hat = 0.0; ///< Phase-I estimate the decision was based on
    double target_bar = 0.0; ///< theta_hat - theta_BI, the direction the sensing REs steer to
    double gamma = 0.0;     ///< SNR threshold the allocation had to meet
};

/// Pure function of its inputs. Element allocation follows the scenario's
/// worst_case_allocation flag; the genie mode reads the true user offset.
/// With interference_guard set, m_e is further capped by guarded_allocation().
StrategyDecision decide_strategy(double theta_hat, double eta_ell, double gamma_ell, const Scenario &s);

/// phi[k] = e^{j pi (theta_t k - eta c)} for k < m_e and a_r(eta)[k] otherwise,
/// c = (M-1)/2: the first m_e REs point at theta_t, the rest keep the best
/// beam's progression. m_e = 0 reproduces a_r(eta) exactly.
CVector split_reflection(int m_e, double eta, double theta_t, int m);

/// |M - M_e + rho D_{M_e}(delta)|, rho = e^{j pi delta (M_e - 1)/2}: the gain
/// toward a user on the beam axis when the target group is offset by delta.
double split_gain(int m, int m_e, double delta_ut);

/// (gamma_l / M^2) sin^2(pi (M - M_e) / 2L) / sin^2(pi / 2L).
double worst_case_snr(double gamma_ell, int m, int m_e, int l);

class InsufficientMargin : public std::domain_error
{
public:
    InsufficientMargin() : std::domain_error("insufficient margin: gamma exceeds gamma_l") {}
};

enum class AllocationRule
{
    kWorstCase,   ///< floor(M - (2L/pi) asin(M sqrt(gamma/gamma_l) sin(pi/2L)))
    kApproximate, ///< floor(M (1 - sqrt(gamma/gamma_l)))
};

/// REs that can be lent to sensing while the user keeps gamma. Result in [0, M-1].
/// Throws InsufficientMargin if gamma > gamma_l.
int element_allocation(double gamma_ell, double gamma, int m, int l, AllocationRule rule = AllocationRule::kWorstCase);

/// Largest m_e <= m_e_max such that the worst-case user amplitude, with the
/// sensing group's leakage subtracted, still meets gamma:
///
///   (gamma_l / M^2) (kernel(M - m_e, 1/L) - B)^2 >= gamma,
///   B = min(m_e, 1 / sin(pi (delta_ut - 1/L) / 2)).
///
/// delta_ut - 1/L is the smallest user/target offset consistent with the
/// best beam. Returns 0 if no split satisfies this.
int guarded_allocation(int m_e_max, double gamma_ell, double gamma, int m, int l, double delta_ut);

/// Allocation against the true user offset delta_u (diagnostics).
int element_allocation_genie(double gamma_ell, double gamma, int m, double delta_u);

/// Reflection used in Phase II for a decision.
CVector phase2_reflection(const StrategyDecision &d, int m);

struct Phase2Outcome
{
    CMatrix y2;            ///< M_s x tau2 cancelled echoes
    CMatrix x2;            ///< M x tau2, column t = s[t] phi
    Eigen::RowVectorXcd symbols; ///< s[t], unit modulus
    CVector phi;
    double user_snr = 0.0; ///< G_ch |a_r^H(theta_IU - theta_BI) phi|^2
    double user_rate = 0.0; ///< ((T - tau)/T) log2(1 + user_snr)
};

struct Phase2Options
{
    bool noiseless = false;
};

/// Transmits T - tau unit-modulus random-phase data symbols through phi.
Phase2Outcome simulate_phase2(const Scenario &s, const PathGains &gains, const CVector &phi, Rng &rng,
                              const Phase2Options &opts = {});

} // namespace isac
