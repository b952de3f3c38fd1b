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

#include "isac/strategy.hpp"

#include "isac/beam_scanning.hpp"

#include <algorithm>
#include <cmath>

namespace isac {
namespace {

constexpr double kSplitSeparation = 11.0; // in units of 1/M

} // namespace

std::string_view to_string(StrategyKind k)
{
    switch (k) {
    case StrategyKind::kSingleBeam:
        return "single-beam";
    case StrategyKind::kBeamSplit:
        return "beam-split";
    case StrategyKind::kCommunicationOnly:
        return "communication-only";
    }
    return "unknown";
}

StrategyRegions strategy_regions(const Scenario &s, double eta_ell)
{
    const double centre = s.theta_bi().value + eta_ell;
    const double m = s.m_re();
    StrategyRegions r;
    r.undetectable = undetectable_region(s);
    r.single_beam = DirectionRegion::band(centre, 2.0 / m);
    r.split = DirectionRegion::band(centre, kSplitSeparation / m).complement().minus(r.undetectable);
    return r;
}

StrategyDecision decide_strategy(double theta_hat, double eta_ell, double gamma_ell, const Scenario &s)
{
    StrategyDecision d;
    d.eta_ell = eta_ell;
    d.theta_hat = theta_hat;
    d.target_bar = theta_hat - s.theta_bi().value;
    d.gamma = s.snr_threshold();
    d.regions = strategy_regions(s, eta_ell);
    d.delta_ut = std::abs(wrap_direction(theta_hat - s.theta_bi().value - eta_ell));

    const int m = s.m_re();
    if (d.regions.undetectable.contains(theta_hat))
        return d;
    if (d.delta_ut < 2.0 / m) {
        d.kind = StrategyKind::kSingleBeam;
        return d;
    }
    if (d.delta_ut > kSplitSeparation / m && gamma_ell > d.gamma) {
        if (s.params().worst_case_allocation) {
            d.m_e = element_allocation(gamma_ell, d.gamma, m, s.codebook_size());
        } else {
            const double delta_u = std::abs(wrap_direction(s.theta_iu_bar().value - eta_ell));
            d.m_e = element_allocation_genie(gamma_ell, d.gamma, m, delta_u);
        }
        if (s.params().interference_guard)
            d.m_e = guarded_allocation(d.m_e, gamma_ell, d.gamma, m, s.codebook_size(), d.delta_ut);
        if (d.m_e > 0)
            d.kind = StrategyKind::kBeamSplit;
    }
    return d;
}

CVector split_reflection(int m_e, double eta, double theta_t, int m)
{
    if (m_e < 0 || m_e > m)
        throw std::invalid_argument("split_reflection: need 0 <= m_e <= M");
    const double c = 0.5 * (m - 1);
    CVector phi(m);
    for (int k = 0; k < m; ++k)
        phi[k] = k < m_e ? std::polar(1.0, kPi * (theta_t * k - eta * c)) : std::polar(1.0, kPi * eta * (k - c));
    return phi;
}

double split_gain(int m, int m_e, double delta_ut)
{
    if (m_e < 0 || m_e > m)
        throw std::invalid_argument("split_gain: need 0 <= m_e <= M");
    const cplx rho = std::polar(1.0, kPi * delta_ut * (m_e - 1) / 2.0);
    return std::abs(static_cast<double>(m - m_e) + rho * dirichlet(m_e, delta_ut));
}

double worst_case_snr(double gamma_ell, int m, int m_e, int l)
{
    const double num = std::sin(kPi * (m - m_e) / (2.0 * l));
    const double den = std::sin(kPi / (2.0 * l));
    return gamma_ell / (static_cast<double>(m) * m) * (num * num) / (den * den);
}

int element_allocation(double gamma_ell, double gamma, int m, int l, AllocationRule rule)
{
    if (gamma > gamma_ell)
        throw InsufficientMargin();
    const double ratio = std::sqrt(gamma / gamma_ell);
    if (rule == AllocationRule::kApproximate)
        return std::clamp(static_cast<int>(std::floor(m * (1.0 - ratio))), 0, m - 1);

    const double arg = m * ratio * std::sin(kPi / (2.0 * l));
    if (arg >= 1.0)
        return 0;
    int m_e = static_cast<int>(std::floor(m - 2.0 * l / kPi * std::asin(arg)));
    m_e = std::clamp(m_e, 0, m - 1);
    // floor() of a value that is an exact integer up to rounding can overshoot by one
    while (m_e > 0 && worst_case_snr(gamma_ell, m, m_e, l) < gamma)
        --m_e;
    return m_e;
}

int guarded_allocation(int m_e_max, double gamma_ell, double gamma, int m, int l, double delta_ut)
{
    const double sep = delta_ut - 1.0 / l;
    const double leak_cap = sep > 0.0 ? 1.0 / std::sin(kPi * std::min(sep, 1.0) / 2.0) : m;
    for (int m_e = std::min(m_e_max, m - 1); m_e > 0; --m_e) {
        const double amp = beam_kernel(m - m_e, 1.0 / l) - std::min<double>(m_e, leak_cap);
        if (amp > 0.0 && gamma_ell / (static_cast<double>(m) * m) * amp * amp >= gamma)
            return m_e;
    }
    return 0;
}

int element_allocation_genie(double gamma_ell, double gamma, int m, double delta_u)
{
    if (gamma > gamma_ell)
        throw InsufficientMargin();
    const double full = beam_kernel(m, delta_u);
    if (full <= 0.0)
        return 0;
    const double g_ch = gamma_ell / (full * full);
    for (int m_e = m - 1; m_e > 0; --m_e) {
        const double k = beam_kernel(m - m_e, delta_u);
        if (g_ch * k * k >= gamma)
            return m_e;
    }
    return 0;
}

CVector phase2_reflection(const StrategyDecision &d, int m)
{
    if (d.kind == StrategyKind::kBeamSplit)
        return split_reflection(d.m_e, d.eta_ell, d.target_bar, m);
    return steering(m, {d.eta_ell});
}

Phase2Outcome simulate_phase2(const Scenario &s, const PathGains &gains, const CVector &phi, Rng &rng,
                              const Phase2Options &opts)
{
    const int tau2 = s.data_symbols();
    if (tau2 <= 0)
        throw std::invalid_argument("phase 2 needs at least one data symbol");
    if (phi.size() != s.m_re())
        throw std::invalid_argument("reflection vector must have M entries");

    Phase2Outcome out;
    out.phi = phi;
    Eigen::RowVectorXcd sym(tau2);
    for (int t = 0; t < tau2; ++t)
        sym[t] = rng.unit_phase();
    out.x2 = phi * sym;
    out.symbols = sym;

    const LinkModel link = reduced_link(s, gains);
    const double sigma2 = opts.noiseless ? 0.0 : s.noise_power_w();
    CMatrix raw = (link.echo(phi) + link.amplitude * gains.alpha_g * link.se_bs) * sym;
    raw += rng.complex_normal(s.m_se(), tau2, sigma2);
    out.y2 = CancellationProjector(s.m_se(), s.theta_bi()).apply(raw);

    const double g = std::norm(link.user_dir.dot(phi));
    out.user_snr = channel_gain(s, gains) * g;
    out.user_rate = achievable_rate(static_cast<double>(tau2) / s.coherence_symbols(), out.user_snr);
    return out;
}

} // namespace isac
