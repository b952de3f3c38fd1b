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

#include "isac/beam_scanning.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

Codebook dft_codebook(int m, int l)
{
    if (m < 1 || l < m)
        throw std::invalid_argument("dft codebook: need L >= M >= 1");
    Codebook cb;
    cb.columns.resize(m, l);
    cb.directions.resize(l);
    for (int i = 0; i < l; ++i) {
        const double eta = -1.0 + (2.0 * (i + 1) - 1.0) / l;
        cb.directions[i] = eta;
        cb.columns.col(i) = steering(m, {eta});
    }
    return cb;
}

int nearest_beam(const Codebook &cb, double theta)
{
    int best = 0;
    double best_d = 3.0;
    for (int i = 0; i < cb.size(); ++i) {
        const double d = std::abs(wrap_direction(theta - cb.directions[i]));
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

ScanRecord simulate_phase1(const Scenario &s, const PathGains &gains, const Codebook &cb, Rng &rng,
                           const SimOptions &opts)
{
    const int l = cb.size();
    if (s.scan_symbols() != l)
        throw std::invalid_argument("phase 1 simulation needs one symbol per beam (scan_symbols == codebook_size)");
    if (cb.elements() != s.m_re())
        throw std::invalid_argument("codebook element count does not match m_re");

    const double sigma2 = opts.noiseless ? 0.0 : s.noise_power_w();
    ScanRecord rec;
    rec.user_powers.resize(l);
    rec.se_raw.resize(s.m_se(), l);

    if (opts.path == SynthesisPath::kFull) {
        const ChannelSet ch = assemble_channels(s, gains);
        for (int t = 0; t < l; ++t) {
            const CVector phi = cb.columns.col(t);
            rec.user_powers[t] = std::norm(user_signal_full(s, ch, phi) + rng.complex_normal(sigma2));
        }
        const CMatrix noise = rng.complex_normal(s.m_se(), l, sigma2);
        for (int t = 0; t < l; ++t)
            rec.se_raw.col(t) = sensing_signal_full(s, ch, cb.columns.col(t)) + noise.col(t);
    } else {
        const LinkModel link = reduced_link(s, gains);
        const cplx cu = link.amplitude * gains.alpha_g * std::conj(gains.alpha_h);
        const Eigen::RowVectorXcd user_row = cu * (link.user_dir.adjoint() * cb.columns);
        for (int t = 0; t < l; ++t)
            rec.user_powers[t] = std::norm(user_row[t] + rng.complex_normal(sigma2));

        const cplx ce = link.amplitude * gains.alpha_g * gains.alpha_s;
        const Eigen::RowVectorXcd qx = link.q.adjoint() * cb.columns; // q^H phi[t]
        rec.se_raw = (ce * link.se_target) * qx;
        rec.se_raw.colwise() += (link.amplitude * gains.alpha_g) * link.se_bs;
        rec.se_raw += rng.complex_normal(s.m_se(), l, sigma2);
    }

    const CancellationProjector proj(s.m_se(), s.theta_bi());
    rec.se_echo = proj.apply(rec.se_raw);

    for (int t = 1; t < l; ++t)
        if (rec.user_powers[t] > rec.user_powers[rec.best_index])
            rec.best_index = t;

    const double g_ch = channel_gain(s, gains);
    const double noise = s.noise_power_w();
    rec.best_snr = std::max(rec.user_powers[rec.best_index] / noise - 1.0, 0.0);
    const double k = beam_kernel(s.m_re(), wrap_direction(s.theta_iu_bar().value - cb.directions[rec.best_index]));
    rec.best_snr_genie = g_ch * k * k;
    rec.nearest_index = nearest_beam(cb, s.theta_iu_bar().value);
    rec.sensing_valid = !undetectable_region(s).contains(s.theta_it().value);
    return rec;
}

ScanRecord simulate_phase1(const Scenario &s, const PathGains &gains, Rng &rng, const SimOptions &opts)
{
    return simulate_phase1(s, gains, dft_codebook(s.m_re(), s.codebook_size()), rng, opts);
}

double achievable_rate(double data_fraction, double snr) { return data_fraction * std::log2(1.0 + snr); }

double achievable_rate(const Scenario &s, double delta_u)
{
    const double max_offset = 1.0 / s.codebook_size();
    if (!(delta_u >= 0.0 && delta_u <= max_offset * (1.0 + 1e-12)))
        throw std::domain_error("achievable_rate: delta_u must lie in [0, 1/L]");
    const double k = beam_kernel(s.m_re(), delta_u);
    const double frac = static_cast<double>(s.data_symbols()) / s.coherence_symbols();
    return achievable_rate(frac, channel_gain(s, path_gains(s)) * k * k);
}

double user_beam_offset(const Scenario &s)
{
    const Codebook cb = dft_codebook(s.m_re(), s.codebook_size());
    const int i = nearest_beam(cb, s.theta_iu_bar().value);
    return std::abs(wrap_direction(s.theta_iu_bar().value - cb.directions[i]));
}

DirectionRegion undetectable_region(const Scenario &s)
{
    return DirectionRegion::band(s.theta_bi().value, 2.0 / s.m_se());
}

} // namespace isac
