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

#include "isac/channel.hpp"

#include <cmath>

namespace isac {

PathGains path_gains(const Scenario &s)
{
    const auto &p = s.params();
    const double lambda = s.wavelength();
    PathGains g;
    g.alpha_g = std::polar(lambda / (4.0 * kPi * p.d_bi), 2.0 * kPi * p.d_bi / lambda);
    g.alpha_h = std::polar(lambda / (4.0 * kPi * p.d_iu), 2.0 * kPi * p.d_iu / lambda);
    const double d2 = p.d_it * p.d_it;
    const double mag = std::sqrt(lambda * lambda * p.rcs_sqm / (64.0 * kPi * kPi * kPi * d2 * d2));
    g.alpha_s = std::polar(mag, 4.0 * kPi * p.d_it / lambda);
    return g;
}

ChannelSet assemble_channels(const Scenario &s, const PathGains &gains)
{
    const SpatialDirection vartheta{s.params().vartheta_bi};
    const CVector a_b = steering(s.n_bs(), vartheta);
    const CVector ar_bi = steering(s.m_re(), s.theta_bi());
    const CVector as_bi = steering(s.m_se(), s.theta_bi());

    ChannelSet ch;
    ch.g = gains.alpha_g * ar_bi * a_b.adjoint();
    ch.h_u = gains.alpha_h * steering(s.m_re(), s.theta_iu());
    ch.g_s = gains.alpha_g * as_bi * a_b.adjoint();
    ch.h_t = gains.alpha_s * steering(s.m_se(), s.theta_it()) * steering(s.m_re(), s.theta_it()).adjoint();
    ch.w = a_b / std::sqrt(static_cast<double>(s.n_bs()));
    return ch;
}

double target_snr(const Scenario &s, const PathGains &gains)
{
    return s.tx_power_w() * std::norm(gains.alpha_g) * std::norm(gains.alpha_s) / s.noise_power_w();
}

double channel_gain(const Scenario &s, const PathGains &gains)
{
    return s.n_bs() * s.tx_power_w() * std::norm(gains.alpha_g) * std::norm(gains.alpha_h) / s.noise_power_w();
}

cplx LinkModel::user(const CVector &phi) const
{
    // h_u^H carries conj(alpha_h)
    return amplitude * gains.alpha_g * std::conj(gains.alpha_h) * user_dir.dot(phi);
}

CVector LinkModel::echo(const CVector &phi) const
{
    return (amplitude * gains.alpha_g * gains.alpha_s * q.dot(phi)) * se_target;
}

CVector LinkModel::sensing(const CVector &phi) const
{
    CVector y = echo(phi);
    y += (amplitude * gains.alpha_g) * se_bs;
    return y;
}

LinkModel reduced_link(const Scenario &s, const PathGains &gains)
{
    LinkModel m;
    m.amplitude = std::sqrt(s.n_bs() * s.tx_power_w());
    m.gains = gains;
    m.user_dir = steering(s.m_re(), s.theta_iu_bar());
    m.q = steering(s.m_re(), s.theta_it_bar());
    m.se_target = steering(s.m_se(), s.theta_it());
    m.se_bs = steering(s.m_se(), s.theta_bi());
    return m;
}

cplx user_signal_full(const Scenario &s, const ChannelSet &ch, const CVector &phi)
{
    const CVector x = ch.g * ch.w;
    return std::sqrt(s.tx_power_w()) * ch.h_u.dot(phi.cwiseProduct(x));
}

CVector sensing_signal_full(const Scenario &s, const ChannelSet &ch, const CVector &phi)
{
    const CMatrix cascade = ch.h_t * phi.asDiagonal() * ch.g + ch.g_s;
    return std::sqrt(s.tx_power_w()) * (cascade * ch.w);
}

} // namespace isac
