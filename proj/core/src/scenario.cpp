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

#include "isac/scenario.hpp"

#include <cmath>
#include <sstream>

namespace isac {
namespace {

std::string join(const std::vector<std::string> &v)
{
    std::ostringstream os;
    os << "invalid scenario:";
    for (const auto &s : v)
        os << "\n  - " << s;
    return os.str();
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

bool open_angle(double deg) { return std::isfinite(deg) && std::abs(deg) < 90.0; }

} // namespace

ScenarioError::ScenarioError(const std::vector<std::string> &violations)
    : std::invalid_argument(join(violations)), violations_(violations)
{
}

Scenario::Scenario(const ScenarioParams &p)
    : p_(p),
      theta_bi_(spatial_direction(p.zeta_bi)),
      theta_iu_(spatial_direction(p.zeta_iu)),
      theta_it_(spatial_direction(p.zeta_it))
{
}

Scenario Scenario::make(const ScenarioParams &p)
{
    auto v = validate_scenario(p);
    if (!v.ok())
        throw ScenarioError(v.violations);
    return *v.scenario;
}

double Scenario::snr_threshold() const
{
    const double frac = static_cast<double>(data_symbols()) / p_.coherence_symbols;
    return std::exp2(p_.rate_threshold_bps_hz / frac) - 1.0;
}

Validation validate_scenario(const ScenarioParams &p)
{
    Validation out;
    auto &v = out.violations;

    if (p.n_bs < 1)
        v.emplace_back("n_bs: BS antenna count must be >= 1");
    if (p.m_re < 1)
        v.emplace_back("m_re: RE count must be >= 1");
    if (p.m_se < 1)
        v.emplace_back("m_se: SE count must be >= 1");
    if (p.codebook_size < p.m_re)
        v.emplace_back("codebook_size: codebook smaller than RE count (need L >= M)");
    if (p.scan_symbols <= 0)
        v.emplace_back("scan_symbols: beam scanning needs at least one symbol");
    if (p.scan_symbols >= p.coherence_symbols)
        v.emplace_back("scan_symbols: no data-transmission symbols (need tau < T)");
    if (!positive_finite(p.carrier_hz))
        v.emplace_back("carrier_hz: carrier frequency must be positive (wavelength undefined)");
    if (!positive_finite(p.tx_power_w))
        v.emplace_back("tx_power_w: transmit power must be positive");
    if (!positive_finite(p.noise_power_w))
        v.emplace_back("noise_power_w: noise power must be positive");
    if (!positive_finite(p.d_bi))
        v.emplace_back("d_bi: distance must be positive");
    if (!positive_finite(p.d_iu))
        v.emplace_back("d_iu: distance must be positive");
    if (!positive_finite(p.d_it))
        v.emplace_back("d_it: distance must be positive");
    if (!open_angle(p.zeta_bi))
        v.emplace_back("zeta_bi: angle must lie in (-90, 90) degrees");
    if (!open_angle(p.zeta_iu))
        v.emplace_back("zeta_iu: angle must lie in (-90, 90) degrees");
    if (!open_angle(p.zeta_it))
        v.emplace_back("zeta_it: angle must lie in (-90, 90) degrees");
    if (!positive_finite(p.rcs_sqm))
        v.emplace_back("rcs_sqm: radar cross section must be positive");
    if (!positive_finite(p.rate_threshold_bps_hz))
        v.emplace_back("rate_threshold_bps_hz: rate threshold must be positive");
    if (!(p.beta_ni > 0.0 && p.beta_ni < 1.0))
        v.emplace_back("beta_ni: must lie in (0, 1)");
    if (!std::isfinite(p.vartheta_bi) || std::abs(p.vartheta_bi) > 1.0)
        v.emplace_back("vartheta_bi: BS departure direction must lie in [-1, 1]");

    if (v.empty())
        out.scenario = Scenario(p);
    return out;
}

} // namespace isac
