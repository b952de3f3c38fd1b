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

#include <numbers>

namespace isac {

/// Speed of light used for every wavelength computation [m/s].
inline constexpr double kSpeedOfLight = 2.998e8;

inline constexpr double kPi = std::numbers::pi;

double dbm_to_watts(double x_dbm);
double watts_to_dbm(double watts);

/// Plain dB <-> linear power ratio (also used for dBsm -> m^2).
double db_to_linear(double x_db);
double linear_to_db(double x);

double deg_to_rad(double deg);
double rad_to_deg(double rad);

/// Sine-of-angle direction used by all steering vectors.
///
/// Primary directions lie in [-1, 1]. Differences of two directions
/// (e.g. theta_IT - theta_BI) are kept unclamped and may reach +-2; use
/// `principal()` to check and `wrap_direction()` (array.hpp) to fold.
struct SpatialDirection
{
    double value = 0.0;

    [[nodiscard]] bool principal() const { return value >= -1.0 && value <= 1.0; }

    /// Physical angle in degrees; only meaningful for principal directions.
    [[nodiscard]] double degrees() const;

    friend SpatialDirection operator-(SpatialDirection a, SpatialDirection b) { return {a.value - b.value}; }
    friend SpatialDirection operator+(SpatialDirection a, SpatialDirection b) { return {a.value + b.value}; }
    friend auto operator<=>(const SpatialDirection &, const SpatialDirection &) = default;
};

/// sin(zeta) for a physical angle in degrees. Throws std::domain_error for |zeta| >= 90.
SpatialDirection spatial_direction(double zeta_deg);

} // namespace isac
