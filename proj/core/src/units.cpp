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

#include "isac/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isac {

double dbm_to_watts(double x_dbm) { return std::pow(10.0, (x_dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x) { return 10.0 * std::log10(x); }

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

double SpatialDirection::degrees() const { return rad_to_deg(std::asin(value)); }

SpatialDirection spatial_direction(double zeta_deg)
{
    if (!std::isfinite(zeta_deg) || std::abs(zeta_deg) >= 90.0)
        throw std::domain_error("physical angle must lie in (-90, 90) degrees, got " + std::to_string(zeta_deg));
    return {std::sin(deg_to_rad(zeta_deg))};
}

} // namespace isac
