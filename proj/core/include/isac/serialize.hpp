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

// Flat JSON views of single-shot records, for the CLI and downstream tools.

#include "isac/analytics.hpp"
#include "isac/beam_scanning.hpp"
#include "isac/estimation.hpp"
#include "isac/strategy.hpp"

#include <string>

namespace isac {

/// Keys: rho_t, crb_phase1, crb_whole, crb_up, p_no_outlier, mse_predicted,
/// rho_ni, rho_th, rho_ni_dbm, rho_th_dbm, outlier_model_edge.
std::string to_json(const AnalyticsReport &r);

/// Complex entries as [re, im] pairs; matrices as arrays of rows.
std::string to_json(const ScanRecord &r);

std::string to_json(const EstimationResult &r);

/// Decision row: kind, m_e, delta_ut, eta_ell, theta_hat, gamma and the
/// regions as degree intervals.
std::string to_json(const StrategyDecision &d);

} // namespace isac
