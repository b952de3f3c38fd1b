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

#include "isac/serialize.hpp"

#include "json.hpp"

namespace isac {
namespace {

using nlohmann::json;

json pair(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix(const CMatrix &m)
{
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(pair(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json intervals(const DirectionRegion &region)
{
    json out = json::array();
    for (const auto &iv : region.degrees())
        out.push_back(json::array({iv.lo_deg, iv.hi_deg}));
    return out;
}

} // namespace

std::string to_json(const AnalyticsReport &r)
{
    json o;
    o["rho_t"] = r.rho_t;
    o["crb_phase1"] = r.crb_phase1;
    o["crb_whole"] = r.crb_whole;
    o["crb_up"] = r.crb_up;
    o["p_no_outlier"] = r.p_no_outlier;
    o["mse_predicted"] = r.mse_predicted;
    o["rho_ni"] = r.rho_ni;
    o["rho_th"] = r.rho_th;
    o["rho_ni_dbm"] = r.rho_ni_dbm;
    o["rho_th_dbm"] = r.rho_th_dbm;
    o["outlier_model_edge"] = r.outlier_model_edge;
    return o.dump(2);
}

std::string to_json(const ScanRecord &r)
{
    json o;
    o["user_powers"] = r.user_powers;
    o["best_index"] = r.best_index;
    o["best_snr"] = r.best_snr;
    o["best_snr_genie"] = r.best_snr_genie;
    o["nearest_index"] = r.nearest_index;
    o["sensing_valid"] = r.sensing_valid;
    o["se_raw"] = matrix(r.se_raw);
    o["se_echo"] = matrix(r.se_echo);
    return o.dump();
}

std::string to_json(const EstimationResult &r)
{
    json o;
    o["theta_hat"] = r.theta_hat.value;
    o["theta_hat_deg"] = r.degrees();
    o["alpha_hat"] = pair(r.alpha_hat);
    o["objective_peak"] = r.objective_peak;
    o["grid_step"] = r.grid_step;
    o["grid_theta"] = r.grid_theta.value;
    o["refined"] = r.refined;
    return o.dump(2);
}

std::string to_json(const StrategyDecision &d)
{
    json o;
    o["kind"] = std::string(to_string(d.kind));
    o["m_e"] = d.m_e;
    o["delta_ut"] = d.delta_ut;
    o["eta_ell"] = d.eta_ell;
    o["theta_hat"] = d.theta_hat;
    o["gamma"] = d.gamma;
    o["single_beam_region_deg"] = intervals(d.regions.single_beam);
    o["split_region_deg"] = intervals(d.regions.split);
    o["undetectable_region_deg"] = intervals(d.regions.undetectable);
    return o.dump(2);
}

} // namespace isac
