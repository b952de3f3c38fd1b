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

// Closed-form performance predictions for target-direction estimation:
// Fisher information and CRB, outlier probability, the interval-error MSE
// model, SNR thresholds, and the whole-phase CRB.

#include "isac/channel.hpp"

#include <Eigen/Dense>

namespace isac {

/// Fisher information over xi = [theta, Re alpha, Im alpha] for the model
/// y = alpha vec(U(theta)) + n, n ~ CN(0, sigma^2 I).
struct FisherInfo
{
    Eigen::Matrix3d f;
    /// [F^-1]_00, computed as the Schur complement of the alpha block.
    double crb = 0.0;

    [[nodiscard]] double f_theta_theta() const { return f(0, 0); }
    [[nodiscard]] Eigen::Vector2d f_theta_alpha() const { return f.block<1, 2>(0, 1).transpose(); }
    [[nodiscard]] Eigen::Matrix2d f_alpha_alpha() const { return f.block<2, 2>(1, 1); }
};

/// Throws std::invalid_argument on mismatched shapes, zero-energy U or sigma2 <= 0.
FisherInfo fim_crb_general(const CMatrix &u, const CMatrix &u_dot, cplx alpha, double sigma2);

/// U(theta) = sqrt(N P_t) alpha_g a_s(theta) q^H(theta) X with q(theta) = a_r(theta - theta_BI).
CMatrix echo_signal_matrix(const Scenario &s, double theta, const CMatrix &x);
/// dU/dtheta for echo_signal_matrix().
CMatrix echo_signal_derivative(const Scenario &s, double theta, const CMatrix &x);

/// 6 / (rho_t pi^2 N L M M_s (M^2 + M_s^2 - 2)).
double crb_phase1_closed(const Scenario &s);

/// (1 - exp(-L rho_t N M M_s / 2) / 2)^(M_s + M - 2).
double no_outlier_prob(double rho_t, int l, int n, int m, int m_se);
double no_outlier_prob(const Scenario &s);

/// (1 - p) / 3 + p crb.
double mse_predict(double p, double crb);
double mse_predict(const Scenario &s);

struct Thresholds
{
    double rho_ni = 0.0; ///< below: estimates carry no information
    double rho_th = 0.0; ///< above: MSE follows the CRB
    double rho_ni_dbm = 0.0; ///< transmit power reaching rho_ni in this geometry
    double rho_th_dbm = 0.0;
};

/// Throws std::domain_error when M + M_s < 3 (no sidelobe competitors).
Thresholds thresholds(const Scenario &s);

/// Transmit power [dBm] at which the scenario's target SNR equals rho.
double target_snr_to_dbm(const Scenario &s, double rho);

struct WholePhaseCrb
{
    double crb_w = 0.0;  ///< exact, from the FIM of both phases
    double crb_up = 0.0; ///< closed-form upper bound
};

/// Phase II transmits tau2 unit-power symbols through reflection phi.
WholePhaseCrb crb_whole(const Scenario &s, const CVector &phi, int tau2);

/// Every analytic quantity for one scenario. crb_whole / crb_up assume the
/// single-beam reference: the codebook beam nearest the user for all
/// T - tau data symbols.
struct AnalyticsReport
{
    double rho_t = 0.0;
    double crb_phase1 = 0.0;
    double crb_whole = 0.0;
    double crb_up = 0.0;
    double p_no_outlier = 0.0;
    double mse_predicted = 0.0;
    double rho_ni = 0.0;
    double rho_th = 0.0;
    double rho_ni_dbm = 0.0;
    double rho_th_dbm = 0.0;
    /// The 1/3 outlier variance assumes theta far from +-1; set when |theta_IT| > 0.8.
    bool outlier_model_edge = false;
};

AnalyticsReport analyze(const Scenario &s);

} // namespace isac
