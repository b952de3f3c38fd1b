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

#include "isac/analytics.hpp"

#include "isac/beam_scanning.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

FisherInfo fim_crb_general(const CMatrix &u, const CMatrix &u_dot, cplx alpha, double sigma2)
{
    if (u.rows() != u_dot.rows() || u.cols() != u_dot.cols())
        throw std::invalid_argument("fim: U and dU/dtheta differ in shape");
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("fim: noise power must be positive");
    const double eu = u.squaredNorm();
    if (!(eu > 0.0))
        throw std::invalid_argument("fim: zero-energy signal matrix");

    const cplx cross = std::conj(alpha) * (u_dot.array().conjugate() * u.array()).sum(); // alpha* tr(U'^H U)
    const double k = 2.0 / sigma2;

    FisherInfo fi;
    fi.f.setZero();
    fi.f(0, 0) = k * std::norm(alpha) * u_dot.squaredNorm();
    fi.f(0, 1) = fi.f(1, 0) = k * cross.real();
    fi.f(0, 2) = fi.f(2, 0) = k * (cplx(0.0, 1.0) * cross).real();
    fi.f(1, 1) = fi.f(2, 2) = k * eu;

    const double schur = fi.f(0, 0) - (fi.f(0, 1) * fi.f(0, 1) + fi.f(0, 2) * fi.f(0, 2)) / fi.f(1, 1);
    fi.crb = 1.0 / schur;
    return fi;
}

CMatrix echo_signal_matrix(const Scenario &s, double theta, const CMatrix &x)
{
    const cplx c = std::sqrt(s.n_bs() * s.tx_power_w()) * path_gains(s).alpha_g;
    const CVector a = steering(s.m_se(), {theta});
    const CVector q = steering(s.m_re(), {theta - s.theta_bi().value});
    return c * a * (q.adjoint() * x);
}

CMatrix echo_signal_derivative(const Scenario &s, double theta, const CMatrix &x)
{
    const cplx c = std::sqrt(s.n_bs() * s.tx_power_w()) * path_gains(s).alpha_g;
    const SpatialDirection qd{theta - s.theta_bi().value};
    const CVector a = steering(s.m_se(), {theta});
    const CVector da = steering_derivative(s.m_se(), {theta});
    const Eigen::RowVectorXcd qx = steering(s.m_re(), qd).adjoint() * x;
    const Eigen::RowVectorXcd dqx = steering_derivative(s.m_re(), qd).adjoint() * x;
    return c * (da * qx + a * dqx);
}

double crb_phase1_closed(const Scenario &s)
{
    const double rho = target_snr(s, path_gains(s));
    const double m = s.m_re();
    const double ms = s.m_se();
    return 6.0 / (rho * kPi * kPi * s.n_bs() * s.codebook_size() * m * ms * (m * m + ms * ms - 2.0));
}

double no_outlier_prob(double rho_t, int l, int n, int m, int m_se)
{
    const double x = 0.5 * l * rho_t * n * m * m_se;
    return std::exp((m_se + m - 2) * std::log1p(-0.5 * std::exp(-x)));
}

double no_outlier_prob(const Scenario &s)
{
    return no_outlier_prob(target_snr(s, path_gains(s)), s.codebook_size(), s.n_bs(), s.m_re(), s.m_se());
}

double mse_predict(double p, double crb) { return (1.0 - p) / 3.0 + p * crb; }

double mse_predict(const Scenario &s) { return mse_predict(no_outlier_prob(s), crb_phase1_closed(s)); }

double target_snr_to_dbm(const Scenario &s, double rho)
{
    const PathGains g = path_gains(s);
    return watts_to_dbm(rho * s.noise_power_w() / (std::norm(g.alpha_g) * std::norm(g.alpha_s)));
}

Thresholds thresholds(const Scenario &s)
{
    const int competitors = s.m_se() + s.m_re() - 2;
    if (competitors < 1)
        throw std::domain_error("thresholds need M + M_s >= 3");
    const double m = s.m_re();
    const double ms = s.m_se();
    const double scale = 2.0 / (s.codebook_size() * s.n_bs() * m * ms);
    const double beta = s.params().beta_ni;

    Thresholds t;
    t.rho_ni = -scale * std::log(2.0 * (1.0 - std::pow(1.0 - beta, 1.0 / competitors)));
    const double rho0 = kPi * kPi * m * m * ms * ms * competitors / 2.0;
    t.rho_th = scale * (std::log(rho0) + std::log(std::log(rho0)));
    t.rho_ni_dbm = target_snr_to_dbm(s, t.rho_ni);
    t.rho_th_dbm = target_snr_to_dbm(s, t.rho_th);
    return t;
}

WholePhaseCrb crb_whole(const Scenario &s, const CVector &phi, int tau2)
{
    if (phi.size() != s.m_re())
        throw std::invalid_argument("crb_whole: reflection vector must have M entries");
    if (tau2 < 0)
        throw std::invalid_argument("crb_whole: tau2 must be non-negative");

    // Unit-modulus data symbols make X2 X2^H = tau2 phi phi^H, so a single
    // column sqrt(tau2) phi carries the same information.
    const Codebook cb = dft_codebook(s.m_re(), s.codebook_size());
    CMatrix x(s.m_re(), cb.size() + 1);
    x.leftCols(cb.size()) = cb.columns;
    x.col(cb.size()) = std::sqrt(static_cast<double>(tau2)) * phi;

    const double theta = s.theta_it().value;
    const PathGains g = path_gains(s);
    const auto fi =
        fim_crb_general(echo_signal_matrix(s, theta, x), echo_signal_derivative(s, theta, x), g.alpha_s, s.noise_power_w());

    const double rho = target_snr(s, g);
    const double m = s.m_re();
    const double ms = s.m_se();
    const double qphi = std::norm(steering(s.m_re(), s.theta_it_bar()).dot(phi));
    const double info = s.codebook_size() * m * ms * (m * m + ms * ms - 2.0) + tau2 * qphi * ms * (ms * ms - 1.0);
    return {fi.crb, 6.0 / (rho * kPi * kPi * s.n_bs() * info)};
}

AnalyticsReport analyze(const Scenario &s)
{
    AnalyticsReport r;
    r.rho_t = target_snr(s, path_gains(s));
    r.crb_phase1 = crb_phase1_closed(s);
    r.p_no_outlier = no_outlier_prob(s);
    r.mse_predicted = mse_predict(r.p_no_outlier, r.crb_phase1);
    const Thresholds t = thresholds(s);
    r.rho_ni = t.rho_ni;
    r.rho_th = t.rho_th;
    r.rho_ni_dbm = t.rho_ni_dbm;
    r.rho_th_dbm = t.rho_th_dbm;

    const Codebook cb = dft_codebook(s.m_re(), s.codebook_size());
    const CVector phi = cb.columns.col(nearest_beam(cb, s.theta_iu_bar().value));
    const auto w = crb_whole(s, phi, s.data_symbols());
    r.crb_whole = w.crb_w;
    r.crb_up = w.crb_up;
    r.outlier_model_edge = std::abs(s.theta_it().value) > 0.8;
    return r;
}

} // namespace isac
