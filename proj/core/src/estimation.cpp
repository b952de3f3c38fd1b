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

#include "isac/estimation.hpp"

#include <algorithm>
#include <cmath>

namespace isac {
namespace {

// Horner evaluation of sum_e c[e] z^e.
cplx horner(const std::vector<cplx> &c, cplx z)
{
    cplx p = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        p = p * z + *it;
    return p;
}

// Horner evaluation of sum_e e c[e] z^e (z times the derivative).
cplx horner_weighted(const std::vector<cplx> &c, cplx z)
{
    cplx p = 0.0;
    for (std::size_t e = c.size(); e-- > 0;)
        p = p * z + static_cast<double>(e) * c[e];
    return p;
}

template <class F>
double golden_max(F f, double lo, double hi, double tol)
{
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

MleProblem::MleProblem(const Scenario &s, const CMatrix &y, const CMatrix &x)
    : MleProblem(s, y, x, CMatrix(y.rows(), 0), CMatrix(x.rows(), 0))
{
}

MleProblem::MleProblem(const Scenario &s, const CMatrix &y, const CMatrix &x, const CMatrix &y2, const CMatrix &x2)
    : m_(s.m_re()), m_se_(s.m_se()), theta_bi_(s.theta_bi().value)
{
    if (y.rows() != m_se_ || x.rows() != m_ || y.cols() != x.cols())
        throw std::invalid_argument("phase 1 blocks must be M_s x K and M x K");
    if (y2.rows() != m_se_ || x2.rows() != m_ || y2.cols() != x2.cols())
        throw std::invalid_argument("phase 2 blocks must be M_s x K2 and M x K2");
    if (y.isZero(0.0) && y2.isZero(0.0))
        throw EstimationError("no signal energy");

    scale_ = std::sqrt(s.n_bs() * s.tx_power_w()) * path_gains(s).alpha_g;
    z_ = y * x.adjoint();
    w_ = x * x.adjoint();
    if (y2.cols() > 0) {
        z_ += y2 * x2.adjoint();
        w_ += x2 * x2.adjoint();
    }
    prepare();
}

MleProblem::MleProblem(const Scenario &s, CMatrix z, CMatrix w, int)
    : m_(s.m_re()), m_se_(s.m_se()), theta_bi_(s.theta_bi().value), z_(std::move(z)), w_(std::move(w))
{
    if (z_.rows() != m_se_ || z_.cols() != m_ || w_.rows() != m_ || w_.cols() != m_)
        throw std::invalid_argument("statistics must be M_s x M and M x M");
    if (z_.isZero(0.0))
        throw EstimationError("no signal energy");
    scale_ = std::sqrt(s.n_bs() * s.tx_power_w()) * path_gains(s).alpha_g;
    prepare();
}

MleProblem MleProblem::from_statistics(const Scenario &s, CMatrix z, CMatrix w)
{
    return MleProblem(s, std::move(z), std::move(w), 0);
}

void MleProblem::prepare()
{
    // a_s^H Z q = e^{j pi theta (c_s - c_m)} sum_{i,k} Z_ik e^{-j pi theta_BI (k - c_m)} e^{j pi theta (k - i)}
    const double cm = 0.5 * (m_ - 1);
    zc_.assign(m_ + m_se_ - 1, 0.0);
    for (int k = 0; k < m_; ++k) {
        const cplx rot = std::polar(1.0, -kPi * theta_bi_ * (k - cm));
        for (int i = 0; i < m_se_; ++i)
            zc_[k - i + m_se_ - 1] += z_(i, k) * rot;
    }
    // q^H W q = sum_{k,k'} W_kk' e^{j pi (theta - theta_BI) (k' - k)}
    wc_.assign(2 * m_ - 1, 0.0);
    for (int k = 0; k < m_; ++k)
        for (int kp = 0; kp < m_; ++kp)
            wc_[kp - k + m_ - 1] += w_(k, kp);
}

cplx MleProblem::correlation(double theta) const
{
    const double cs = 0.5 * (m_se_ - 1);
    const double cm = 0.5 * (m_ - 1);
    const cplx lead = std::polar(1.0, kPi * theta * (cs - cm - (m_se_ - 1)));
    return lead * horner(zc_, std::polar(1.0, kPi * theta));
}

double MleProblem::energy(double theta) const
{
    const double u = theta - theta_bi_;
    const cplx lead = std::polar(1.0, -kPi * u * (m_ - 1));
    return (lead * horner(wc_, std::polar(1.0, kPi * u))).real();
}

double MleProblem::objective(double theta) const
{
    const double e = energy(theta);
    return e > 0.0 ? std::norm(correlation(theta)) / e : 0.0;
}

double MleProblem::cancelled_objective(double theta) const
{
    const double d = dirichlet(m_se_, theta - theta_bi_);
    const double resid = m_se_ - d * d / m_se_;
    if (resid < 1e-9 * m_se_)
        return 0.0;
    return objective(theta) / resid;
}

double MleProblem::log_slope(double theta) const
{
    // d/dtheta log(|C|^2 / (E R)), C = correlation, E = energy, R = ||P a_s||^2
    const double cs = 0.5 * (m_se_ - 1);
    const double cm = 0.5 * (m_ - 1);
    const double kappa = cs - cm - (m_se_ - 1);
    const cplx zc = std::polar(1.0, kPi * theta);
    const cplx lead_c = std::polar(1.0, kPi * theta * kappa);
    const cplx c = lead_c * horner(zc_, zc);
    const cplx dc = cplx(0.0, kPi) * lead_c * (kappa * horner(zc_, zc) + horner_weighted(zc_, zc));

    const double u = theta - theta_bi_;
    const cplx zw = std::polar(1.0, kPi * u);
    const cplx lead_w = std::polar(1.0, -kPi * u * (m_ - 1));
    const double e = (lead_w * horner(wc_, zw)).real();
    const double de =
        (cplx(0.0, kPi) * lead_w * (-(m_ - 1.0) * horner(wc_, zw) + horner_weighted(wc_, zw))).real();

    double d = 0.0;
    double dd = 0.0;
    for (int k = 0; k < m_se_; ++k) {
        const double x = kPi * (k - cs);
        d += std::cos(x * u);
        dd -= x * std::sin(x * u);
    }
    const double r = m_se_ - d * d / m_se_;
    const double dr = -2.0 * d * dd / m_se_;
    return 2.0 * (dc * std::conj(c)).real() / std::norm(c) - de / e - dr / r;
}

std::vector<TracePoint> MleProblem::trace(int grid_size) const
{
    if (grid_size < 1)
        throw std::invalid_argument("grid size must be positive");
    const double step = 2.0 / grid_size;
    std::vector<TracePoint> out(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        const double t = -1.0 + step * (i + 0.5);
        out[i] = {t, objective(t)};
    }
    return out;
}

cplx MleProblem::alpha_at(double theta) const
{
    // alpha = b^H Z q / (c ||b||^2 q^H W q), b = P a_s(theta)
    const CancellationProjector proj(m_se_, {theta_bi_});
    const CVector b = proj.apply(CVector(steering(m_se_, {theta})));
    const CVector q = steering(m_, {theta - theta_bi_});
    const double den = b.squaredNorm() * energy(theta);
    if (den <= 0.0 || scale_ == cplx(0.0))
        return 0.0;
    return b.dot(z_ * q) / (scale_ * den);
}

double MleProblem::stationary_point(double theta, double lo, double hi) const
{
    // The likelihood is flat at its peak, so comparing values cannot locate it
    // better than ~sqrt(eps); bisecting on the sign of the slope can.
    constexpr double kBracket = 1e-6;
    double a = std::max(lo, theta - kBracket);
    double b = std::min(hi, theta + kBracket);
    const double sa = log_slope(a);
    const double sb = log_slope(b);
    if (!(sa > 0.0 && sb < 0.0))
        return theta;
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double mid = 0.5 * (a + b);
        const double sm = log_slope(mid);
        if (!std::isfinite(sm))
            return theta;
        (sm > 0.0 ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

EstimationResult MleProblem::solve(const EstimatorOptions &opts) const
{
    if (opts.oversample < 1)
        throw std::invalid_argument("oversample must be positive");
    const int n = opts.oversample * std::max(m_, m_se_);
    const auto grid = trace(n);
    std::size_t g = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i].objective > grid[g].objective)
            g = i;

    EstimationResult r;
    r.grid_step = 2.0 / n;
    r.grid_theta = {grid[g].theta};
    r.objective_peak = grid[g].objective;
    double theta = grid[g].theta;

    if (opts.refine) {
        const auto f = [this](double t) { return cancelled_objective(t); };
        double best = theta;
        double best_f = f(theta);
        // parabolic seed from the grid neighbours, then a golden-section polish
        if (g > 0 && g + 1 < grid.size()) {
            const double fm = grid[g - 1].objective;
            const double f0 = grid[g].objective;
            const double fp = grid[g + 1].objective;
            const double curv = fm - 2.0 * f0 + fp;
            if (curv < 0.0) {
                const double seed = theta + 0.5 * r.grid_step * (fm - fp) / curv;
                if (f(seed) > best_f) {
                    best = seed;
                    best_f = f(seed);
                }
            }
        }
        const double lo = std::max(-1.0, theta - r.grid_step);
        const double hi = std::min(1.0, theta + r.grid_step);
        const double polished = golden_max(f, lo, hi, 1e-13);
        if (f(polished) > best_f)
            best = polished;
        theta = stationary_point(best, lo, hi);
        r.refined = true;
    }
    r.theta_hat = {theta};
    r.alpha_hat = alpha_at(theta);
    return r;
}

EstimationResult mle_phase1(const CMatrix &y, const CMatrix &x, const Scenario &s, const EstimatorOptions &opts)
{
    return MleProblem(s, y, x).solve(opts);
}

EstimationResult mle_whole(const CMatrix &y, const CMatrix &x, const CMatrix &y2, const CMatrix &x2, const Scenario &s,
                           const EstimatorOptions &opts)
{
    if (y2.cols() == 0)
        return mle_phase1(y, x, s, opts);
    return MleProblem(s, y, x, y2, x2).solve(opts);
}

std::vector<TracePoint> objective_trace(const CMatrix &y, const CMatrix &x, const Scenario &s, int grid_size)
{
    return MleProblem(s, y, x).trace(grid_size);
}

} // namespace isac
