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

// Maximum-likelihood estimation of the target direction theta_IT from the
// cancelled SE echoes.
//
// With Z = sum_k Y_k X_k^H and W = sum_k X_k X_k^H over the observed blocks
// (Phase I alone, or Phase I + Phase II), the search maximizes
//
//     J(theta) = |a_s^H(theta) Z q(theta)|^2 / (q^H(theta) W q(theta)),
//     q(theta) = a_r(theta - theta_BI),
//
// on a uniform grid, then polishes the peak within one grid step using the
// likelihood of the cancelled model, which divides J by ||P a_s(theta)||^2.

#include "isac/channel.hpp"

#include <stdexcept>
#include <vector>

namespace isac {

class EstimationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct EstimatorOptions
{
    /// Grid step is 2 / (oversample * max(M, M_s)).
    int oversample = 8;
    bool refine = true;
};

struct EstimationResult
{
    SpatialDirection theta_hat;
    cplx alpha_hat;
    double objective_peak = 0.0; ///< J at the grid argmax
    double grid_step = 0.0;
    bool refined = false;
    SpatialDirection grid_theta; ///< grid argmax before refinement

    [[nodiscard]] double degrees() const { return theta_hat.degrees(); }
};

struct TracePoint
{
    double theta;
    double objective;
};

/// Sufficient statistics of one estimation problem. Evaluating J costs
/// O(M + M_s) per direction: both quadratic forms are polynomials in
/// e^{j pi theta}, whose coefficients are diagonal sums of Z and W.
class MleProblem
{
public:
    /// Phase I only.
    MleProblem(const Scenario &s, const CMatrix &y, const CMatrix &x);
    /// Phase I + II. An empty Phase II block (zero columns) is allowed.
    MleProblem(const Scenario &s, const CMatrix &y, const CMatrix &x, const CMatrix &y2, const CMatrix &x2);
    /// Directly from Z (M_s x M) and W (M x M), e.g. when a block has known low-rank structure.
    static MleProblem from_statistics(const Scenario &s, CMatrix z, CMatrix w);

    [[nodiscard]] double objective(double theta) const;
    /// J(theta) / ||P a_s(theta)||^2; zero where the projector annihilates a_s.
    [[nodiscard]] double cancelled_objective(double theta) const;
    /// a_s^H(theta) Z q(theta).
    [[nodiscard]] cplx correlation(double theta) const;
    /// q^H(theta) W q(theta).
    [[nodiscard]] double energy(double theta) const;

    [[nodiscard]] std::vector<TracePoint> trace(int grid_size) const;
    [[nodiscard]] EstimationResult solve(const EstimatorOptions &opts = {}) const;

    [[nodiscard]] const CMatrix &z() const { return z_; }
    [[nodiscard]] const CMatrix &w() const { return w_; }

private:
    MleProblem(const Scenario &s, CMatrix z, CMatrix w, int);
    void prepare();
    [[nodiscard]] cplx alpha_at(double theta) const;
    [[nodiscard]] double log_slope(double theta) const;
    [[nodiscard]] double stationary_point(double theta, double lo, double hi) const;

    int m_ = 0;
    int m_se_ = 0;
    double theta_bi_ = 0.0;
    cplx scale_; ///< sqrt(N P_t) alpha_g
    CMatrix z_;
    CMatrix w_;
    std::vector<cplx> zc_; ///< a_s^H Z q coefficients of e^{j pi theta d}, d = -(M_s-1)..(M-1)
    std::vector<cplx> wc_; ///< q^H W q coefficients of e^{j pi (theta - theta_BI) d}, d = -(M-1)..(M-1)
};

/// Phase-I estimate from the M_s x L cancelled echo block and the M x L codebook.
/// Throws EstimationError("no signal energy") if y is identically zero.
EstimationResult mle_phase1(const CMatrix &y, const CMatrix &x, const Scenario &s, const EstimatorOptions &opts = {});

/// Estimate from both phases. Falls back to mle_phase1 when y2 has no columns.
EstimationResult mle_whole(const CMatrix &y, const CMatrix &x, const CMatrix &y2, const CMatrix &x2, const Scenario &s,
                           const EstimatorOptions &opts = {});

/// J sampled on grid_size midpoints of [-1, 1] (Phase I data).
std::vector<TracePoint> objective_trace(const CMatrix &y, const CMatrix &x, const Scenario &s, int grid_size);

} // namespace isac
