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

// Uniform linear array kernel: half-wavelength steering vectors referenced
// to the array center, their theta-derivatives, Dirichlet beam kernels and
// the projector that removes the direct BS -> SE component.

#include "isac/units.hpp"

#include <Eigen/Dense>

#include <complex>

namespace isac {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Element k (0-based) of an m-element array has phase pi*theta*(k - (m-1)/2).
CVector steering(int m, SpatialDirection theta);

/// d/dtheta of steering(): entry k scaled by j*pi*(k - (m-1)/2).
CVector steering_derivative(int m, SpatialDirection theta);

/// pi^2 m (m^2 - 1) / 12, the theta-independent squared norm of steering_derivative().
double steering_derivative_norm2(int m);

/// Signed Dirichlet kernel sin(pi m delta / 2) / sin(pi delta / 2).
///
/// Removable singularities at delta = 2k evaluate to their limit
/// m * (-1)^(k (m - 1)).
double dirichlet(int m, double delta);

/// |dirichlet(m, delta)|: array gain of an m-element beam misaligned by delta. In [0, m].
double beam_kernel(int m, double delta);

/// Folds a direction difference into [-1, 1). Steering vectors are 2-periodic in theta.
double wrap_direction(double delta);

/// Orthogonal projector I - a a^H / m onto the complement of a = steering(m, theta_bi).
class CancellationProjector
{
public:
    CancellationProjector(int m_se, SpatialDirection theta_bi);

    [[nodiscard]] int size() const { return static_cast<int>(a_.size()); }
    [[nodiscard]] const CVector &direction() const { return a_; }

    /// Applies the projector to every column of x (rows must equal size()).
    [[nodiscard]] CMatrix apply(const CMatrix &x) const;
    [[nodiscard]] CVector apply(const CVector &x) const;

    /// Dense matrix form, mainly for tests.
    [[nodiscard]] CMatrix matrix() const;

    /// ||P a_s(theta)||^2 = m (1 - |a_s^H(theta_bi) a_s(theta)|^2 / m^2).
    [[nodiscard]] double residual_norm2(SpatialDirection theta) const;

private:
    CVector a_;
    SpatialDirection theta_bi_;
};

/// Free-function form of CancellationProjector::apply; throws std::invalid_argument
/// if the snapshot length differs from m_se.
CVector cancellation_project(const CVector &se_snapshot, int m_se, SpatialDirection theta_bi);

} // namespace isac
