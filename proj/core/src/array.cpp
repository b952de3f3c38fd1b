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

#include "isac/array.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

CVector steering(int m, SpatialDirection theta)
{
    CVector a(m);
    const double c = 0.5 * (m - 1);
    for (int k = 0; k < m; ++k)
        a[k] = std::polar(1.0, kPi * theta.value * (k - c));
    return a;
}

CVector steering_derivative(int m, SpatialDirection theta)
{
    CVector d(m);
    const double c = 0.5 * (m - 1);
    for (int k = 0; k < m; ++k) {
        const double w = kPi * (k - c);
        d[k] = cplx(0.0, w) * std::polar(1.0, w * theta.value);
    }
    return d;
}

double steering_derivative_norm2(int m)
{
    const double md = m;
    return kPi * kPi * md * (md * md - 1.0) / 12.0;
}

double dirichlet(int m, double delta)
{
    const double x = 0.5 * kPi * delta;
    const double den = std::sin(x);
    if (std::abs(den) < 1e-9) {
        // delta ~ 2k: limit m cos(m x) / cos(x)
        const long k = std::lround(delta / 2.0);
        const bool odd = ((k * (m - 1)) % 2) != 0;
        return odd ? -static_cast<double>(m) : static_cast<double>(m);
    }
    return std::sin(m * x) / den;
}

double beam_kernel(int m, double delta) { return std::abs(dirichlet(m, delta)); }

double wrap_direction(double delta)
{
    double w = std::fmod(delta + 1.0, 2.0);
    if (w < 0.0)
        w += 2.0;
    return w - 1.0;
}

CancellationProjector::CancellationProjector(int m_se, SpatialDirection theta_bi)
    : a_(steering(m_se, theta_bi)), theta_bi_(theta_bi)
{
}

CMatrix CancellationProjector::apply(const CMatrix &x) const
{
    if (x.rows() != a_.size())
        throw std::invalid_argument("cancellation projector: row count does not match SE count");
    const double m = static_cast<double>(a_.size());
    // (I - a a^H / m) x without forming the dense projector
    CMatrix out = x;
    out.noalias() -= a_ * ((a_.adjoint() * x) / m);
    return out;
}

CVector CancellationProjector::apply(const CVector &x) const
{
    if (x.size() != a_.size())
        throw std::invalid_argument("cancellation projector: snapshot length does not match SE count");
    const double m = static_cast<double>(a_.size());
    const cplx c = a_.dot(x) / m; // a^H x
    return x - c * a_;
}

CMatrix CancellationProjector::matrix() const
{
    const auto m = a_.size();
    return CMatrix::Identity(m, m) - a_ * a_.adjoint() / static_cast<double>(m);
}

double CancellationProjector::residual_norm2(SpatialDirection theta) const
{
    const double m = static_cast<double>(a_.size());
    const double d = dirichlet(size(), theta.value - theta_bi_.value);
    return m - d * d / m;
}

CVector cancellation_project(const CVector &se_snapshot, int m_se, SpatialDirection theta_bi)
{
    return CancellationProjector(m_se, theta_bi).apply(se_snapshot);
}

} // namespace isac
