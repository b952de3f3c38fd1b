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

#include "isac/rng.hpp"

#include <cmath>

namespace isac {
namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t key_seed(const StreamKey &k)
{
    std::uint64_t h = splitmix64(k.master_seed);
    h = splitmix64(h ^ k.experiment);
    h = splitmix64(h ^ k.sweep_index);
    h = splitmix64(h ^ k.trial_index);
    h = splitmix64(h ^ k.phase);
    return h;
}

} // namespace

std::uint64_t label_hash(std::string_view label)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng::Rng(const StreamKey &key) : engine_(key_seed(key)) {}

cplx Rng::complex_normal(double variance)
{
    if (variance <= 0.0)
        return {};
    std::normal_distribution<double> n(0.0, std::sqrt(0.5 * variance));
    const double re = n(engine_);
    const double im = n(engine_);
    return {re, im};
}

CMatrix Rng::complex_normal(Eigen::Index rows, Eigen::Index cols, double variance)
{
    if (variance <= 0.0)
        return CMatrix::Zero(rows, cols);
    std::normal_distribution<double> n(0.0, std::sqrt(0.5 * variance));
    CMatrix z(rows, cols);
    // column-major fill order is part of the reproducibility contract
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double re = n(engine_);
            const double im = n(engine_);
            z(r, c) = cplx(re, im);
        }
    return z;
}

cplx Rng::unit_phase()
{
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    return std::polar(1.0, u(engine_));
}

double Rng::uniform(double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    return u(engine_);
}

} // namespace isac
