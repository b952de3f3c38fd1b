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

#include "isac/array.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace isac {

/// Identifies one independent random stream. Streams for different keys are
/// decorrelated by hashing; the same key always reproduces the same stream.
struct StreamKey
{
    std::uint64_t master_seed = 0;
    std::uint64_t experiment = 0; ///< e.g. hash of a figure id
    std::uint64_t sweep_index = 0;
    std::uint64_t trial_index = 0;
    std::uint64_t phase = 0; ///< sub-stream, so Phase I draws never depend on Phase II
};

/// Stable 64-bit FNV-1a hash for experiment labels.
std::uint64_t label_hash(std::string_view label);

class Rng
{
public:
    explicit Rng(std::uint64_t seed);
    explicit Rng(const StreamKey &key);

    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    cplx complex_normal(double variance);
    /// Matrix of i.i.d. CN(0, variance) entries.
    CMatrix complex_normal(Eigen::Index rows, Eigen::Index cols, double variance);
    /// e^{j u}, u ~ U[0, 2 pi).
    cplx unit_phase();
    double uniform(double lo, double hi);

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace isac
