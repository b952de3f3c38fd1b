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

#include <string>
#include <vector>

namespace isac {

struct AngleInterval
{
    double lo_deg = 0.0;
    double hi_deg = 0.0;
};

/// Finite union of open intervals of spatial direction inside [-1, 1].
class DirectionRegion
{
public:
    struct Span
    {
        double lo;
        double hi;
    };

    DirectionRegion() = default;

    /// { theta in [-1, 1] : |wrap(theta - center)| < half_width }, honouring the 2-periodic wrap.
    static DirectionRegion band(double center, double half_width);
    static DirectionRegion everything();

    [[nodiscard]] DirectionRegion complement() const;
    [[nodiscard]] DirectionRegion minus(const DirectionRegion &other) const;
    [[nodiscard]] DirectionRegion unite(const DirectionRegion &other) const;

    [[nodiscard]] bool contains(double theta) const;
    [[nodiscard]] bool empty() const { return spans_.empty(); }
    [[nodiscard]] const std::vector<Span> &spans() const { return spans_; }

    /// Physical-angle view, clipped to (-90, 90) degrees.
    [[nodiscard]] std::vector<AngleInterval> degrees() const;

private:
    explicit DirectionRegion(std::vector<Span> spans);
    std::vector<Span> spans_;
};

std::string to_string(const std::vector<AngleInterval> &intervals);

} // namespace isac
