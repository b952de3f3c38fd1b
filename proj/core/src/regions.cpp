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

#include "isac/regions.hpp"

#include "isac/array.hpp"
#include "isac/units.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace isac {
namespace {

using Span = DirectionRegion::Span;

std::vector<Span> normalize(std::vector<Span> v)
{
    std::vector<Span> clipped;
    for (auto s : v) {
        s.lo = std::max(s.lo, -1.0);
        s.hi = std::min(s.hi, 1.0);
        if (s.hi > s.lo)
            clipped.push_back(s);
    }
    std::sort(clipped.begin(), clipped.end(), [](const Span &a, const Span &b) { return a.lo < b.lo; });
    std::vector<Span> out;
    for (const auto &s : clipped) {
        if (!out.empty() && s.lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, s.hi);
        else
            out.push_back(s);
    }
    return out;
}

} // namespace

DirectionRegion::DirectionRegion(std::vector<Span> spans) : spans_(normalize(std::move(spans))) {}

DirectionRegion DirectionRegion::band(double center, double half_width)
{
    if (half_width <= 0.0)
        return {};
    if (half_width >= 1.0)
        return everything();
    const double c = wrap_direction(center);
    // the periodic copies at c - 2 and c + 2 cover the wrap-around
    return DirectionRegion({{c - half_width, c + half_width},
                            {c - 2.0 - half_width, c - 2.0 + half_width},
                            {c + 2.0 - half_width, c + 2.0 + half_width}});
}

DirectionRegion DirectionRegion::everything() { return DirectionRegion({{-1.0, 1.0}}); }

DirectionRegion DirectionRegion::complement() const
{
    std::vector<Span> out;
    double cursor = -1.0;
    for (const auto &s : spans_) {
        if (s.lo > cursor)
            out.push_back({cursor, s.lo});
        cursor = std::max(cursor, s.hi);
    }
    if (cursor < 1.0)
        out.push_back({cursor, 1.0});
    return DirectionRegion(std::move(out));
}

DirectionRegion DirectionRegion::unite(const DirectionRegion &other) const
{
    auto v = spans_;
    v.insert(v.end(), other.spans_.begin(), other.spans_.end());
    return DirectionRegion(std::move(v));
}

DirectionRegion DirectionRegion::minus(const DirectionRegion &other) const
{
    // A \ B = complement(complement(A) U B)
    return complement().unite(other).complement();
}

bool DirectionRegion::contains(double theta) const
{
    return std::any_of(spans_.begin(), spans_.end(), [&](const Span &s) { return theta > s.lo && theta < s.hi; });
}

std::vector<AngleInterval> DirectionRegion::degrees() const
{
    std::vector<AngleInterval> out;
    out.reserve(spans_.size());
    for (const auto &s : spans_)
        out.push_back({rad_to_deg(std::asin(s.lo)), rad_to_deg(std::asin(s.hi))});
    return out;
}

std::string to_string(const std::vector<AngleInterval> &intervals)
{
    if (intervals.empty())
        return "{}";
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i)
            os << " U ";
        os << '(' << intervals[i].lo_deg << ", " << intervals[i].hi_deg << ')';
    }
    return os.str();
}

} // namespace isac
