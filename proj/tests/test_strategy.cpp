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
#include "isac/strategy.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace isac;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Scenario no_guard()
{
    ScenarioParams p;
    p.interference_guard = false;
    return Scenario::make(p);
}

} // namespace

TEST_CASE("strategy names", "[strategy]")
{
    CHECK(to_string(StrategyKind::kSingleBeam) == "single-beam");
    CHECK(to_string(StrategyKind::kBeamSplit) == "beam-split");
    CHECK(to_string(StrategyKind::kCommunicationOnly) == "communication-only");
}

TEST_CASE("decision rules", "[strategy]")
{
    const Scenario s = no_guard();
    const double bi = s.theta_bi().value;
    const double eta = 1.0 - 9.0 / 64; // beam 59
    const double gamma = s.snr_threshold();

    SECTION("target inside the best beam")
    {
        const auto d = decide_strategy(wrap_direction(bi + eta + 1.0 / 64), eta, 1300.0, s);
        CHECK(d.kind == StrategyKind::kSingleBeam);
        CHECK(d.m_e == 0);
        CHECK_THAT(d.delta_ut, WithinAbs(1.0 / 64, 1e-12));
    }
    SECTION("well separated with margin")
    {
        const double th = 0.5;
        const auto d = decide_strategy(th, eta, 1300.0, s);
        CHECK(d.delta_ut > 11.0 / 64);
        CHECK(d.kind == StrategyKind::kBeamSplit);
        CHECK(d.m_e == element_allocation(1300.0, gamma, 64, 64));
        CHECK_THAT(d.target_bar, WithinAbs(th - bi, 1e-15));
        CHECK(d.gamma == gamma);
    }
    SECTION("no margin")
    {
        const auto d = decide_strategy(0.5, eta, gamma, s);
        CHECK(d.kind == StrategyKind::kCommunicationOnly);
        CHECK(d.m_e == 0);
    }
    SECTION("between the single-beam and split regions")
    {
        const auto d = decide_strategy(wrap_direction(bi + eta + 5.0 / 64), eta, 1300.0, s);
        CHECK(d.kind == StrategyKind::kCommunicationOnly);
    }
    SECTION("target hidden by the direct path")
    {
        const auto d = decide_strategy(bi + 0.05, eta, 1300.0, s);
        CHECK(d.kind == StrategyKind::kCommunicationOnly);
        CHECK(d.regions.undetectable.contains(bi + 0.05));
    }
}

TEST_CASE("decisions are pure and cover every input", "[strategy][property]")
{
    const Scenario s = Scenario::defaults();
    const double eta = 1.0 - 9.0 / 64;
    const double gamma = s.snr_threshold();
    for (int i = 0; i < 400; ++i) {
        const double th = -1.0 + (i + 0.5) / 200.0;
        for (double gl : {0.0, 10.0, gamma, 200.0, 1319.0, 5000.0}) {
            const auto a = decide_strategy(th, eta, gl, s);
            const auto b = decide_strategy(th, eta, gl, s);
            CHECK(a.kind == b.kind);
            CHECK(a.m_e == b.m_e);
            const bool hidden = a.regions.undetectable.contains(th);
            if (hidden)
                CHECK(a.kind == StrategyKind::kCommunicationOnly);
            else if (a.delta_ut < 2.0 / 64)
                CHECK(a.kind == StrategyKind::kSingleBeam);
            else if (a.kind == StrategyKind::kBeamSplit)
                CHECK((a.delta_ut > 11.0 / 64 && gl > gamma && a.m_e > 0));
            else
                CHECK(a.kind == StrategyKind::kCommunicationOnly);
            if (a.kind != StrategyKind::kBeamSplit)
                CHECK(a.m_e == 0);
        }
    }
}

TEST_CASE("regions relative to the best beam", "[strategy]")
{
    const Scenario s = Scenario::defaults();
    const double eta = 1.0 - 9.0 / 64;
    const auto r = strategy_regions(s, eta);
    const double centre = wrap_direction(s.theta_bi().value + eta);
    CHECK(r.single_beam.contains(centre));
    CHECK_FALSE(r.split.contains(centre));
    CHECK(r.split.contains(0.5));
    CHECK_FALSE(r.split.contains(s.theta_bi().value));
}

TEST_CASE("split reflection", "[strategy]")
{
    const double eta = 0.86;
    const CVector phi0 = split_reflection(0, eta, 0.3, 64);
    CHECK(phi0 == steering(64, {eta}));

    const CVector all = split_reflection(64, eta, 0.3, 64);
    CHECK_THAT(std::abs(steering(64, {0.3}).dot(all)), WithinAbs(64.0, 1e-10));
    CHECK(all.cwiseAbs().isApproxToConstant(1.0, 1e-15));

    const Scenario s = Scenario::defaults();
    const double user = s.theta_iu_bar().value;
    const double target = s.theta_it_bar().value;
    const CVector phi = split_reflection(36, user, target, 64);
    const double delta = wrap_direction(target - user);
    CHECK_THAT(std::abs(steering(64, {user}).dot(phi)), WithinRel(split_gain(64, 36, delta), 1e-9));
    CHECK_THAT(std::abs(steering(64, {user}).dot(phi)), WithinRel(split_gain(64, 36, target - user), 1e-9));
    CHECK(std::abs(steering(64, {target}).dot(phi)) >= 36.0 - beam_kernel(28, delta) - 1e-9);

    CHECK_THROWS_AS(split_reflection(65, eta, 0.3, 64), std::invalid_argument);
}

TEST_CASE("split gain", "[strategy]")
{
    CHECK_THAT(split_gain(64, 20, 0.0), WithinAbs(64.0, 1e-12));
    CHECK_THAT(split_gain(64, 0, 0.4), WithinAbs(64.0, 1e-12));
    for (int me : {1, 10, 33, 63})
        for (double d = 0.0; d <= 2.0; d += 0.013) {
            const double g = split_gain(64, me, d);
            CHECK(std::abs(g - (64 - me)) <= beam_kernel(me, d) + 1e-9);
            CHECK(g <= 64.0 + 1e-9);
        }
}

TEST_CASE("element allocation", "[strategy]")
{
    CHECK(element_allocation(500.0, 500.0, 64, 64) == 0);
    CHECK_THROWS_AS(element_allocation(30.0, 40.0, 64, 64), InsufficientMargin);
    CHECK_THROWS_WITH(element_allocation(30.0, 40.0, 64, 64), "insufficient margin: gamma exceeds gamma_l");

    const int exact = element_allocation(400.0, 100.0, 64, 64);
    const int approx = element_allocation(400.0, 100.0, 64, 64, AllocationRule::kApproximate);
    // the small-angle form overestimates when (M - m_e) / L is not small
    CHECK(exact == 27);
    CHECK(approx == 32);
    CHECK(worst_case_snr(400.0, 64, exact, 64) >= 100.0);
    CHECK(worst_case_snr(400.0, 64, exact + 1, 64) < 100.0);
    CHECK(worst_case_snr(400.0, 64, approx, 64) < 100.0);
    const int e2 = element_allocation(4000.0, 100.0, 64, 64);
    const int a2 = element_allocation(4000.0, 100.0, 64, 64, AllocationRule::kApproximate);
    CHECK(std::abs(e2 - a2) <= 1);

    // frozen: defaults with gamma_l = G_ch M^2
    const Scenario s = Scenario::defaults();
    CHECK(element_allocation(1535.155, s.snr_threshold(), 64, 64) == 53);
    CHECK(element_allocation(1535.155, s.snr_threshold(), 64, 64, AllocationRule::kApproximate) == 53);

    for (double gl : {40.0, 100.0, 1319.0, 1e4}) {
        int prev = 64;
        for (double g = 1.0; g <= gl; g *= 1.1) {
            const int me = element_allocation(gl, g, 64, 64);
            CHECK(me <= prev);
            CHECK(me >= 0);
            CHECK(me < 64);
            if (me > 0)
                CHECK(worst_case_snr(gl, 64, me, 64) >= g);
            prev = me;
        }
    }
}

TEST_CASE("guarded allocation never exceeds the plain rule", "[strategy]")
{
    const double gamma = Scenario::defaults().snr_threshold();
    for (double gl : {50.0, 300.0, 1319.0}) {
        const int plain = element_allocation(gl, gamma, 64, 64);
        for (double d : {12.0 / 64, 0.3, 0.9}) {
            const int g = guarded_allocation(plain, gl, gamma, 64, 64, d);
            CHECK(g <= plain);
            CHECK(g >= 0);
        }
    }
    CHECK(guarded_allocation(0, 1000.0, gamma, 64, 64, 0.5) == 0);
}

TEST_CASE("genie allocation uses the true offset", "[strategy]")
{
    const Scenario s = Scenario::defaults();
    const double gamma = s.snr_threshold();
    const double du = user_beam_offset(s);
    const double gl = channel_gain(s, path_gains(s)) * std::pow(beam_kernel(64, du), 2);
    const int me = element_allocation_genie(gl, gamma, 64, du);
    CHECK(me >= element_allocation(gl, gamma, 64, 64));
    const double k = beam_kernel(64 - me, du);
    CHECK(channel_gain(s, path_gains(s)) * k * k >= gamma);
}

TEST_CASE("phase 2 echoes and user rate", "[strategy]")
{
    ScenarioParams p;
    p.zeta_iu = 30.0; // user and target share a beam direction
    const Scenario s = Scenario::make(p);
    const PathGains g = path_gains(s);
    const CVector phi = steering(64, s.theta_it_bar());
    Rng rng(3);
    const Phase2Outcome out = simulate_phase2(s, g, phi, rng, {.noiseless = true});
    REQUIRE(out.y2.cols() == 936);
    CHECK(out.symbols.cwiseAbs().isApproxToConstant(1.0, 1e-14));
    const CMatrix gram = out.x2 * out.x2.adjoint();
    CHECK((gram - 936.0 * phi * phi.adjoint()).norm() < 1e-9 * gram.norm());

    const CancellationProjector proj(12, s.theta_bi());
    const double per_symbol = s.n_bs() * s.tx_power_w() * std::norm(g.alpha_g) * std::norm(g.alpha_s) * 64.0 * 64.0;
    CHECK_THAT(out.y2.col(0).squaredNorm(), WithinRel(per_symbol * proj.residual_norm2(s.theta_it()), 1e-10));
    CHECK(out.y2.col(0).squaredNorm() <= per_symbol * 12.0);
    CHECK_THAT(out.user_snr, WithinRel(channel_gain(s, g) * 4096.0, 1e-10));
    CHECK_THAT(out.user_rate, WithinRel(0.936 * std::log2(1.0 + out.user_snr), 1e-12));

    // beam away from the target: only sidelobe energy returns
    const Scenario d = Scenario::defaults();
    const PathGains gd = path_gains(d);
    const double eta = 1.0 - 9.0 / 64;
    Rng r2(3);
    const Phase2Outcome off = simulate_phase2(d, gd, steering(64, {eta}), r2, {.noiseless = true});
    const double dt = wrap_direction(d.theta_it_bar().value - eta);
    const double bound = 1.0 / std::abs(std::sin(kPi * dt / 2.0));
    const double unit = d.n_bs() * d.tx_power_w() * std::norm(gd.alpha_g) * std::norm(gd.alpha_s);
    CHECK(off.y2.col(5).squaredNorm() <= unit * 12.0 * bound * bound * (1.0 + 1e-9));

    Rng r3(3);
    CHECK_THROWS_AS(simulate_phase2(d, gd, CVector::Ones(5), r3), std::invalid_argument);
}

TEST_CASE("a split keeps the user above the threshold", "[strategy]")
{
    const Scenario s = Scenario::defaults();
    const PathGains g = path_gains(s);
    Rng rng(1);
    const ScanRecord scan = simulate_phase1(s, g, rng, {.noiseless = true});
    const double eta = dft_codebook(64, 64).directions[scan.best_index];
    const auto d = decide_strategy(s.theta_it().value, eta, scan.best_snr, s);
    REQUIRE(d.kind == StrategyKind::kBeamSplit);
    const Phase2Outcome out = simulate_phase2(s, g, phase2_reflection(d, 64), rng, {.noiseless = true});
    CHECK(out.user_rate >= s.params().rate_threshold_bps_hz);
}

TEST_CASE("phase 2 data never hurts the bound", "[strategy][property]")
{
    const Scenario s = Scenario::defaults();
    const double crb1 = crb_phase1_closed(s);
    const double eta = 1.0 - 9.0 / 64;
    for (double th = -0.95; th < 1.0; th += 0.1) {
        const auto d = decide_strategy(th, eta, 1319.0, s);
        const CVector phi = phase2_reflection(d, 64);
        if (d.kind != StrategyKind::kBeamSplit)
            CHECK(phi == steering(64, {eta}));
        CHECK(crb_whole(s, phi, s.data_symbols()).crb_w <= crb1 * (1.0 + 1e-9));
    }
}
