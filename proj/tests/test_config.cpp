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

#include "isac/config.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace isac;
using Catch::Matchers::WithinRel;

TEST_CASE("key-value parsing", "[config]")
{
    auto cfg = KeyValueConfig::parse("# comment\n  m_re = 32  # trailing\n\nflag = yes\nlist = 1, 2.5 ,3\n");
    CHECK(cfg.take_int("m_re") == 32);
    CHECK(cfg.take_bool("flag") == true);
    const auto list = cfg.take_list("list");
    REQUIRE(list.has_value());
    CHECK(*list == std::vector<double>{1.0, 2.5, 3.0});
    CHECK_FALSE(cfg.take("missing").has_value());
    CHECK_NOTHROW(cfg.require_all_consumed());
}

TEST_CASE("malformed configuration is rejected", "[config]")
{
    CHECK_THROWS_AS(KeyValueConfig::parse("a = 1\na = 2\n"), ConfigError);
    CHECK_THROWS_AS(KeyValueConfig::parse("no equals sign\n"), ConfigError);
    auto cfg = KeyValueConfig::parse("m_re = sixty\n");
    CHECK_THROWS_AS(cfg.take_int("m_re"), ConfigError);
    auto extra = KeyValueConfig::parse("m_re = 8\nbogus = 1\n");
    (void)scenario_params_from_config(extra);
    CHECK_THROWS_AS(extra.require_all_consumed(), ConfigError);
}

TEST_CASE("scenario keys with unit variants", "[config]")
{
    auto cfg = KeyValueConfig::parse("tx_power_dbm = 20\nnoise_power_dbm = -110\nrcs_dbsm = 0\ncodebook_size = 80\n");
    const ScenarioParams p = scenario_params_from_config(cfg);
    CHECK_THAT(p.tx_power_w, WithinRel(0.1, 1e-12));
    CHECK_THAT(p.noise_power_w, WithinRel(1e-14, 1e-12));
    CHECK_THAT(p.rcs_sqm, WithinRel(1.0, 1e-12));
    CHECK(p.codebook_size == 80);
    CHECK(p.scan_symbols == 80); // follows the codebook unless given
}

TEST_CASE("params render to a config that parses back", "[config]")
{
    ScenarioParams p;
    p.zeta_it = -12.345678901234;
    p.tx_power_w = 0.0123;
    p.worst_case_allocation = false;
    p.interference_guard = false;
    auto cfg = KeyValueConfig::parse(scenario_params_to_config(p));
    const ScenarioParams q = scenario_params_from_config(cfg);
    cfg.require_all_consumed();
    CHECK(q == p);
}
