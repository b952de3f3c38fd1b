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

// Text configuration files: one `key = value` per line, `#` starts a comment.
//
//   m_re = 64
//   tx_power_dbm = 30        # or tx_power_w = 1.0
//   noise_power_dbm = -120
//   rcs_dbsm = 7             # or rcs_sqm = 5.0119
//   zeta_it = 30             # degrees
//
// Keys not consumed by any reader are reported as errors.

#include "isac/scenario.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isac {

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class KeyValueConfig
{
public:
    static KeyValueConfig parse(const std::string &text);
    static KeyValueConfig load(const std::filesystem::path &path);

    /// Removes and returns the raw value of `key`, if present.
    std::optional<std::string> take(const std::string &key);
    std::optional<double> take_double(const std::string &key);
    std::optional<int> take_int(const std::string &key);
    std::optional<bool> take_bool(const std::string &key);
    std::optional<std::vector<double>> take_list(const std::string &key);

    [[nodiscard]] bool contains(const std::string &key) const { return entries_.contains(key); }
    [[nodiscard]] std::vector<std::string> remaining_keys() const;

    /// Throws ConfigError if any key was never consumed.
    void require_all_consumed() const;

private:
    struct Entry
    {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Entry> entries_;
};

/// Consumes every scenario key; missing keys keep their defaults.
ScenarioParams scenario_params_from_config(KeyValueConfig &cfg);

/// Renders params as a config file that parses back to the same values.
std::string scenario_params_to_config(const ScenarioParams &p);

} // namespace isac
