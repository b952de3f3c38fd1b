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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace isac {
namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string &key, const std::string &s)
{
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError("key '" + key + "': expected a number, got '" + s + "'");
    return x;
}

// Takes a power given either linearly (`<base>_w`) or in dBm (`<base>_dbm`).
void take_power(KeyValueConfig &cfg, const std::string &base, double &out)
{
    auto w = cfg.take_double(base + "_w");
    auto dbm = cfg.take_double(base + "_dbm");
    if (w && dbm)
        throw ConfigError("both " + base + "_w and " + base + "_dbm given");
    if (w)
        out = *w;
    if (dbm)
        out = dbm_to_watts(*dbm);
}

std::string fmt(double x)
{
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

} // namespace

KeyValueConfig KeyValueConfig::parse(const std::string &text)
{
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto body = trim(line);
        if (body.empty())
            continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        auto key = trim(std::string_view(body).substr(0, eq));
        auto value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (cfg.entries_.contains(key))
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        cfg.entries_.emplace(key, Entry{value, lineno});
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::optional<std::string> KeyValueConfig::take(const std::string &key)
{
    auto it = entries_.find(key);
    if (it == entries_.end())
        return std::nullopt;
    auto v = it->second.value;
    entries_.erase(it);
    return v;
}

std::optional<double> KeyValueConfig::take_double(const std::string &key)
{
    auto s = take(key);
    if (!s)
        return std::nullopt;
    return parse_double(key, *s);
}

std::optional<int> KeyValueConfig::take_int(const std::string &key)
{
    auto s = take(key);
    if (!s)
        return std::nullopt;
    int x = 0;
    auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), x);
    if (ec != std::errc() || ptr != s->data() + s->size())
        throw ConfigError("key '" + key + "': expected an integer, got '" + *s + "'");
    return x;
}

std::optional<bool> KeyValueConfig::take_bool(const std::string &key)
{
    auto s = take(key);
    if (!s)
        return std::nullopt;
    std::string v = *s;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ConfigError("key '" + key + "': expected a boolean, got '" + *s + "'");
}

std::optional<std::vector<double>> KeyValueConfig::take_list(const std::string &key)
{
    auto s = take(key);
    if (!s)
        return std::nullopt;
    std::vector<double> out;
    std::stringstream ss(*s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto t = trim(item);
        if (t.empty())
            throw ConfigError("key '" + key + "': empty list item");
        out.push_back(parse_double(key, t));
    }
    if (out.empty())
        throw ConfigError("key '" + key + "': empty list");
    return out;
}

std::vector<std::string> KeyValueConfig::remaining_keys() const
{
    std::vector<std::string> keys;
    for (const auto &[k, e] : entries_)
        keys.push_back(k);
    return keys;
}

void KeyValueConfig::require_all_consumed() const
{
    if (entries_.empty())
        return;
    std::string msg = "unknown config key(s):";
    for (const auto &[k, e] : entries_)
        msg += " '" + k + "' (line " + std::to_string(e.line) + ")";
    throw ConfigError(msg);
}

ScenarioParams scenario_params_from_config(KeyValueConfig &cfg)
{
    ScenarioParams p;
    if (auto v = cfg.take_int("n_bs"))
        p.n_bs = *v;
    if (auto v = cfg.take_int("m_re"))
        p.m_re = *v;
    if (auto v = cfg.take_int("m_se"))
        p.m_se = *v;
    bool scan_given = cfg.contains("scan_symbols");
    if (auto v = cfg.take_int("codebook_size"))
        p.codebook_size = *v;
    if (auto v = cfg.take_int("scan_symbols"))
        p.scan_symbols = *v;
    if (!scan_given)
        p.scan_symbols = p.codebook_size;
    if (auto v = cfg.take_int("coherence_symbols"))
        p.coherence_symbols = *v;
    if (auto v = cfg.take_double("carrier_hz"))
        p.carrier_hz = *v;
    take_power(cfg, "tx_power", p.tx_power_w);
    take_power(cfg, "noise_power", p.noise_power_w);
    if (auto v = cfg.take_double("d_bi"))
        p.d_bi = *v;
    if (auto v = cfg.take_double("d_iu"))
        p.d_iu = *v;
    if (auto v = cfg.take_double("d_it"))
        p.d_it = *v;
    if (auto v = cfg.take_double("zeta_bi"))
        p.zeta_bi = *v;
    if (auto v = cfg.take_double("zeta_iu"))
        p.zeta_iu = *v;
    if (auto v = cfg.take_double("zeta_it"))
        p.zeta_it = *v;
    auto sqm = cfg.take_double("rcs_sqm");
    auto dbsm = cfg.take_double("rcs_dbsm");
    if (sqm && dbsm)
        throw ConfigError("both rcs_sqm and rcs_dbsm given");
    if (sqm)
        p.rcs_sqm = *sqm;
    if (dbsm)
        p.rcs_sqm = db_to_linear(*dbsm);
    if (auto v = cfg.take_double("rate_threshold_bps_hz"))
        p.rate_threshold_bps_hz = *v;
    if (auto v = cfg.take_double("beta_ni"))
        p.beta_ni = *v;
    if (auto v = cfg.take_double("vartheta_bi"))
        p.vartheta_bi = *v;
    if (auto v = cfg.take_bool("worst_case_allocation"))
        p.worst_case_allocation = *v;
    if (auto v = cfg.take_bool("interference_guard"))
        p.interference_guard = *v;
    return p;
}

std::string scenario_params_to_config(const ScenarioParams &p)
{
    std::ostringstream os;
    os << "n_bs = " << p.n_bs << '\n'
       << "m_re = " << p.m_re << '\n'
       << "m_se = " << p.m_se << '\n'
       << "codebook_size = " << p.codebook_size << '\n'
       << "scan_symbols = " << p.scan_symbols << '\n'
       << "coherence_symbols = " << p.coherence_symbols << '\n'
       << "carrier_hz = " << fmt(p.carrier_hz) << '\n'
       << "tx_power_w = " << fmt(p.tx_power_w) << '\n'
       << "noise_power_w = " << fmt(p.noise_power_w) << '\n'
       << "d_bi = " << fmt(p.d_bi) << '\n'
       << "d_iu = " << fmt(p.d_iu) << '\n'
       << "d_it = " << fmt(p.d_it) << '\n'
       << "zeta_bi = " << fmt(p.zeta_bi) << '\n'
       << "zeta_iu = " << fmt(p.zeta_iu) << '\n'
       << "zeta_it = " << fmt(p.zeta_it) << '\n'
       << "rcs_sqm = " << fmt(p.rcs_sqm) << '\n'
       << "rate_threshold_bps_hz = " << fmt(p.rate_threshold_bps_hz) << '\n'
       << "beta_ni = " << fmt(p.beta_ni) << '\n'
       << "vartheta_bi = " << fmt(p.vartheta_bi) << '\n'
       << "worst_case_allocation = " << (p.worst_case_allocation ? "true" : "false") << '\n'
       << "interference_guard = " << (p.interference_guard ? "true" : "false") << '\n';
    return os.str();
}

} // namespace isac
