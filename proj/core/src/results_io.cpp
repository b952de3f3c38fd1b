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

#include "isac/results_io.hpp"

#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace isac {
namespace {

using nlohmann::json;

void put(std::ostream &os, double v)
{
    os << std::setprecision(9) << v;
}

} // namespace

OutputFormat parse_format(std::string_view name)
{
    if (name == "csv")
        return OutputFormat::kCsv;
    if (name == "json")
        return OutputFormat::kJson;
    throw std::invalid_argument("unknown output format: " + std::string(name));
}

const std::string &csv_header()
{
    static const std::string h = "sweep,empirical_mse,mse_stderr,predicted_mse,crb_phase1,crb_whole,rate_mean,"
                                 "rate_reference,p_no_outlier,trials";
    return h;
}

void write_results(const std::vector<SummaryRow> &rows, OutputFormat format, std::ostream &out)
{
    if (rows.empty())
        throw std::invalid_argument("nothing to emit");

    if (format == OutputFormat::kCsv) {
        std::ostringstream os;
        os << csv_header() << '\n';
        for (const auto &r : rows) {
            for (std::size_t i = 0; i < r.sweep.size(); ++i) {
                if (i)
                    os << ':';
                put(os, r.sweep[i]);
            }
            for (double v : {r.empirical_mse, r.mse_stderr, r.predicted_mse, r.crb_phase1, r.crb_whole, r.rate_mean,
                             r.rate_reference, r.p_no_outlier}) {
                os << ',';
                put(os, v);
            }
            os << ',' << r.trials << '\n';
        }
        out << os.str();
        return;
    }

    json arr = json::array();
    for (const auto &r : rows) {
        json o;
        o["sweep"] = r.sweep.size() == 1 ? json(r.sweep[0]) : json(r.sweep);
        o["empirical_mse"] = r.empirical_mse;
        o["mse_stderr"] = r.mse_stderr;
        o["predicted_mse"] = r.predicted_mse;
        o["crb_phase1"] = r.crb_phase1;
        o["crb_whole"] = r.crb_whole;
        o["rate_mean"] = r.rate_mean;
        o["rate_reference"] = r.rate_reference;
        o["p_no_outlier"] = r.p_no_outlier;
        o["trials"] = r.trials;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

void emit_results(const std::vector<SummaryRow> &rows, OutputFormat format, const std::filesystem::path &path)
{
    std::ostringstream buf;
    write_results(rows, format, buf);
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    f << buf.str();
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
}

std::vector<SummaryRow> read_results_json(std::istream &in)
{
    const json arr = json::parse(in);
    if (!arr.is_array())
        throw std::invalid_argument("results JSON must be an array");
    std::vector<SummaryRow> rows;
    for (const auto &o : arr) {
        SummaryRow r;
        const auto &sw = o.at("sweep");
        r.sweep = sw.is_array() ? sw.get<std::vector<double>>() : std::vector<double>{sw.get<double>()};
        r.empirical_mse = o.at("empirical_mse").get<double>();
        r.mse_stderr = o.at("mse_stderr").get<double>();
        r.predicted_mse = o.at("predicted_mse").get<double>();
        r.crb_phase1 = o.at("crb_phase1").get<double>();
        r.crb_whole = o.at("crb_whole").get<double>();
        r.rate_mean = o.at("rate_mean").get<double>();
        r.rate_reference = o.at("rate_reference").get<double>();
        r.p_no_outlier = o.at("p_no_outlier").get<double>();
        r.trials = o.at("trials").get<int>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SummaryRow> read_results_json(const std::filesystem::path &path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot read " + path.string());
    return read_results_json(f);
}

} // namespace isac
