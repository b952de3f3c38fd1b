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

// Tabular output of Monte-Carlo summaries.
//
// CSV: fixed header, one line per row, 9 significant digits. A two-axis
// sweep value is written as "outer:inner". JSON: an array of objects with the
// same keys, full double precision, so it reads back to identical rows.

#include "isac/experiment.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace isac {

enum class OutputFormat
{
    kCsv,
    kJson,
};

/// "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

/// sweep,empirical_mse,mse_stderr,predicted_mse,crb_phase1,crb_whole,rate_mean,rate_reference,p_no_outlier,trials
const std::string &csv_header();

/// Throws std::invalid_argument("nothing to emit") for empty rows.
void write_results(const std::vector<SummaryRow> &rows, OutputFormat format, std::ostream &out);
/// As write_results; throws std::runtime_error if the file cannot be written.
void emit_results(const std::vector<SummaryRow> &rows, OutputFormat format, const std::filesystem::path &path);

/// Reads rows written in JSON form. Diagnostic-only fields are left at zero.
std::vector<SummaryRow> read_results_json(std::istream &in);
std::vector<SummaryRow> read_results_json(const std::filesystem::path &path);

} // namespace isac
