// Copyright 2026 The heisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>

#include "heisim/bell.hpp"
#include "heisim/epr.hpp"
#include "heisim/picture_check.hpp"
#include "heisim/verification.hpp"

// Text renderings for the CLI. JSON numbers carry 12 significant digits and
// human tables 6; everything is plain ASCII with "\n" line endings.
namespace heisim::io {

/// Rounds to 12 significant digits, the precision used in all JSON output.
double round12(double v);

/// Column order shared by experiment CSV rows and the flat JSON keys.
std::span<const char* const> experiment_columns();

/// One experiment as a JSON object. With `descriptors`, the canonical
/// renderings are added under "descriptors" as q_z2_t2 / q_z3_t2.
std::string experiment_json(const epr::ExperimentReport& report, const epr::DescriptorPair* descriptors = nullptr);
std::string experiment_table(const epr::ExperimentReport& report, const epr::DescriptorPair* descriptors = nullptr);

/// Header plus one row per report.
std::string experiments_csv(std::span<const epr::ExperimentReport> rows);
/// {"points": N, "rows": [...]} with the flat keys only.
std::string experiments_json(std::span<const epr::ExperimentReport> rows);

std::string chsh_json(const bell::ChshResult& r);
std::string chsh_csv(std::span<const bell::ChshResult> rows);
std::string chsh_table(const bell::ChshResult& r);
std::string chsh_scan_json(const bell::ChshScan& scan);
std::string chsh_scan_table(const bell::ChshScan& scan);

std::string verification_json(std::span<const CheckResult> results);
std::string verification_table(std::span<const CheckResult> results);

std::string picture_check_json(const PictureCheckReport& report, std::uint64_t seed, double tolerance);
std::string picture_check_table(const PictureCheckReport& report, std::uint64_t seed, double tolerance);

}  // namespace heisim::io
