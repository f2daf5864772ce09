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

#include <iosfwd>
#include <optional>
#include <string>

namespace heisim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "0.5", "-pi/4", "3*pi/4", "2pi", "π/3". Returns nullopt if the text
/// is not a finite angle. With `degrees`, the value is converted to radians.
std::optional<double> parse_angle(const std::string& text, bool degrees = false);

/// Whole command-line program; main() only forwards to this.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heisim::cli
