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

#include <cstdint>
#include <string>
#include <vector>

#include "heisim/gate.hpp"

namespace heisim {

struct CheckResult {
  std::string name;
  bool passed;
  double max_deviation;
  double tolerance;
  std::string detail;
};

struct VerifyOptions {
  /// Matrix used for the bit-exact CNOT check. Replaced in tests to make sure
  /// a broken matrix is caught.
  Gate::Matrix cnot_matrix = heisim::cnot_matrix();
  std::uint64_t seed = 9001;
};

/// Runs every end-to-end check of the experiment and the engines:
///   eq5_cnot_action, bell_state_t1, descriptors_t2, correlation_t2,
///   joint_probability_t2, linear_terms_vanish, sign_audit_t4,
///   picture_equivalence, chsh_violation_t2, no_signaling_t3,
///   descriptor_locality.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace heisim
