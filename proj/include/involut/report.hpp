// Copyright 2026 the involut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace involut {

/// Structured outcome of one identity verification.
///
/// Exact-mode reports pass only when every residual is exactly zero; the
/// exact residuals are kept as "p/q" strings in the details. Float-mode
/// reports pass when max_residual <= tolerance.
struct IdentityReport {
  struct Entry {
    long index = 0;          // order n, grid index, or trial number
    double residual = 0.0;   // |residual| as double
    std::string exact;       // exact residual "p/q" (exact mode only)
  };

  std::string identity_name;
  long orders_lo = 0;
  long orders_hi = 0;
  bool exact_mode = false;
  double tolerance = 0.0;  // 0 in exact mode
  double max_residual = 0.0;
  bool passed = false;
  std::vector<Entry> details;
  std::vector<std::string> notes;

  void add_float(long index, double residual) {
    double r = std::fabs(residual);
    details.push_back({index, r, {}});
    if (r > max_residual) max_residual = r;
  }

  void finalize_float() { passed = max_residual <= tolerance; }
};

}  // namespace involut
