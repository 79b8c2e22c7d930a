// Copyright 2026 The arbpulse Authors
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

namespace arbpulse {

/// Tunables shared by the constructors. The CLI fills these from flags and an
/// optional key=value config file.
struct BuildOptions {
  /// Absolute Frobenius-norm threshold below which a series coefficient counts
  /// as cancelled.
  double tol_defect = 1e-9;
  /// Deepest S_n recursion accepted by the Trotter-Suzuki constructors.
  int max_ts_level = 6;
  /// Deepest commutator level accepted by the U_nX ladder.
  int max_block_level = 12;
};

}  // namespace arbpulse
