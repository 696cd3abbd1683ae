// Copyright 2026 The kcgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Batch verification of quadruple datasets.

#ifndef KCG_BATCH_HPP_
#define KCG_BATCH_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "kcg/ptolemy.hpp"
#include "kcg/records.hpp"

namespace kcg {

struct VerifyTolerances {
  double tol = kDefaultSlackTol;  // inequality violation threshold
  double eq_tol = kDefaultEqTol;  // equality window
};

struct VerifyReport {
  std::int64_t count = 0;
  // Quadruples with a Ptolemy slack below -tol, or a metric slack below
  // -tol * scale.
  std::int64_t violations = 0;
  double max_variety_residual = 0.0;
  // Smallest of the three cross-ratio slacks over the batch; +inf if empty.
  double min_slack;
  // Indexed by EqualityCase.
  std::array<std::int64_t, 4> equality_counts{};
  // Labelled records whose classification disagrees with the label.
  std::int64_t mismatches = 0;
  VerifyTolerances tolerances;

  VerifyReport();

  // {count, violations, max_variety_residual, min_slack, equality_counts,
  //  mismatches, tolerances}
  std::string to_json() const;
};

// Whether a classification is consistent with a ground-truth label.  Generic
// carries no claim.  R-circle labels require the matching equality case and
// the R-circle flag; Chain requires neither to fire.
bool label_matches(Label label, const PtolemyReport& report);

// Reduction uses only sums, min and max, so the report does not depend on
// how the batch is split across threads.  threads = 0 picks the hardware
// concurrency.
VerifyReport verify_batch(std::span<const Record> records,
                          const VerifyTolerances& tol, unsigned threads = 0);

}  // namespace kcg

#endif  // KCG_BATCH_HPP_
