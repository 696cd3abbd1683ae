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

#include "kcg/batch.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include <json.hpp>

namespace kcg {
namespace {

using Json = nlohmann::ordered_json;

void accumulate(VerifyReport& into, const VerifyReport& part) {
  into.count += part.count;
  into.violations += part.violations;
  into.max_variety_residual =
      std::max(into.max_variety_residual, part.max_variety_residual);
  into.min_slack = std::min(into.min_slack, part.min_slack);
  for (std::size_t i = 0; i < into.equality_counts.size(); ++i)
    into.equality_counts[i] += part.equality_counts[i];
  into.mismatches += part.mismatches;
}

VerifyReport verify_range(std::span<const Record> records,
                          const VerifyTolerances& tol) {
  VerifyReport r;
  r.tolerances = tol;
  for (const Record& rec : records) {
    const PtolemyReport p = verify(rec.q, tol.eq_tol);
    ++r.count;
    bool violated = p.min_slack() < -tol.tol;
    if (p.metric) {
      for (double s : p.metric->slack)
        violated = violated || s < -tol.tol * p.metric->scale;
    }
    if (violated) ++r.violations;
    r.max_variety_residual = std::max(
        {r.max_variety_residual, p.triple.res1, p.triple.res2});
    r.min_slack = std::min(r.min_slack, p.min_slack());
    ++r.equality_counts[static_cast<std::size_t>(p.equality_case)];
    if (rec.label && !label_matches(*rec.label, p)) ++r.mismatches;
  }
  return r;
}

}  // namespace

VerifyReport::VerifyReport()
    : min_slack(std::numeric_limits<double>::infinity()) {}

std::string VerifyReport::to_json() const {
  Json j;
  j["count"] = count;
  j["violations"] = violations;
  j["max_variety_residual"] = max_variety_residual;
  if (std::isfinite(min_slack)) {
    j["min_slack"] = min_slack;
  } else {
    j["min_slack"] = nullptr;
  }
  Json counts;
  for (EqualityCase c : {EqualityCase::kNone, EqualityCase::kSeparate13,
                         EqualityCase::kSeparate12, EqualityCase::kSeparate14}) {
    counts[to_string(c)] = equality_counts[static_cast<std::size_t>(c)];
  }
  j["equality_counts"] = counts;
  j["mismatches"] = mismatches;
  j["tolerances"] = {{"tol", tolerances.tol}, {"eq_tol", tolerances.eq_tol}};
  return j.dump();
}

bool label_matches(Label label, const PtolemyReport& report) {
  switch (label) {
    case Label::kGeneric:
      return true;
    case Label::kRCircleSeparate13:
      return report.r_circle &&
             report.equality_case == EqualityCase::kSeparate13;
    case Label::kRCircleSeparate12:
      return report.r_circle &&
             report.equality_case == EqualityCase::kSeparate12;
    case Label::kRCircleSeparate14:
      return report.r_circle &&
             report.equality_case == EqualityCase::kSeparate14;
    case Label::kChain:
      return !report.r_circle && report.equality_case == EqualityCase::kNone;
  }
  return false;
}

VerifyReport verify_batch(std::span<const Record> records,
                          const VerifyTolerances& tol, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n = records.size();
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 1024)));

  VerifyReport total;
  total.tolerances = tol;
  if (threads <= 1) {
    accumulate(total, verify_range(records, tol));
    return total;
  }

  std::vector<VerifyReport> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(n, t * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, t, lo, hi] {
      try {
        parts[t] = verify_range(records.subspan(lo, hi - lo), tol);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  for (const VerifyReport& p : parts) accumulate(total, p);
  return total;
}

}  // namespace kcg
