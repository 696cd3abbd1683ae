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

// JSON text formats.
//
// A point is {"z": [re, im], "t": t} or the string "inf".  A quadruple record
// is one JSON object per line:
//
//   {"p1": <point>, "p2": <point>, "p3": <point>, "p4": <point>,
//    "label": "RCircleSeparate13"}
//
// with "label" optional.  parse_point also takes a bare inf, which is handy
// on a command line.  Doubles are written in shortest round-trip form, so
// writing is byte-reproducible and parse(write(x)) == x.

#ifndef KCG_RECORDS_HPP_
#define KCG_RECORDS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "kcg/cross_ratio.hpp"
#include "kcg/ptolemy.hpp"
#include "kcg/sampling.hpp"

namespace kcg {

struct Record {
  Quadruple q;
  std::optional<Label> label;
};

// Both throw kParse on malformed text or non-finite numbers.  parse_record
// also rejects quadruples that are not pairwise distinct (kDegenerate).
BoundaryPoint parse_point(std::string_view json);
Record parse_record(std::string_view line);

std::string to_json(const BoundaryPoint& p);
// One line, no trailing newline.
std::string to_json(const LabeledQuadruple& lq);
std::string to_json(const Record& r);
std::string to_json(const CrossRatioTriple& t);
std::string to_json(const PtolemyReport& r);

}  // namespace kcg

#endif  // KCG_RECORDS_HPP_
