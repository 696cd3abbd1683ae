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

#include "kcg/records.hpp"

#include <cmath>

#include <json.hpp>

#include "kcg/error.hpp"

namespace kcg {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kPointKeys[] = {"p1", "p2", "p3", "p4"};

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(Errc::kParse, what);
}

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) parse_error(std::string(what) + " must be finite");
  return x;
}

BoundaryPoint point_from(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return BoundaryPoint::Infinity();
    parse_error("point string must be \"inf\"");
  }
  if (!j.is_object()) parse_error("point must be an object or \"inf\"");
  const auto z = j.find("z");
  const auto t = j.find("t");
  if (z == j.end() || t == j.end()) parse_error("point needs \"z\" and \"t\"");
  if (!z->is_array() || z->size() != 2) {
    parse_error("\"z\" must be [re, im]");
  }
  return BoundaryPoint(
      Complex(finite_number((*z)[0], "z[0]"), finite_number((*z)[1], "z[1]")),
      finite_number(*t, "t"));
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json parse_json(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) parse_error("invalid JSON");
  return j;
}

Json point_json(const BoundaryPoint& p) {
  if (p.is_infinity()) return "inf";
  const HeisPoint& h = p.finite();
  Json j;
  j["z"] = Json::array({h.z.real(), h.z.imag()});
  j["t"] = h.t;
  return j;
}

Json quadruple_json(const Quadruple& q) {
  Json j;
  for (std::size_t i = 0; i < 4; ++i) j[kPointKeys[i]] = point_json(q.p[i]);
  return j;
}

}  // namespace

BoundaryPoint parse_point(std::string_view json) {
  // A bare inf is accepted as shorthand for the JSON string "inf".
  const auto first = json.find_first_not_of(" \t\r\n");
  const auto last = json.find_last_not_of(" \t\r\n");
  if (first != std::string_view::npos &&
      json.substr(first, last - first + 1) == "inf") {
    return BoundaryPoint::Infinity();
  }
  return point_from(parse_json(json));
}

Record parse_record(std::string_view line) {
  const Json j = parse_json(line);
  if (!j.is_object()) parse_error("record must be a JSON object");
  Record r;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto it = j.find(kPointKeys[i]);
    if (it == j.end()) parse_error(std::string("missing \"") + kPointKeys[i] + "\"");
    r.q.p[i] = point_from(*it);
  }
  if (const auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) parse_error("\"label\" must be a string");
    r.label = parse_label(it->get<std::string>());
    if (!r.label) parse_error("unknown label \"" + it->get<std::string>() + "\"");
  }
  r.q.validate();
  return r;
}

std::string to_json(const BoundaryPoint& p) { return point_json(p).dump(); }

std::string to_json(const LabeledQuadruple& lq) {
  Json j = quadruple_json(lq.q);
  j["label"] = to_string(lq.label);
  return j.dump();
}

std::string to_json(const Record& r) {
  Json j = quadruple_json(r.q);
  if (r.label) j["label"] = to_string(*r.label);
  return j.dump();
}

std::string to_json(const CrossRatioTriple& t) {
  Json j;
  j["x1"] = complex_json(t.x1);
  j["x2"] = complex_json(t.x2);
  j["x3"] = complex_json(t.x3);
  j["res1"] = t.res1;
  j["res2"] = t.res2;
  return j.dump();
}

std::string to_json(const PtolemyReport& r) {
  Json j;
  j["s1"] = r.s1;
  j["s2"] = r.s2;
  j["slack_sum"] = r.slack_sum;
  j["slack_diff_lo"] = r.slack_diff_lo;
  j["slack_diff_hi"] = r.slack_diff_hi;
  j["equality_case"] = to_string(r.equality_case);
  j["r_circle"] = r.r_circle;
  if (r.metric) {
    j["metric_slacks"] = Json::array(
        {r.metric->slack[0], r.metric->slack[1], r.metric->slack[2]});
    j["metric_scale"] = r.metric->scale;
  } else {
    j["metric_slacks"] = nullptr;
  }
  j["x1"] = complex_json(r.triple.x1);
  j["x2"] = complex_json(r.triple.x2);
  j["x3"] = complex_json(r.triple.x3);
  j["res1"] = r.triple.res1;
  j["res2"] = r.triple.res2;
  return j.dump();
}

}  // namespace kcg
