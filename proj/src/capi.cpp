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

#include "kcg/kcg.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "kcg/batch.hpp"
#include "kcg/bergman.hpp"
#include "kcg/error.hpp"
#include "kcg/heisenberg.hpp"
#include "kcg/ptolemy.hpp"
#include "kcg/records.hpp"
#include "kcg/sampling.hpp"

struct kcg_quadruple {
  kcg::Record record;
};

struct kcg_sampler {
  explicit kcg_sampler(const kcg::SampleSpec& spec) : sampler(spec) {}
  kcg::Sampler sampler;
  std::string line;
};

struct kcg_verifier {
  kcg::VerifyTolerances tol;
  std::vector<kcg::Record> records;
  std::string report_json;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_scratch;

kcg_status from_errc(kcg::Errc c) {
  switch (c) {
    case kcg::Errc::kInvalidArgument: return KCG_ERR_INVALID_ARGUMENT;
    case kcg::Errc::kParse: return KCG_ERR_PARSE;
    case kcg::Errc::kDegenerate: return KCG_ERR_DEGENERATE;
    case kcg::Errc::kInfinity: return KCG_ERR_INFINITY;
    case kcg::Errc::kDomain: return KCG_ERR_DOMAIN;
    case kcg::Errc::kUnsatisfiable: return KCG_ERR_UNSATISFIABLE;
  }
  return KCG_ERR_INTERNAL;
}

kcg_status fail(kcg_status s, std::string what) {
  g_last_error = std::move(what);
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
kcg_status guarded(Fn&& fn) {
  try {
    fn();
    return KCG_OK;
  } catch (const kcg::Error& e) {
    return fail(from_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KCG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KCG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KCG_ERR_INTERNAL, "unknown error");
  }
}

kcg_status null_arg(const char* name) {
  return fail(KCG_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

kcg::Complex to_cpp(kcg_complex c) { return {c.re, c.im}; }
kcg_complex to_c(kcg::Complex c) { return {c.real(), c.imag()}; }

kcg::BoundaryPoint to_cpp(const kcg_point& p) {
  if (p.is_infinity) return kcg::BoundaryPoint::Infinity();
  return kcg::BoundaryPoint(to_cpp(p.z), p.t);
}

kcg_point to_c(const kcg::BoundaryPoint& p) {
  if (p.is_infinity()) return {1, {0.0, 0.0}, 0.0};
  return {0, to_c(p.finite().z), p.finite().t};
}

kcg_triple to_c(const kcg::CrossRatioTriple& t) {
  return {to_c(t.x1), to_c(t.x2), to_c(t.x3), t.res1, t.res2};
}

void fill(const kcg::PtolemyReport& r, kcg_ptolemy_report* out) {
  out->s1 = r.s1;
  out->s2 = r.s2;
  out->slack_sum = r.slack_sum;
  out->slack_diff_lo = r.slack_diff_lo;
  out->slack_diff_hi = r.slack_diff_hi;
  out->equality_case = static_cast<kcg_equality_case>(r.equality_case);
  out->r_circle = r.r_circle ? 1 : 0;
  out->has_metric = r.metric ? 1 : 0;
  for (int i = 0; i < 3; ++i)
    out->metric_slacks[i] = r.metric ? r.metric->slack[i] : 0.0;
  out->metric_scale = r.metric ? r.metric->scale : 0.0;
  out->triple = to_c(r.triple);
}

void fill(const kcg::VerifyReport& r, kcg_verify_report* out) {
  out->count = r.count;
  out->violations = r.violations;
  out->max_variety_residual = r.max_variety_residual;
  out->min_slack = r.min_slack;
  for (int i = 0; i < 4; ++i) out->equality_counts[i] = r.equality_counts[i];
  out->mismatches = r.mismatches;
  out->tol = r.tolerances.tol;
  out->eq_tol = r.tolerances.eq_tol;
}

bool blank(const char* s) {
  for (; *s; ++s)
    if (*s != ' ' && *s != '\t' && *s != '\r' && *s != '\n') return false;
  return true;
}

}  // namespace

extern "C" {

const char* kcg_version(void) { return "1.0.0"; }

const char* kcg_last_error(void) { return g_last_error.c_str(); }

const char* kcg_status_name(kcg_status status) {
  switch (status) {
    case KCG_OK: return "ok";
    case KCG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KCG_ERR_PARSE: return "parse error";
    case KCG_ERR_DEGENERATE: return "degenerate input";
    case KCG_ERR_INFINITY: return "point at infinity";
    case KCG_ERR_DOMAIN: return "domain error";
    case KCG_ERR_UNSATISFIABLE: return "unsatisfiable constraints";
    case KCG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

double kcg_default_tol(void) { return kcg::kDefaultSlackTol; }
double kcg_default_eq_tol(void) { return kcg::kDefaultEqTol; }

kcg_status kcg_point_parse(const char* json, kcg_point* out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] { *out = to_c(kcg::parse_point(json)); });
}

kcg_status kcg_point_to_json(const kcg_point* p, const char** json) {
  if (!p) return null_arg("p");
  if (!json) return null_arg("json");
  return guarded([&] {
    g_scratch = kcg::to_json(to_cpp(*p));
    *json = g_scratch.c_str();
  });
}

kcg_status kcg_dist(const kcg_point* p, const kcg_point* q, double* dk,
                    double* dk_via_form) {
  if (!p) return null_arg("p");
  if (!q) return null_arg("q");
  return guarded([&] {
    const kcg::BoundaryPoint a = to_cpp(*p);
    const kcg::BoundaryPoint b = to_cpp(*q);
    const double d1 = kcg::dk(a, b);
    const double d2 = kcg::dk_via_form(a, b);
    if (dk) *dk = d1;
    if (dk_via_form) *dk_via_form = d2;
  });
}

kcg_status kcg_bergman_distance(kcg_complex z1, kcg_complex z2,
                                kcg_complex w1, kcg_complex w2, double* rho) {
  if (!rho) return null_arg("rho");
  return guarded([&] {
    *rho = kcg::bergman_distance(kcg::InteriorPoint{to_cpp(z1), to_cpp(z2)},
                                 kcg::InteriorPoint{to_cpp(w1), to_cpp(w2)});
  });
}

kcg_status kcg_quadruple_create(const kcg_point points[4],
                                kcg_quadruple** out) {
  if (!points) return null_arg("points");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    kcg::Record r;
    for (int i = 0; i < 4; ++i) r.q.p[i] = to_cpp(points[i]);
    r.q.validate();
    *out = new kcg_quadruple{std::move(r)};
  });
}

kcg_status kcg_quadruple_parse(const char* record_json, kcg_quadruple** out) {
  if (!record_json) return null_arg("record_json");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded(
      [&] { *out = new kcg_quadruple{kcg::parse_record(record_json)}; });
}

void kcg_quadruple_destroy(kcg_quadruple* q) { delete q; }

kcg_status kcg_quadruple_point(const kcg_quadruple* q, int index,
                               kcg_point* out) {
  if (!q) return null_arg("q");
  if (!out) return null_arg("out");
  if (index < 0 || index > 3) {
    return fail(KCG_ERR_INVALID_ARGUMENT, "index must be in [0, 3]");
  }
  *out = to_c(q->record.q.p[static_cast<std::size_t>(index)]);
  return KCG_OK;
}

kcg_label kcg_quadruple_label(const kcg_quadruple* q) {
  if (!q || !q->record.label) return KCG_LABEL_ABSENT;
  return static_cast<kcg_label>(*q->record.label);
}

kcg_status kcg_cross_ratios(const kcg_quadruple* q, kcg_triple* out) {
  if (!q) return null_arg("q");
  if (!out) return null_arg("out");
  return guarded([&] { *out = to_c(kcg::triple(q->record.q)); });
}

kcg_status kcg_cross_ratios_json(const kcg_quadruple* q, const char** json) {
  if (!q) return null_arg("q");
  if (!json) return null_arg("json");
  return guarded([&] {
    g_scratch = kcg::to_json(kcg::triple(q->record.q));
    *json = g_scratch.c_str();
  });
}

kcg_status kcg_ptolemy(const kcg_quadruple* q, double eq_tol,
                       kcg_ptolemy_report* out) {
  if (!q) return null_arg("q");
  if (!out) return null_arg("out");
  return guarded([&] { fill(kcg::verify(q->record.q, eq_tol), out); });
}

kcg_status kcg_ptolemy_json(const kcg_quadruple* q, double eq_tol,
                            const char** json) {
  if (!q) return null_arg("q");
  if (!json) return null_arg("json");
  return guarded([&] {
    g_scratch = kcg::to_json(kcg::verify(q->record.q, eq_tol));
    *json = g_scratch.c_str();
  });
}

void kcg_sample_spec_default(kcg_sample_spec* spec) {
  if (!spec) return;
  const kcg::SampleSpec d;
  spec->seed = d.seed;
  spec->kind = static_cast<kcg_sample_kind>(d.kind);
  spec->count = d.count;
  spec->box = d.box;
  spec->twist_depth = d.twist_depth;
  spec->min_gap = d.min_gap;
  spec->near_degenerate = d.near_degenerate ? 1 : 0;
}

kcg_status kcg_sampler_create(const kcg_sample_spec* spec, kcg_sampler** out) {
  if (!spec) return null_arg("spec");
  if (!out) return null_arg("out");
  *out = nullptr;
  if (spec->kind < KCG_SAMPLE_GENERIC || spec->kind > KCG_SAMPLE_CCIRCLE) {
    return fail(KCG_ERR_INVALID_ARGUMENT, "unknown sample kind");
  }
  return guarded([&] {
    kcg::SampleSpec s;
    s.seed = spec->seed;
    s.kind = static_cast<kcg::SampleKind>(spec->kind);
    s.count = spec->count;
    s.box = spec->box;
    s.twist_depth = spec->twist_depth;
    s.min_gap = spec->min_gap;
    s.near_degenerate = spec->near_degenerate != 0;
    *out = new kcg_sampler(s);
  });
}

void kcg_sampler_destroy(kcg_sampler* s) { delete s; }

kcg_status kcg_sampler_next(kcg_sampler* s, const char** line) {
  if (!s) return null_arg("s");
  if (!line) return null_arg("line");
  *line = nullptr;
  if (s->sampler.done()) return KCG_OK;
  return guarded([&] {
    s->line = kcg::to_json(s->sampler.next());
    *line = s->line.c_str();
  });
}

kcg_status kcg_verifier_create(double tol, double eq_tol, kcg_verifier** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  if (!(tol >= 0.0) || !(eq_tol >= 0.0)) {
    return fail(KCG_ERR_INVALID_ARGUMENT, "tolerances must be >= 0");
  }
  return guarded([&] {
    auto* v = new kcg_verifier;
    v->tol = {tol, eq_tol};
    *out = v;
  });
}

void kcg_verifier_destroy(kcg_verifier* v) { delete v; }

kcg_status kcg_verifier_add(kcg_verifier* v, const char* line) {
  if (!v) return null_arg("v");
  if (!line) return null_arg("line");
  if (blank(line)) return KCG_OK;
  return guarded([&] { v->records.push_back(kcg::parse_record(line)); });
}

kcg_status kcg_verifier_run(kcg_verifier* v, unsigned threads,
                            kcg_verify_report* out) {
  if (!v) return null_arg("v");
  return guarded([&] {
    const kcg::VerifyReport r = kcg::verify_batch(v->records, v->tol, threads);
    v->report_json = r.to_json();
    if (out) fill(r, out);
  });
}

kcg_status kcg_verifier_report_json(const kcg_verifier* v, const char** json) {
  if (!v) return null_arg("v");
  if (!json) return null_arg("json");
  if (v->report_json.empty()) {
    return fail(KCG_ERR_INVALID_ARGUMENT, "verifier has not been run");
  }
  *json = v->report_json.c_str();
  return KCG_OK;
}

}  // extern "C"
