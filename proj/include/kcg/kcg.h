/*
 Copyright 2026 The kcgeom Authors.
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

/*
 C interface to libkcgeom: Heisenberg group and Koranyi-Cygan metric,
 complex cross-ratios on the boundary of complex hyperbolic 2-space, the
 Ptolemaean inequality and its equality cases, and the Bergman distance.

 Conventions:
   - Every fallible call returns kcg_status.  On failure a message is kept
     per thread and can be read with kcg_last_error() until the next failing
     call on the same thread.
   - Strings returned through `const char**` are owned by the library and
     stay valid until the next call on the same thread (or, for sampler and
     verifier handles, the next call on that handle).
   - Opaque handles are created by *_create and released by *_destroy;
     destroying NULL is a no-op.
*/

#ifndef KCG_KCG_H_
#define KCG_KCG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KCG_BUILDING_LIBRARY)
#    define KCG_API __declspec(dllexport)
#  else
#    define KCG_API __declspec(dllimport)
#  endif
#else
#  define KCG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kcg_status {
  KCG_OK = 0,
  KCG_ERR_INVALID_ARGUMENT = 1,
  KCG_ERR_PARSE = 2,
  KCG_ERR_DEGENERATE = 3,
  KCG_ERR_INFINITY = 4,
  KCG_ERR_DOMAIN = 5,
  KCG_ERR_UNSATISFIABLE = 6,
  KCG_ERR_INTERNAL = 99
} kcg_status;

typedef struct kcg_complex {
  double re;
  double im;
} kcg_complex;

/* A boundary point: finite (z, t) when is_infinity == 0. */
typedef struct kcg_point {
  int is_infinity;
  kcg_complex z;
  double t;
} kcg_point;

typedef enum kcg_equality_case {
  KCG_EQ_NONE = 0,
  KCG_EQ_SEPARATE13 = 1,
  KCG_EQ_SEPARATE12 = 2,
  KCG_EQ_SEPARATE14 = 3
} kcg_equality_case;

typedef enum kcg_label {
  KCG_LABEL_ABSENT = -1,
  KCG_LABEL_GENERIC = 0,
  KCG_LABEL_RCIRCLE_SEPARATE13 = 1,
  KCG_LABEL_RCIRCLE_SEPARATE12 = 2,
  KCG_LABEL_RCIRCLE_SEPARATE14 = 3,
  KCG_LABEL_CHAIN = 4
} kcg_label;

typedef enum kcg_sample_kind {
  KCG_SAMPLE_GENERIC = 0,
  KCG_SAMPLE_RCIRCLE = 1,
  KCG_SAMPLE_CCIRCLE = 2
} kcg_sample_kind;

typedef struct kcg_triple {
  kcg_complex x1;
  kcg_complex x2;
  kcg_complex x3;
  double res1;
  double res2;
} kcg_triple;

typedef struct kcg_ptolemy_report {
  double s1;
  double s2;
  double slack_sum;
  double slack_diff_lo;
  double slack_diff_hi;
  kcg_equality_case equality_case;
  int r_circle;
  int has_metric;          /* metric_* valid only when nonzero */
  double metric_slacks[3];
  double metric_scale;
  kcg_triple triple;
} kcg_ptolemy_report;

typedef struct kcg_sample_spec {
  uint64_t seed;
  kcg_sample_kind kind;
  int64_t count;
  double box;
  int twist_depth;
  double min_gap;
  int near_degenerate;
} kcg_sample_spec;

typedef struct kcg_verify_report {
  int64_t count;
  int64_t violations;
  double max_variety_residual;
  double min_slack;
  int64_t equality_counts[4]; /* indexed by kcg_equality_case */
  int64_t mismatches;
  double tol;
  double eq_tol;
} kcg_verify_report;

typedef struct kcg_quadruple kcg_quadruple;
typedef struct kcg_sampler kcg_sampler;
typedef struct kcg_verifier kcg_verifier;

KCG_API const char* kcg_version(void);
KCG_API const char* kcg_last_error(void);
KCG_API const char* kcg_status_name(kcg_status status);

/* Defaults for the tolerances used by the CLI and the math modules. */
KCG_API double kcg_default_tol(void);
KCG_API double kcg_default_eq_tol(void);

/* Points and distances */
KCG_API kcg_status kcg_point_parse(const char* json, kcg_point* out);
KCG_API kcg_status kcg_point_to_json(const kcg_point* p, const char** json);
KCG_API kcg_status kcg_dist(const kcg_point* p, const kcg_point* q,
                            double* dk, double* dk_via_form);
KCG_API kcg_status kcg_bergman_distance(kcg_complex z1, kcg_complex z2,
                                        kcg_complex w1, kcg_complex w2,
                                        double* rho);

/* Quadruples */
KCG_API kcg_status kcg_quadruple_create(const kcg_point points[4],
                                        kcg_quadruple** out);
KCG_API kcg_status kcg_quadruple_parse(const char* record_json,
                                       kcg_quadruple** out);
KCG_API void kcg_quadruple_destroy(kcg_quadruple* q);
KCG_API kcg_status kcg_quadruple_point(const kcg_quadruple* q, int index,
                                       kcg_point* out);
KCG_API kcg_label kcg_quadruple_label(const kcg_quadruple* q);

KCG_API kcg_status kcg_cross_ratios(const kcg_quadruple* q, kcg_triple* out);
KCG_API kcg_status kcg_cross_ratios_json(const kcg_quadruple* q,
                                         const char** json);
KCG_API kcg_status kcg_ptolemy(const kcg_quadruple* q, double eq_tol,
                               kcg_ptolemy_report* out);
KCG_API kcg_status kcg_ptolemy_json(const kcg_quadruple* q, double eq_tol,
                                    const char** json);

/* Seeded quadruple streams, one JSONL record per call */
KCG_API void kcg_sample_spec_default(kcg_sample_spec* spec);
KCG_API kcg_status kcg_sampler_create(const kcg_sample_spec* spec,
                                      kcg_sampler** out);
KCG_API void kcg_sampler_destroy(kcg_sampler* s);
/* Sets *line to the next record (no newline), or NULL at end of stream. */
KCG_API kcg_status kcg_sampler_next(kcg_sampler* s, const char** line);

/* Batch verification */
KCG_API kcg_status kcg_verifier_create(double tol, double eq_tol,
                                       kcg_verifier** out);
KCG_API void kcg_verifier_destroy(kcg_verifier* v);
/* Parses and validates one record; blank lines are skipped. */
KCG_API kcg_status kcg_verifier_add(kcg_verifier* v, const char* line);
/* Verifies everything added so far; threads == 0 uses all cores. */
KCG_API kcg_status kcg_verifier_run(kcg_verifier* v, unsigned threads,
                                    kcg_verify_report* out);
/* JSON of the last run. */
KCG_API kcg_status kcg_verifier_report_json(const kcg_verifier* v,
                                            const char** json);

#ifdef __cplusplus
}
#endif

#endif /* KCG_KCG_H_ */
