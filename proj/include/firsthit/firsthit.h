/*
 * Copyright 2026 The firsthit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the firsthit library.
 *
 * The heavy lifting runs behind opaque handles; every entry point returns an
 * fht_status and never throws across the boundary. Full runs are driven by
 * JSON configuration text (schema documented in the project README) and
 * return their artifacts as named in-memory files plus a JSON summary.
 */

#ifndef FIRSTHIT_FIRSTHIT_H
#define FIRSTHIT_FIRSTHIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FHT_API __declspec(dllexport)
#else
#define FHT_API __attribute__((visibility("default")))
#endif

/* Status codes; nonzero values double as CLI exit codes. */
typedef enum fht_status {
    FHT_OK = 0,
    FHT_ERR_INTERNAL = 1,   /* unexpected failure */
    FHT_ERR_CONFIG = 2,     /* bad configuration or bad arguments */
    FHT_ERR_NUMERICAL = 3,  /* domain, arbitrage or integrity failure */
    FHT_ERR_VALIDATION = 4  /* cross-check tolerance breach */
} fht_status;

/* Result of a full run; free with fht_result_free. */
typedef struct fht_result fht_result;

FHT_API const char* fht_version(void);

/*
 * Execute a command: "solve", "validate", "sweep" or "eds".
 * config_json holds the run configuration; overrides_json (optional, may be
 * NULL) is deep-merged on top of it. On success *out receives a result
 * handle. A validation run that finds breaches still produces a result;
 * fht_result_exit_code reports 4 in that case.
 */
FHT_API fht_status fht_run(const char* command, const char* config_json,
                           const char* overrides_json, fht_result** out);

FHT_API void fht_result_free(fht_result* result);

/* 0, or 3/4 when the run embedded per-rung errors / validation breaches. */
FHT_API int fht_result_exit_code(const fht_result* result);

/* JSON summary of the run (owned by the result). */
FHT_API const char* fht_result_summary_json(const fht_result* result);

/* Named output artifacts (CSV tables, JSON records). */
FHT_API int fht_result_file_count(const fht_result* result);
FHT_API const char* fht_result_file_name(const fht_result* result, int index);
FHT_API const char* fht_result_file_content(const fht_result* result, int index);

/*
 * Last error of the calling thread as a JSON object {"code": ..,
 * "message": ..}; empty object when the last call succeeded.
 */
FHT_API const char* fht_last_error(void);

/* ------------------------------------------------------------------------
 * Scalar pricing helpers. Quotes use the forward-Black convention; slopes
 * are per unit log-strike (dvol/dlnK).
 * ---------------------------------------------------------------------- */

FHT_API fht_status fht_norm_cdf(double x, double* out);

FHT_API fht_status fht_bs_put(double forward, double strike, double vol, double ttm,
                              double df, double* out);

FHT_API fht_status fht_bs_put_vega(double forward, double strike, double vol, double ttm,
                                   double df, double* out);

/* Digital put under strike-independent vol: df * N(-d2). */
FHT_API fht_status fht_digital_put(double forward, double strike, double vol, double ttm,
                                   double df, double* out);

/* Digital put with the smile correction: df * N(-d2) + vega * dvol/dK. */
FHT_API fht_status fht_digital_put_skew(double forward, double strike, double vol,
                                        double ttm, double df, double slope_log_strike,
                                        double* out);

/* First-passage probability of a lower barrier under flat-vol GBM. */
FHT_API fht_status fht_first_passage_probability(double spot, double barrier, double vol,
                                                 double drift, double ttm, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FIRSTHIT_FIRSTHIT_H */
