#ifndef ZETAB_CAPI_H
#define ZETAB_CAPI_H

/* C interface to the boundary zeta-coefficient library.
 *
 * Usage:
 *   zb_session* s = zb_open(config_json);      // or zb_open(NULL) for builtin
 *   char* out = NULL;
 *   int rc = zb_report_zeta(s, 1.0, &out);     // rc: see status codes below
 *   ... use out ...
 *   zb_string_free(out);
 *   zb_close(s);
 *
 * All report functions return a JSON document with deterministic key order
 * and a top-level "pass" flag evaluated against pinned tolerances scaled by
 * tolerance_scale.
 */

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every report function. */
#define ZB_OK 0          /* report produced, all checks passed */
#define ZB_FAIL_NUM 1    /* report produced, a numerical check failed, or the
                            computation broke down (no report in that case) */
#define ZB_FAIL_CONFIG 2 /* invalid configuration or arguments; no report */

typedef struct zb_session zb_session;

/* Parse a JSON problem configuration (see the schema in the project README)
 * and open a session.  Pass NULL to use the builtin example configuration.
 * Always returns a handle; if the configuration is invalid, every report
 * call returns ZB_FAIL_CONFIG and zb_last_error() describes the problem. */
zb_session* zb_open(const char* config_json);
void zb_close(zb_session* s);

/* Message for the most recent failure on this session ("" if none).
 * The pointer stays valid until the next call on the session. */
const char* zb_last_error(const zb_session* s);

/* The builtin example configuration as a JSON string (static storage). */
const char* zb_builtin_config(void);

/* Replays quadrature oracles against every pinned closed-form integral. */
int zb_report_verify(zb_session* s, double tolerance_scale, char** out_json);

/* Five-term constant assembly: closed forms next to fitted constants. */
int zb_report_zeta(zb_session* s, double tolerance_scale, char** out_json);

/* One resolvent-family sweep and fit; family is one of
 * "interior", "leftover", "gq", "pg", "gg".  Includes the (mu, value)
 * samples for CSV export. */
int zb_report_fit(zb_session* s, const char* family, double tolerance_scale,
                  char** out_json);

/* Scaling-defect check at the given positive constant scale. */
int zb_report_defect(zb_session* s, double scale, double tolerance_scale,
                     char** out_json);

/* Interior constant computed with the order-2 model against the squared
 * order-4 model. */
int zb_report_power(zb_session* s, double tolerance_scale, char** out_json);

/* Left-composed against right-composed (kernel route) constant for the
 * singular Green factor. */
int zb_report_traciality(zb_session* s, double tolerance_scale, char** out_json);

/* Release a string returned through an out_json parameter. */
void zb_string_free(char* p);

#ifdef __cplusplus
}
#endif

#endif
