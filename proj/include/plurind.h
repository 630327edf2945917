/* plurind — Newton polyhedra, polyhedral indicators, and Monge-Ampere mass
 * bounds for polynomial mappings, with a brute-force zero-counting oracle.
 *
 * C API of the shared library. All functions are thread-compatible: distinct
 * handles may be used concurrently, a single handle must not be mutated
 * while in use. Strings returned through char** out-parameters are owned by
 * the caller and must be released with plurind_string_free().
 */
#ifndef PLURIND_H
#define PLURIND_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status values. The CLI maps them one-to-one onto exit codes. */
typedef enum plurind_status {
  PLURIND_OK = 0,
  PLURIND_VIOLATION = 1,   /* verify found a failing inequality */
  PLURIND_PARSE_ERROR = 2, /* malformed system file */
  PLURIND_DEGENERATE = 3,  /* zero polynomial, common component, ... */
  PLURIND_DIMENSION = 4,   /* unsupported dimension (n > 4, oracle n > 2) */
  PLURIND_INVALID = 5,     /* invalid argument */
  PLURIND_NUMERIC = 6      /* numeric iteration failed to converge */
} plurind_status;

/* Opaque parsed system (polynomials + basepoint + exponent weight). */
typedef struct plurind_system plurind_system;

/* Parse a system file. On success *out receives a handle. On failure *out is
 * NULL and *errmsg (when non-NULL) receives a message. */
plurind_status plurind_system_parse(const char* text, plurind_system** out,
                                    char** errmsg);

void plurind_system_free(plurind_system* sys);
void plurind_string_free(char* str);

/* Number of variables of the parsed system. */
int plurind_system_dimension(const plurind_system* sys);

/* Override the basepoint; point_text uses the file grammar, e.g. "(1, -1)". */
plurind_status plurind_system_set_basepoint(plurind_system* sys,
                                            const char* point_text,
                                            char** errmsg);

/* Attach a display name (used in reports; typically the file stem). */
plurind_status plurind_system_set_name(plurind_system* sys, const char* name);

/* JSON reports (schema: schemas/report.schema.json). Exact rationals are
 * serialized as "p" / "p/q" strings, floating values as JSON numbers. */
plurind_status plurind_report_indicator(const plurind_system* sys,
                                        char** json_out, char** errmsg);
plurind_status plurind_report_newton(const plurind_system* sys,
                                     char** json_out, char** errmsg);
/* directions: semicolon-separated rational vectors, e.g. "1,2;1/2,3"; may be
 * NULL or empty for the bound chain only. */
plurind_status plurind_report_bounds(const plurind_system* sys,
                                     const char* directions, char** json_out,
                                     char** errmsg);
plurind_status plurind_report_zeros(const plurind_system* sys, char** json_out,
                                    char** errmsg);

/* Runs the inequality suite. Returns PLURIND_VIOLATION (with the full report
 * in *json_out) when at least one check fails. *violations receives the
 * number of failing checks when non-NULL. */
plurind_status plurind_report_verify(const plurind_system* sys,
                                     int* violations, char** json_out,
                                     char** errmsg);

/* Newton polygon as an SVG document; n = 2 systems only. */
plurind_status plurind_render_newton_svg(const plurind_system* sys,
                                         char** svg_out, char** errmsg);

const char* plurind_status_name(plurind_status status);
const char* plurind_version(void);

#ifdef __cplusplus
}
#endif

#endif /* PLURIND_H */
