/* crbuilding: finite spherical buildings of GL_n over F_q and complete
 * reducibility decisions, behind a plain C interface.
 *
 * All functions returning crb_status report failure details through the
 * caller-supplied error buffer (truncated to err_len, always
 * NUL-terminated when err_len > 0). Objects returned through out-pointers
 * must be released with the matching *_free function. Handles are opaque
 * and never shared between threads without external synchronization;
 * distinct handles are safe to use concurrently.
 */
#ifndef CRBUILDING_H
#define CRBUILDING_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crb_status {
  CRB_OK = 0,
  CRB_ERR_INVALID_ARGUMENT = 1,
  CRB_ERR_PARSE = 2,
  CRB_ERR_CAP_EXCEEDED = 3,
  CRB_ERR_SINGULAR = 4,
  CRB_ERR_PRECONDITION = 5,
  CRB_ERR_INVARIANT = 6,
  CRB_ERR_IO = 7,
  CRB_ERR_INTERNAL = 8
} crb_status;

typedef struct crb_scenario crb_scenario;
typedef struct crb_report crb_report;
typedef struct crb_building crb_building;

typedef struct crb_options {
  long long cap_order;         /* group closure / element enumeration cap */
  long long cap_subspaces;     /* building simplex and subspace scan cap */
  long long cap_corpus_group;  /* ambient order bound for subgroup corpora */
  unsigned long long seed;     /* randomized spot checks only, never verdicts */
} crb_options;

const char *crb_version(void);
void crb_options_init(crb_options *opts);

/* Scenario files: line-oriented "key = value" with '#' comments; see the
 * project README for the full key list. */
crb_status crb_scenario_parse(const char *text, crb_scenario **out, char *err, size_t err_len);
crb_status crb_scenario_parse_file(const char *path, crb_scenario **out, char *err, size_t err_len);
const char *crb_scenario_id(const crb_scenario *s);
const char *crb_scenario_analysis(const crb_scenario *s);
void crb_scenario_free(crb_scenario *s);

/* Runs the scenario; opts may be NULL for defaults. The report JSON is
 * canonical: keys sorted, deterministic modulo the "timings" object. */
crb_status crb_run(const crb_scenario *s, const crb_options *opts, crb_report **out, char *err,
                   size_t err_len);
const char *crb_report_json(const crb_report *r); /* owned by the report */
int crb_report_consistent(const crb_report *r);   /* 1 when every internal cross-check held */
void crb_report_free(crb_report *r);

/* Direct building census over F_{p^m}. */
crb_status crb_building_build(int n, int p, int m, long long cap_simplices, crb_building **out,
                              char *err, size_t err_len);
long long crb_building_vertex_count(const crb_building *b);
long long crb_building_chamber_count(const crb_building *b);
long long crb_building_simplex_count(const crb_building *b);
void crb_building_free(crb_building *b);

#ifdef __cplusplus
}
#endif

#endif /* CRBUILDING_H */
