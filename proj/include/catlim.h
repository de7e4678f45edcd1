#ifndef CATLIM_H
#define CATLIM_H

/* C interface to the catlim verification engine. All functions returning
 * clm_status report CLM_OK on success; on any other status the detail
 * message is available from clm_engine_last_error until the next call on
 * the same engine. Strings written to char** outputs are owned by the
 * caller and released with clm_string_free. Engines are not thread-safe;
 * use one engine per thread. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CATLIM_API __declspec(dllexport)
#else
#define CATLIM_API __attribute__((visibility("default")))
#endif

typedef struct clm_engine clm_engine;
typedef struct clm_diagram clm_diagram;

typedef enum clm_status {
  CLM_OK = 0,
  CLM_ERR_INVALID_ARGUMENT = 1,
  CLM_ERR_PARSE = 2,
  CLM_ERR_VALIDATION = 3,
  CLM_ERR_BUDGET = 4,
  CLM_ERR_NO_FACTORIZATION = 5,
  CLM_ERR_INTERNAL = 6
} clm_status;

CATLIM_API const char* clm_version(void);

/* Engine creation reads the CATLIM_ENUM_BUDGET environment variable (a
 * positive integer) as the enumeration step budget when it is set. */
CATLIM_API clm_engine* clm_engine_new(void);
CATLIM_API void clm_engine_free(clm_engine* engine);
CATLIM_API const char* clm_engine_last_error(const clm_engine* engine);
CATLIM_API clm_status clm_engine_set_enumeration_budget(clm_engine* engine,
                                                        uint64_t steps);

/* Diagram JSON: {"category":"finset"|"finvec", "field_q":q, "nodes":[...],
 * "edges":[...]} as documented in the repository README. */
CATLIM_API clm_status clm_diagram_parse(clm_engine* engine, const char* json_text,
                                        clm_diagram** out_diagram);
CATLIM_API clm_status clm_diagram_load_file(clm_engine* engine, const char* path,
                                            clm_diagram** out_diagram);
/* Seed-deterministic random diagram with node sizes at most 2 (the
 * reduction corpus policy). Pass 0 for the default bounds (6 nodes, 12
 * edges). */
CATLIM_API clm_status clm_diagram_random_set3(clm_engine* engine, uint64_t seed,
                                              int max_nodes, int max_edges,
                                              clm_diagram** out_diagram);
CATLIM_API void clm_diagram_free(clm_diagram* diagram);
CATLIM_API clm_status clm_diagram_to_json(clm_engine* engine,
                                          const clm_diagram* diagram,
                                          char** out_json);

/* Computes the limit of the diagram and returns one report object. */
CATLIM_API clm_status clm_limit_report(clm_engine* engine, const clm_diagram* diagram,
                                       char** out_report_json);

/* Runs a named check ("prop38", "set3", ..., or "all") with a JSON object
 * of parameters (NULL or "{}" for defaults) and returns a JSON array of
 * report objects. Budget overruns inside a check surface as reports with
 * status "skipped", not as an error status. */
CATLIM_API clm_status clm_run_check(clm_engine* engine, const char* check_id,
                                    const char* params_json,
                                    char** out_reports_json);

/* Renders one report object, or an array of them, as human-readable lines. */
CATLIM_API clm_status clm_report_render_text(const char* report_json, char** out_text);

CATLIM_API void clm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CATLIM_H */
