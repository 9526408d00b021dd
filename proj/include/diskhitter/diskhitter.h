#ifndef DISKHITTER_H
#define DISKHITTER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define DH_API __declspec(dllexport)
#else
#  define DH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dh_status {
  DH_OK = 0,
  DH_ERR_ARGUMENT = 1,  /* bad flag value or null pointer */
  DH_ERR_PARSE = 2,     /* malformed instance or solution file */
  DH_ERR_IO = 3,
  DH_ERR_TOO_LARGE = 4, /* exhaustive solver size guard */
  DH_ERR_STALLED = 5,   /* random generation gave up */
  DH_ERR_INTERNAL = 6
} dh_status;

typedef enum dh_problem { DH_THS = 0, DH_FVS = 1, DH_OCT = 2 } dh_problem;

typedef enum dh_answer { DH_YES = 0, DH_NO = 1, DH_UNKNOWN = 2 } dh_answer;

typedef struct dh_instance dh_instance;
typedef struct dh_report dh_report;

typedef struct dh_solve_options {
  dh_problem problem;
  int robust;          /* nonzero ignores disks and uses the graph only */
  int p;               /* 0 selects the default for problem and k */
  uint64_t seed;
  int jobs;
  uint64_t state_cap;  /* 0 reads DISKHITTER_STATE_CAP or the built-in cap */
} dh_solve_options;

/* Message for the last failing call on this thread. */
DH_API const char* dh_last_error(void);
DH_API const char* dh_status_name(dh_status status);
DH_API dh_status dh_parse_problem(const char* name, dh_problem* out);

/* Strings handed out by the library are released with this. */
DH_API void dh_string_free(char* s);

DH_API dh_status dh_instance_read(const char* path, dh_instance** out);
DH_API dh_status dh_instance_parse(const char* json, dh_instance** out);
DH_API dh_status dh_instance_generate(int n, int ply, uint64_t seed, dh_instance** out);
DH_API dh_status dh_instance_write(const dh_instance* inst, const char* path);
DH_API dh_status dh_instance_json(const dh_instance* inst, char** out);
DH_API int dh_instance_vertex_count(const dh_instance* inst);
DH_API int dh_instance_is_geometric(const dh_instance* inst);
DH_API void dh_instance_free(dh_instance* inst);

DH_API void dh_solve_options_init(dh_solve_options* opts);
DH_API dh_status dh_select_p(dh_problem problem, int k, int robust, int* out);
DH_API dh_status dh_solve(const dh_instance* inst, int k, const dh_solve_options* opts, dh_report** out);

DH_API dh_answer dh_report_answer(const dh_report* rep);
/* Writes up to `cap` solution ids and returns the full count. */
DH_API size_t dh_report_solution(const dh_report* rep, int32_t* ids, size_t cap);
DH_API dh_status dh_report_json(const dh_report* rep, char** out);
DH_API void dh_report_free(dh_report* rep);

/* *certified is 1 when the ids form a solution of size at most k. */
DH_API dh_status dh_verify(const dh_instance* inst, dh_problem problem, const int32_t* ids, size_t count, int k,
                           int* certified);
DH_API dh_status dh_verify_file(const dh_instance* inst, dh_problem problem, const char* solution_path, int k,
                                int* certified);

/* Exact optimum up to kmax, as JSON {"optimum": n|null, "witness": [...], "enumerated": n}. */
DH_API dh_status dh_oracle(const dh_instance* inst, dh_problem problem, int kmax, int* optimum, char** json);

/* One CSV header line and one row of metrics. k < 0 leaves the kernel
   columns empty; p = 0 selects the triangle default for k. A non-null
   td_path receives the decomposition in PACE format. */
DH_API dh_status dh_stats(const dh_instance* inst, int robust, int k, int p, const char* td_path, char** csv);

#ifdef __cplusplus
}
#endif

#endif
