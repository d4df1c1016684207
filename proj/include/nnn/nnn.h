/* C interface to the nnn library. Every call returns an nnn_status; on
 * failure nnn_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are owned by the caller
 * and released with nnn_string_free. */
#ifndef NNN_NNN_H
#define NNN_NNN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NNN_API __declspec(dllexport)
#else
#define NNN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nnn_status {
  NNN_OK = 0,
  NNN_ERR_INVALID_ARGUMENT = 1,
  NNN_ERR_PRECONDITION = 2,
  NNN_ERR_CAP_EXCEEDED = 3,
  NNN_ERR_INTERNAL = 4,
  NNN_ERR_IO = 5
} nnn_status;

typedef enum nnn_family { NNN_CYCLIC = 0, NNN_DIHEDRAL = 1 } nnn_family;

typedef enum nnn_sweep_mode { NNN_SWEEP_DIGRAPH = 0, NNN_SWEEP_GRAPH = 1 } nnn_sweep_mode;

typedef struct nnn_group nnn_group;
typedef struct nnn_digraph nnn_digraph;
typedef struct nnn_sweep nnn_sweep;
typedef struct nnn_report nnn_report;

/* `label` names the group being swept. */
typedef void (*nnn_progress_fn)(const char* label, size_t done, size_t total, void* user);

NNN_API const char* nnn_version(void);
NNN_API const char* nnn_status_name(nnn_status status);
NNN_API const char* nnn_last_error(void);
NNN_API void nnn_string_free(char* s);

/* Groups: C_n (order n) or D_2n (order 2n). */
NNN_API nnn_status nnn_group_create(nnn_family family, int n, nnn_group** out);
/* "cyclic:9", "dihedral:6", "C9", "D12". */
NNN_API nnn_status nnn_group_parse(const char* text, nnn_group** out);
NNN_API void nnn_group_destroy(nnn_group* g);
NNN_API int nnn_group_order(const nnn_group* g);
NNN_API nnn_status nnn_group_name(const nnn_group* g, char** out);
/* Parses a comma-separated element list, either integer codes or, with
 * `symbolic` set, words such as a^3*b. Writes at most `capacity` codes and
 * stores the number parsed in *count; the result is sorted and
 * duplicate-free. */
NNN_API nnn_status nnn_group_parse_set(const nnn_group* g, const char* text, int symbolic,
                                       uint32_t* codes, size_t capacity, size_t* count);
NNN_API nnn_status nnn_group_format_element(const nnn_group* g, uint32_t code, char** out);

/* Cayley digraphs. */
NNN_API nnn_status nnn_digraph_create(const nnn_group* g, const uint32_t* codes, size_t count,
                                      nnn_digraph** out);
NNN_API nnn_status nnn_digraph_from_json(const char* json, nnn_digraph** out);
NNN_API void nnn_digraph_destroy(nnn_digraph* d);
NNN_API nnn_status nnn_digraph_to_json(const nnn_digraph* d, char** out);
NNN_API nnn_status nnn_digraph_edge_list(const nnn_digraph* d, char** out);
NNN_API nnn_status nnn_classify(const nnn_digraph* d, char** json_out);
NNN_API nnn_status nnn_automorphisms(const nnn_digraph* d, char** json_out);

/* The NNN Cayley graph on D_2n with its witness subgroup and classification.
 * Requires n even, n >= 6, n != 8. */
NNN_API nnn_status nnn_construct_dihedral_nnn(int n, char** json_out);

/* Sweeps over all connection sets (or one per Aut(G)-orbit with `reduce`). */
NNN_API nnn_status nnn_sweep_run(const nnn_group* g, nnn_sweep_mode mode, int reduce,
                                 unsigned jobs, nnn_progress_fn progress, void* user,
                                 nnn_sweep** out);
NNN_API size_t nnn_sweep_size(const nnn_sweep* s);
NNN_API nnn_status nnn_sweep_record_json(const nnn_sweep* s, size_t index, char** out);
NNN_API nnn_status nnn_sweep_summary_json(const nnn_sweep* s, char** out);
NNN_API void nnn_sweep_destroy(nnn_sweep* s);

/* Checks the expected verdict table for theorem 1 (cyclic, max_n <= 16) or
 * theorem 2 (dihedral, max_n <= 8). */
NNN_API nnn_status nnn_verify(int theorem, int max_n, unsigned jobs, nnn_progress_fn progress,
                              void* user, nnn_report** out);
NNN_API int nnn_report_passed(const nnn_report* r);
NNN_API nnn_status nnn_report_json(const nnn_report* r, char** out);
/* Sets *out to NULL when every group passed or no single record is at fault. */
NNN_API nnn_status nnn_report_counterexample_json(const nnn_report* r, char** out);
NNN_API void nnn_report_destroy(nnn_report* r);

#ifdef __cplusplus
}
#endif

#endif
