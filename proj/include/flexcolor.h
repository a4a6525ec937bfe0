#ifndef FLEXCOLOR_H
#define FLEXCOLOR_H

/* C interface to the coloring toolkit. Handles are opaque; every operation
 * returns a status code and, on success, a heap-allocated report string the
 * caller releases with flexcolor_string_free. Error details for the calling
 * thread are available via flexcolor_last_error until the next call. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    FLEXCOLOR_OK = 0,       /* operation succeeded, answer is "yes" */
    FLEXCOLOR_NO = 1,       /* operation succeeded, answer is "no" */
    FLEXCOLOR_BAD_INPUT = 2,/* parse error, precondition violation, cap */
    FLEXCOLOR_INTERNAL = 3  /* diagnostic that contradicts the theory */
};

typedef struct flexcolor_graph flexcolor_graph;

/* Graph document: `planar <n>`, lines `v <id> : <nbr> ...` in clockwise
 * order, optional `outer : <v0> <v1> ...`. Returns NULL on error. */
flexcolor_graph* flexcolor_graph_parse(const char* text);
void flexcolor_graph_free(flexcolor_graph* g);
int flexcolor_graph_vertex_count(const flexcolor_graph* g);

/* Message of the most recent failure on this thread; never NULL. */
const char* flexcolor_last_error(void);

/* Facial walks, one `face <id> [outer] : v ...` line each. */
int flexcolor_faces(const flexcolor_graph* g, char** out);

/* Reducibility verdict for the induced subgraph on verts; FLEXCOLOR_NO with
 * a witness report when a pinned or decremented assignment is uncolorable. */
int flexcolor_check_reducible(const flexcolor_graph* g, const int* verts, int nverts,
                              int d, int k, int cap, char** out);

/* Runs the configuration pipeline; report starts `config <kind> vertices:`. */
int flexcolor_find_config(const flexcolor_graph* g, char** out);

/* Charge audit report; first line `total <p/q>`. */
int flexcolor_discharge(const flexcolor_graph* g, char** out);

/* One coloring from the list document (`L <v> : c ...` lines), as `c <v>
 * <color>` lines; FLEXCOLOR_NO when there is none. */
int flexcolor_color(const flexcolor_graph* g, const char* lists, char** out);

/* Exact number of list colorings and the 2^(n/b) bound. FLEXCOLOR_NO when
 * the count is zero. */
int flexcolor_count(const flexcolor_graph* g, const char* lists, int b, char** out);

/* Best-of-trials request satisfaction. The request document decides the
 * flavor: `r <v> <c>` lines, or `w <v> <c> <weight>` lines for weights. */
int flexcolor_flex(const flexcolor_graph* g, const char* lists, const char* request,
                   long long trials, uint64_t seed, char** out);

/* Per-(vertex, color) hit counts over `trials` sampled colorings. */
int flexcolor_estimate(const flexcolor_graph* g, const char* lists, long long trials,
                       uint64_t seed, char** out);

/* Exact k^(-b(k-1)) as `epsilon 1/<digits>`. */
int flexcolor_epsilon(int k, int b, char** out);

/* Random triangle-free plane graph document with n quadrangulation vertices
 * and the given number of edge subdivisions; deterministic in the seed. */
int flexcolor_gen(int n, uint64_t seed, int subdivisions, char** out);

void flexcolor_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
