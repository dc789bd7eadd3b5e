/* C interface to the group / Cayley-graph toolkit.
 *
 * All functions return grr_status; GRR_OK means success. On failure a
 * human-readable message is available from grr_last_error() (thread-local).
 * Output strings are heap-allocated UTF-8 owned by the caller; release them
 * with grr_free(). Handles are released with the matching *_close().
 */
#ifndef GRR_H
#define GRR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum grr_status {
  GRR_OK = 0,
  GRR_ERR_ARGUMENT = 1,
  GRR_ERR_HYPOTHESIS = 2, /* structural hypothesis violated (e.g. abelian input) */
  GRR_ERR_SEARCH = 3,     /* budget exhausted before a witness was found */
  GRR_ERR_IO = 4,         /* unreadable/malformed input */
  GRR_ERR_UNSUPPORTED = 5,
  GRR_ERR_INTERNAL = 6
} grr_status;

typedef struct grr_group grr_group;   /* opaque group oracle */
typedef struct grr_genset grr_genset; /* opaque connection set bound to a group */

const char* grr_version(void);
const char* grr_status_name(grr_status s);
/* Message from the most recent failing call on this thread ("" if none). */
const char* grr_last_error(void);
void grr_free(char* s);

/* ---- group construction -------------------------------------------------- */

/* Built-in family spec, e.g. "q8", "dihedral:8", "free:2", "grigorchuk". */
grr_status grr_group_open(const char* spec, grr_group** out);
/* {"table": [[...]], "names": [...], "gens": [...]} (names/gens optional). */
grr_status grr_group_from_table_json(const char* json_text, grr_group** out);
/* One permutation per line, 1-based points: images "2 1 3" or cycles
 * "(1 2)"; "e" is the identity. */
grr_status grr_group_from_permutations(const char* text, grr_group** out);
void grr_group_close(grr_group* g);

/* *is_finite = 0 and *order = 0 for infinite groups. */
grr_status grr_group_order(const grr_group* g, uint64_t* order, int* is_finite);

/* ---- connection sets ------------------------------------------------------ */

/* Symmetrized closure of the declared family generators. */
grr_status grr_genset_default(const grr_group* g, grr_genset** out);
/* One canonical element string per line; '#' comments and blank lines ok. */
grr_status grr_genset_parse(const grr_group* g, const char* text, grr_genset** out);
void grr_genset_close(grr_genset* s);

size_t grr_genset_size(const grr_genset* s);
/* Newline-joined canonical element strings (round-trips via parse). */
grr_status grr_genset_print(const grr_genset* s, char** out);

/* ---- operations (JSON results) -------------------------------------------- */

/* kind: "grr" | "drr" | "orr". */
grr_status grr_classify(const grr_group* g, const char* kind, char** json_out);

/* Triangle census of the set, as {"census": [{"s": ..., "delta": ...}, ...]}. */
grr_status grr_census(const grr_genset* s, char** json_out);

/* Full pipeline: base-set expansion + distinguishing extension.
 * trace_json_out receives the step-by-step trace; set_text_out the final
 * connection set (one element per line, ready for grr_genset_parse).
 * On GRR_ERR_SEARCH both outputs still carry the partial trace/set; on any
 * other failure they are left NULL. budget 0 means the library default. */
grr_status grr_construct(const grr_genset* s0, uint64_t budget, int force,
                         char** trace_json_out, char** set_text_out);

/* mode: "grr" | "drr" | "orr" | "rigidity". */
grr_status grr_verify(const grr_genset* s, const char* mode, char** json_out);

/* quantity: "commute" | "square" | "coset" | "involution" | "cover".
 * lengths: comma-separated walk lengths, e.g. "50,100,200". */
grr_status grr_probe(const grr_group* g, const grr_genset* s /* NULL = default */,
                     const char* quantity, const char* lengths, uint64_t samples,
                     uint64_t seed, int radius /* scope for "cover"; <0 = whole */,
                     char** json_out);

/* format: "dot" | "json"; directed != 0 builds the digraph;
 * radius < 0 = whole group (finite only). */
grr_status grr_export_graph(const grr_genset* s, int directed, int radius,
                            const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GRR_H */
