/* flopkit - combinatorics of one- and two-parameter flop wall structures.
 *
 * Every function returns a status code (FLOPKIT_OK on success) and writes its
 * result through out-parameters.  Strings returned through `char **` are
 * allocated by the library and must be released with flopkit_string_free().
 * On failure the out-parameters are left untouched and a description of the
 * error is available from flopkit_last_error() until the next call on the
 * same thread.
 */
#ifndef FLOPKIT_H
#define FLOPKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#define FLOPKIT_OK 0
#define FLOPKIT_ERR_USAGE 2    /* bad arguments: null pointers, malformed input */
#define FLOPKIT_ERR_DOMAIN 3   /* a precondition of the operation was violated */
#define FLOPKIT_ERR_INTERNAL 4 /* an internal consistency guard tripped */

#if defined(_WIN32)
#define FLOPKIT_API __declspec(dllexport)
#else
#define FLOPKIT_API __attribute__((visibility("default")))
#endif

/* Library version as "major.minor.patch"; static storage, do not free. */
FLOPKIT_API const char *flopkit_version(void);

/* Description of the most recent failure on this thread; static storage. */
FLOPKIT_API const char *flopkit_last_error(void);

/* Releases any string the library returned through a `char **`. */
FLOPKIT_API void flopkit_string_free(char *s);

/* ---- Dynkin diagrams ------------------------------------------------- */

typedef struct flopkit_diagram flopkit_diagram;

/* Creates a diagram from a name like "A7", "D12" or "E6". */
FLOPKIT_API int flopkit_diagram_create(const char *name, flopkit_diagram **out);
FLOPKIT_API int flopkit_diagram_create_typed(char type, int rank, flopkit_diagram **out);
FLOPKIT_API void flopkit_diagram_destroy(flopkit_diagram *d);

FLOPKIT_API int flopkit_diagram_rank(const flopkit_diagram *d, int *rank_out);
FLOPKIT_API int flopkit_diagram_type(const flopkit_diagram *d, char *type_out);

/* Coefficients of the highest root; labels_out must hold rank ints. */
FLOPKIT_API int flopkit_highest_root_labels(const flopkit_diagram *d, int *labels_out);

/* Image of each vertex under the diagram involution (1-based); rank ints. */
FLOPKIT_API int flopkit_dynkin_involution(const flopkit_diagram *d, int *image_out);

FLOPKIT_API int flopkit_positive_root_count(const flopkit_diagram *d, long long *count_out);

/* ---- One-parameter wall structure ------------------------------------ */

/* Labels of the first `count` walls crossed along the ray of `vertex`. */
FLOPKIT_API int flopkit_wall_labels(const flopkit_diagram *d, int vertex, int count,
                                    int *labels_out);

/* Sphere summary {N, punctures, equatorLabels, poles} as JSON. */
FLOPKIT_API int flopkit_equator_json(const flopkit_diagram *d, int vertex, char **json_out);

/* Same, for the standard ambient diagram of a given curve length 1..6. */
FLOPKIT_API int flopkit_equator_for_length_json(int ell, char **json_out);

/* ---- Wall arrangements ------------------------------------------------ */

/* Arrangement of the chosen vertices (one or two) clipped to the half-open
 * window given componentwise as rational strings, e.g. lo = ["0","-1/2"].
 * Result is {dimension, walls, window, lattice} as JSON. */
FLOPKIT_API int flopkit_arrangement_json(const flopkit_diagram *d, const int *vertices,
                                         int vertex_count, const char *const *window_lo,
                                         const char *const *window_hi, char **json_out);

/* Chambers of the unit fundamental cell cut by the same wall families. */
FLOPKIT_API int flopkit_chambers_json(const flopkit_diagram *d, const int *vertices,
                                      int vertex_count, char **json_out);

/* Breadth-first graph of chambers reachable by at most max_depth crossings. */
FLOPKIT_API int flopkit_chamber_graph_json(const flopkit_diagram *d, const int *vertices,
                                           int vertex_count, int max_depth, char **json_out);

/* ---- Simples helix ----------------------------------------------------- */

/* Number of simples per unit twist for a length-ell curve. */
FLOPKIT_API int flopkit_helix_period(int ell, int *count_out);

/* Helix entry S_i as a JSON symbol {kind, a?, twist, shift}. */
FLOPKIT_API int flopkit_helix_entry_json(int ell, long long index, char **json_out);

/* Entries S_from .. S_to inclusive as a JSON array. */
FLOPKIT_API int flopkit_helix_range_json(int ell, long long from, long long to,
                                         char **json_out);

/* The t-th heart: simples, progenerator tokens, deformation algebra token. */
FLOPKIT_API int flopkit_heart_json(int ell, long long t, char **json_out);

/* dim Ext^1 between the 2- and 3-thickened structure sheaves (ell in 3..6). */
FLOPKIT_API int flopkit_ext1_dimension(int ell, int *dim_out);

/* Derived dual of a JSON symbol; defined for Z, Zomega, OC(2), omegaC(2). */
FLOPKIT_API int flopkit_symbol_dual_json(const char *symbol_json, char **json_out);

/* ---- Fundamental group of the punctured sphere ------------------------- */

/* Presentation {N, generators, relation} as JSON; hole_count = N >= 1. */
FLOPKIT_API int flopkit_pi1_presentation_json(int hole_count, char **json_out);

/* Normal form of a word (tokens: a, c, b0.., optionally ^-1), c eliminated.
 * The empty word comes back as an empty string. */
FLOPKIT_API int flopkit_pi1_normal_form(int hole_count, const char *word, char **text_out);

FLOPKIT_API int flopkit_pi1_words_equal(int hole_count, const char *word1,
                                        const char *word2, int *equal_out);

/* Monodromy action of a loop word for a length-ell curve, as a composition
 * of tensor / twist / flop operations; identity prints as "id". */
FLOPKIT_API int flopkit_pi1_monodromy(int ell, const char *word, char **text_out);

/* ---- Curve-counting bounds --------------------------------------------- */

FLOPKIT_API int flopkit_gv_row_json(int ell, char **json_out);
FLOPKIT_API int flopkit_gv_table_csv(char **csv_out);
FLOPKIT_API int flopkit_gv_realized_json(int ell, char **json_out);
FLOPKIT_API int flopkit_gv_deformation_json(int ell, int a, char **json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FLOPKIT_H */
