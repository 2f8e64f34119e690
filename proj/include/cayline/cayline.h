/*
 * cayline C API.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return a cayline_status; on failure a
 * one-line diagnostic is available from cayline_last_error() on the calling
 * thread. Strings returned through char** out-parameters are heap allocated
 * and must be released with cayline_string_free().
 *
 * Element indices are 0-based positions in the group's element list (index 0
 * is the identity). Cycle notation uses 1-based points.
 */
#ifndef CAYLINE_H
#define CAYLINE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CAYLINE_BUILDING_LIBRARY)
#    define CAYLINE_API __declspec(dllexport)
#  else
#    define CAYLINE_API __declspec(dllimport)
#  endif
#else
#  define CAYLINE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cayline_status {
  CAYLINE_OK = 0,
  CAYLINE_ERR_INVALID_ARGUMENT = 1,
  CAYLINE_ERR_PARSE = 2,
  CAYLINE_ERR_DEGREE_MISMATCH = 3,
  CAYLINE_ERR_CAP_EXCEEDED = 4,
  CAYLINE_ERR_NOT_REGULAR = 5,
  CAYLINE_ERR_NOT_LINE_DIGRAPH = 6,
  CAYLINE_ERR_MULTI_ARC = 7,
  CAYLINE_ERR_NOT_GENERATING = 8,
  CAYLINE_ERR_IO = 9,
  CAYLINE_ERR_INTERNAL = 10
} cayline_status;

typedef enum cayline_iso_status {
  CAYLINE_ISO_ISOMORPHIC = 0,
  CAYLINE_ISO_NOT_ISOMORPHIC = 1,
  CAYLINE_ISO_UNDECIDED = 2
} cayline_iso_status;

typedef struct cayline_group cayline_group;
typedef struct cayline_digraph cayline_digraph;
typedef struct cayline_matrix cayline_matrix;

typedef struct cayline_search_options {
  size_t max_iters;
  size_t restarts;
  double tol;
  uint64_t seed;
} cayline_search_options;

CAYLINE_API const char *cayline_version(void);
CAYLINE_API const char *cayline_last_error(void);
CAYLINE_API const char *cayline_status_name(cayline_status status);
CAYLINE_API void cayline_string_free(char *s);

/* Default search options: 5000 iterations, 20 restarts, tol 1e-8, seed 1. */
CAYLINE_API cayline_search_options cayline_search_defaults(void);

/* ---- groups ------------------------------------------------------------ */

/* Z:<n> | D:<n> | S:<n> | A:<n> | Z2xZ2 | perm:<degree>:<cycles>;<cycles>;... */
CAYLINE_API cayline_status cayline_group_from_spec(const char *spec, cayline_group **out);
CAYLINE_API void cayline_group_free(cayline_group *group);
CAYLINE_API size_t cayline_group_order(const cayline_group *group);
CAYLINE_API size_t cayline_group_degree(const cayline_group *group);
CAYLINE_API int cayline_group_is_abelian(const cayline_group *group);

/* Resolve a generator alias, element name, or cycle-notation string. */
CAYLINE_API cayline_status cayline_group_resolve(const cayline_group *group, const char *token,
                                                 size_t *index);
/* Canonical generators. Writes up to cap indices; *count gets the total. */
CAYLINE_API cayline_status cayline_group_generators(const cayline_group *group, size_t *indices,
                                                    size_t cap, size_t *count);
CAYLINE_API cayline_status cayline_group_element_name(const cayline_group *group, size_t index,
                                                      char **out);
CAYLINE_API cayline_status cayline_group_element_order(const cayline_group *group, size_t index,
                                                       size_t *order);
CAYLINE_API cayline_status cayline_group_generates(const cayline_group *group, const size_t *set,
                                                   size_t count, int *result);
CAYLINE_API cayline_status cayline_group_to_json(const cayline_group *group, char **out);

/* ---- digraphs ---------------------------------------------------------- */

/* *generating (optional) receives 0 when the set does not generate the group. */
CAYLINE_API cayline_status cayline_cayley_digraph(const cayline_group *group, const size_t *set,
                                                  size_t count, cayline_digraph **out,
                                                  int *generating);
CAYLINE_API cayline_status cayline_pnk_digraph(size_t n, size_t k, cayline_digraph **out);
CAYLINE_API cayline_status cayline_line_digraph(const cayline_digraph *d, cayline_digraph **out);
CAYLINE_API cayline_status cayline_digraph_from_json(const char *text, cayline_digraph **out);
CAYLINE_API cayline_status cayline_digraph_to_json(const cayline_digraph *d, char **out);
CAYLINE_API cayline_status cayline_digraph_to_dot(const cayline_digraph *d, char **out);
CAYLINE_API void cayline_digraph_free(cayline_digraph *d);
CAYLINE_API size_t cayline_digraph_vertex_count(const cayline_digraph *d);
CAYLINE_API size_t cayline_digraph_arc_count(const cayline_digraph *d);
CAYLINE_API unsigned cayline_digraph_multiplicity(const cayline_digraph *d, size_t u, size_t v);
/* *regular = 1 and *degree set when every in/out degree is equal. */
CAYLINE_API cayline_status cayline_digraph_is_regular(const cayline_digraph *d, int *regular,
                                                      size_t *degree);
/* Multiplicity-matrix equality (labels ignored). */
CAYLINE_API int cayline_digraph_equal(const cayline_digraph *a, const cayline_digraph *b);
/* node_limit 0 selects the default of 10^7 backtracking nodes.
 * report (optional) receives {"status", "nodes", "mapping"?}. */
CAYLINE_API cayline_status cayline_isomorphism(const cayline_digraph *a, const cayline_digraph *b,
                                               uint64_t node_limit, cayline_iso_status *status,
                                               char **report);

/* ---- line recognition -------------------------------------------------- */

CAYLINE_API cayline_status cayline_richards_test(const cayline_digraph *d, int *pass,
                                                 char **verdict);
CAYLINE_API cayline_status cayline_block_decomposition(const cayline_digraph *d, char **blocks);

/* ---- matrices ---------------------------------------------------------- */

CAYLINE_API cayline_status cayline_matrix_from_json(const char *text, cayline_matrix **out);
CAYLINE_API cayline_status cayline_matrix_to_json(const cayline_matrix *m, char **out);
CAYLINE_API cayline_status cayline_matrix_to_text(const cayline_matrix *m, char **out);
CAYLINE_API void cayline_matrix_free(cayline_matrix *m);
CAYLINE_API size_t cayline_matrix_dimension(const cayline_matrix *m);
CAYLINE_API cayline_status cayline_dft_matrix(size_t d, cayline_matrix **out);
CAYLINE_API cayline_status cayline_synthesize_unitary(const cayline_digraph *d,
                                                      cayline_matrix **out);
CAYLINE_API cayline_status cayline_unitarity_residual(const cayline_matrix *m, double *residual);
CAYLINE_API cayline_status cayline_is_unitary(const cayline_matrix *m, double tol, int *result);
CAYLINE_API cayline_status cayline_pattern_of(const cayline_matrix *m, double tol,
                                              cayline_digraph **out);
/* options may be NULL for defaults; matrix (optional) receives the unitary on success. */
CAYLINE_API cayline_status cayline_search_unitary(const cayline_digraph *pattern,
                                                  const cayline_search_options *options,
                                                  int *found, cayline_matrix **matrix,
                                                  char **report);

/* ---- constructions ----------------------------------------------------- */

/* all = 1 lists every witness under "witnesses" instead of the first. */
CAYLINE_API cayline_status cayline_mansilla_witness(const cayline_group *group, const size_t *set,
                                                    size_t count, int all, int *found,
                                                    char **report);
/* cayley_t (optional) receives Cay(G, T). */
CAYLINE_API cayline_status cayline_two_generator_lineization(const cayline_group *group, size_t s1,
                                                             size_t s2, char **report,
                                                             cayline_digraph **cayley_t);
CAYLINE_API cayline_status cayline_remcay_condition(const cayline_group *group, size_t s1,
                                                    size_t s2, int *result);
CAYLINE_API cayline_status cayline_example_suite(int *all_pass, char **report);

/* The 4x4 real orthogonal matrix whose pattern is Cay(Z2 x Z2, all three generators). */
CAYLINE_API cayline_status cayline_z2z2_matrix(cayline_matrix **out);

#ifdef __cplusplus
}
#endif

#endif
