/* C interface to the resolution library.
 *
 * Every function that can fail returns an mcres_status; MCRES_OK means the
 * out-parameters were filled. On failure, mcres_last_error() returns a
 * message for the calling thread, valid until its next library call.
 * Strings returned through char** are heap-allocated and must be released
 * with mcres_string_free(); handles with their matching *_free().
 *
 * Text formats (1-based variables and vertices, `#` comments allowed):
 *
 *   ideal        vars 3        tree 3 1      hypergraph 3
 *                x1 x2         2 1           1 2
 *                x2 x3         3 1           2 3
 */

#ifndef MCRES_H
#define MCRES_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcres_status {
  MCRES_OK = 0,
  MCRES_ERR_PARSE = 1,
  MCRES_ERR_INPUT = 2,
  MCRES_ERR_DOMAIN = 3,
  MCRES_ERR_RESOURCE = 4,
  MCRES_ERR_CERTIFICATION = 5,
  MCRES_ERR_INTERNAL = 6
} mcres_status;

typedef enum mcres_format {
  MCRES_FORMAT_DIAGRAM = 0,
  MCRES_FORMAT_JSON = 1,
  MCRES_FORMAT_CSV = 2
} mcres_format;

typedef struct mcres_ideal mcres_ideal;
typedef struct mcres_tree mcres_tree;
typedef struct mcres_hypergraph mcres_hypergraph;
typedef struct mcres_betti mcres_betti;

typedef struct mcres_options {
  int field;                 /* prime characteristic, default 2 */
  int strict;                /* 1: certification failures are errors;
                                0: uncertified subideals fall back to the
                                homology oracle (default) */
  int generator_cap;         /* order search limit, default 22 */
  int facet_cap;             /* simplicial-tree check limit, default 15 */
  long long backtrack_budget;/* engine backtracking limit, default 1000 */
  int threads;               /* worker bound, default 1 */
  int subtables_engine;      /* 1: power-formula subtables via the engine;
                                0: via the oracle (default) */
} mcres_options;

void mcres_options_init(mcres_options* opts);

const char* mcres_version(void);
const char* mcres_last_error(void);
void mcres_string_free(char* s);

/* ---- monomial ideals ---- */

mcres_status mcres_ideal_parse(const char* text, mcres_ideal** out);
void mcres_ideal_free(mcres_ideal* ideal);
mcres_status mcres_ideal_render(const mcres_ideal* ideal, char** out);
mcres_status mcres_ideal_render_inline(const mcres_ideal* ideal, char** out);
mcres_status mcres_ideal_vars(const mcres_ideal* ideal, int* out);
mcres_status mcres_ideal_generators(const mcres_ideal* ideal, int* out);

/* Alexander dual of a squarefree ideal. */
mcres_status mcres_ideal_dual(const mcres_ideal* ideal, mcres_ideal** out);

/* ---- Betti tables ---- */

/* Iterated mapping cones with certified steps. fully_certified (optional)
 * reports whether any subideal needed the oracle. */
mcres_status mcres_betti_engine(const mcres_ideal* ideal,
                                const mcres_options* opts, mcres_betti** out,
                                int* fully_certified);

/* Independent simplicial-homology computation of the same table. */
mcres_status mcres_betti_oracle(const mcres_ideal* ideal,
                                const mcres_options* opts, mcres_betti** out);

/* Multigraded oracle table, rendered one entry per line. */
mcres_status mcres_oracle_multigraded_render(const mcres_ideal* ideal,
                                             const mcres_options* opts,
                                             char** out);

/* Searches for a decreasing-type generator order. found is 0 or 1;
 * rendered holds the order with per-step witnesses when found, else "". */
mcres_status mcres_order_find(const mcres_ideal* ideal,
                              const mcres_options* opts, int* found,
                              char** rendered);

/* Runs engine and oracle and compares. equal is 0 or 1; diff lists the
 * differing entries when unequal, else "". */
mcres_status mcres_verify(const mcres_ideal* ideal, const mcres_options* opts,
                          int* equal, char** diff);

void mcres_betti_free(mcres_betti* table);
mcres_status mcres_betti_render(const mcres_betti* table, mcres_format format,
                                char** out);
mcres_status mcres_betti_regularity(const mcres_betti* table, int* out);
mcres_status mcres_betti_proj_dim(const mcres_betti* table, int* out);
mcres_status mcres_betti_depth(const mcres_betti* table, int* out);
mcres_status mcres_betti_is_level(const mcres_betti* table, int* out);
mcres_status mcres_betti_entry_count(const mcres_betti* table, int* out);
mcres_status mcres_betti_entry(const mcres_betti* table, int index, int* i,
                               int* j, long long* multiplicity);

/* ---- rooted trees ---- */

mcres_status mcres_tree_parse(const char* text, mcres_tree** out);
void mcres_tree_free(mcres_tree* tree);
mcres_status mcres_tree_render(const mcres_tree* tree, char** out);

/* The maximal-path ideal: one squarefree generator per root-to-leaf path. */
mcres_status mcres_tree_ideal(const mcres_tree* tree, mcres_ideal** out);

/* Closed-form invariants of the path-ideal quotient. Any out-pointer may
 * be NULL. */
mcres_status mcres_tree_invariants(const mcres_tree* tree, int* leaves,
                                   int* dim, int* proj_dim, int* depth,
                                   int* reg, int* cohen_macaulay);

/* A certified decreasing-type order of the path generators. */
mcres_status mcres_tree_order(const mcres_tree* tree, char** rendered);

/* Whether the complex of path vertex sets is a simplicial tree. */
mcres_status mcres_tree_simplicial_check(const mcres_tree* tree,
                                         const mcres_options* opts,
                                         int* is_tree);

/* Regularity and projective dimension of the Alexander dual of the path
 * ideal, computed through the oracle. */
mcres_status mcres_tree_dual_invariants(const mcres_tree* tree,
                                        const mcres_options* opts, int* reg,
                                        int* proj_dim);

/* ---- hypergraphs ---- */

mcres_status mcres_hypergraph_parse(const char* text, mcres_hypergraph** out);
void mcres_hypergraph_free(mcres_hypergraph* h);
mcres_status mcres_hypergraph_render(const mcres_hypergraph* h, char** out);
mcres_status mcres_hypergraph_vertices(const mcres_hypergraph* h, int* out);
mcres_status mcres_hypergraph_edge_ideal(const mcres_hypergraph* h,
                                         mcres_ideal** out);

/* Betti table of the edge ideal plus x_v^e for each listed variable
 * (1-based, exponents >= 2, count may be 0). */
mcres_status mcres_hypergraph_betti_with_powers(const mcres_hypergraph* h,
                                                const int* variables,
                                                const int* exponents,
                                                int count,
                                                const mcres_options* opts,
                                                mcres_betti** out);

mcres_status mcres_hypergraph_alpha(const mcres_hypergraph* h, int* out);

/* Maximal independent sets, one per line as 1-based vertex lists. */
mcres_status mcres_hypergraph_mis_render(const mcres_hypergraph* h,
                                         char** out);

/* The independence complex, facets one per line. */
mcres_status mcres_hypergraph_complex_render(const mcres_hypergraph* h,
                                             char** out);

/* Both sides of the complete-multipartite test: the weighted last-Betti
 * degree sum hitting the vertex count, and the complement decomposing into
 * disjoint cliques; parts receives the last total Betti number. */
mcres_status mcres_hypergraph_multipartite_check(const mcres_hypergraph* h,
                                                 int* degree_sum_matches,
                                                 int* complement_is_cliques,
                                                 long long* parts);

#ifdef __cplusplus
}
#endif

#endif /* MCRES_H */
