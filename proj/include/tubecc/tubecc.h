/* C interface to the tubecc library.
 *
 * Modules are passed as expressions: "0" or "E(i,n)" joined by "+".
 * Every function returns a tubecc_status; on failure the context keeps a
 * message retrievable with tubecc_last_error. Strings returned through
 * out-parameters are owned by the caller and released with tubecc_string_free.
 */
#ifndef TUBECC_H
#define TUBECC_H

#include <stddef.h>
#include <stdint.h>

#if defined(TUBECC_BUILDING_LIBRARY)
#define TUBECC_API __attribute__((visibility("default")))
#else
#define TUBECC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tubecc_status {
    TUBECC_OK = 0,
    TUBECC_VERIFY_FAILED = 1,
    TUBECC_INVALID_ARGUMENT = 2,
    TUBECC_PARSE_ERROR = 3,
    TUBECC_PRECONDITION = 4,
    TUBECC_DECOMPOSITION_FAILED = 5,
    TUBECC_INTERNAL = 6
} tubecc_status;

typedef enum tubecc_format { TUBECC_FORMAT_TEXT = 0, TUBECC_FORMAT_JSON = 1 } tubecc_format;

typedef struct tubecc_context tubecc_context;
typedef struct tubecc_poly tubecc_poly;

TUBECC_API const char* tubecc_status_string(tubecc_status status);
TUBECC_API const char* tubecc_version(void);

/* A context fixes the rank of the cyclic quiver. */
TUBECC_API tubecc_status tubecc_context_create(int rank, tubecc_context** out);
TUBECC_API void tubecc_context_destroy(tubecc_context* ctx);
TUBECC_API int tubecc_context_rank(const tubecc_context* ctx);
/* Rewrite steps for decompositions (default 10000). */
TUBECC_API tubecc_status tubecc_set_fuel(tubecc_context* ctx, size_t fuel);
/* Message of the most recent failure on this context, "" if none. */
TUBECC_API const char* tubecc_last_error(const tubecc_context* ctx);

TUBECC_API void tubecc_string_free(char* s);

/* Character of a module as a Laurent polynomial handle. */
TUBECC_API tubecc_status tubecc_char(tubecc_context* ctx, const char* module, tubecc_poly** out);
TUBECC_API tubecc_status tubecc_poly_from_json(tubecc_context* ctx, const char* json, tubecc_poly** out);
TUBECC_API void tubecc_poly_destroy(tubecc_poly* p);
TUBECC_API tubecc_status tubecc_poly_to_string(const tubecc_poly* p, tubecc_format format, char** out);
/* Value at x_1 = ... = x_r = 1, as a decimal string. */
TUBECC_API tubecc_status tubecc_poly_eval_ones(const tubecc_poly* p, char** out);
TUBECC_API int tubecc_poly_equal(const tubecc_poly* a, const tubecc_poly* b);

/* Product expansion X_A X_B: cluster multiplication when it applies,
 * otherwise the inductive formula for indecomposables, otherwise X_{A+B}. */
TUBECC_API tubecc_status tubecc_mult(tubecc_context* ctx, const char* a, const char* b, tubecc_format format,
                                     char** out);
TUBECC_API tubecc_status tubecc_decompose(tubecc_context* ctx, const char* module, tubecc_format format, char** out);
/* Decomposes a Laurent polynomial (JSON) over rigid modules with dim <= bound. */
TUBECC_API tubecc_status tubecc_decompose_poly(tubecc_context* ctx, const tubecc_poly* target, const int* bound,
                                               size_t bound_len, tubecc_format format, char** out);
/* Expands the product of simple characters X_{E_w1} ... X_{E_wk}. */
TUBECC_API tubecc_status tubecc_expand_simple_product(tubecc_context* ctx, const int* word, size_t word_len,
                                                      tubecc_format format, char** out);

TUBECC_API tubecc_status tubecc_hom_dim(tubecc_context* ctx, const char* a, const char* b, size_t* out);
TUBECC_API tubecc_status tubecc_ext_dim(tubecc_context* ctx, const char* a, const char* b, size_t* out);
TUBECC_API tubecc_status tubecc_is_rigid(tubecc_context* ctx, const char* module, int* out);

/* *independent is 1 or 0; when 0, out receives the relation. */
TUBECC_API tubecc_status tubecc_independence(tubecc_context* ctx, const char* const* modules, size_t count,
                                             tubecc_format format, int* independent, char** out);

/* Lists rigid modules with dim <= bound. */
TUBECC_API tubecc_status tubecc_enumerate_rigid(tubecc_context* ctx, const int* bound, size_t bound_len,
                                                tubecc_format format, char** out);

/* Runs a verification suite ("characters", "ar", "cluster_mult", "inductive",
 * "basis" or "all"). Returns TUBECC_VERIFY_FAILED if any instance failed; the
 * report is written either way. The context rank is not used. */
typedef struct tubecc_verify_config {
    int max_rank;
    int max_length;
    uint64_t seed;
    size_t samples;
} tubecc_verify_config;

TUBECC_API void tubecc_verify_config_default(tubecc_verify_config* cfg);
TUBECC_API tubecc_status tubecc_verify(tubecc_context* ctx, const char* suite, const tubecc_verify_config* cfg,
                                       tubecc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TUBECC_H */
