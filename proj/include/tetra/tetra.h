#ifndef TETRA_TETRA_H
#define TETRA_TETRA_H

/* C interface to the tetra library. Strings returned through char** are
   owned by the caller and released with tetra_string_free. All JSON uses
   exact "p/q" strings for rationals. */

#include <stdint.h>

#if defined(_WIN32)
#define TETRA_API __declspec(dllexport)
#else
#define TETRA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tetra_status {
  TETRA_OK = 0,
  TETRA_E_INVALID_ARGUMENT = 1, /* malformed input, unknown name */
  TETRA_E_DOMAIN = 2,           /* mathematical precondition violated */
  TETRA_E_PRECISION = 3,        /* 3-adic precision exhausted; retry with more digits */
  TETRA_E_NOT_FOUND = 4,
  TETRA_E_INTERNAL = 5,
  TETRA_E_CHECK_FAILED = 6 /* a verification suite ran and reported failures */
} tetra_status;

typedef struct tetra_context tetra_context;
typedef struct tetra_game tetra_game;

TETRA_API const char* tetra_version(void);
TETRA_API const char* tetra_status_name(tetra_status status);
/* Message of the last failing call on this thread; never NULL. */
TETRA_API const char* tetra_last_error(void);
TETRA_API void tetra_string_free(char* s);

/* params: "l0,l1,l2,l3,l4" (NULL for 1,1,1,1,1/16); precision: 3-adic
   digits, 0 for the default of 48. */
TETRA_API tetra_status tetra_context_create(const char* params, int precision, tetra_context** out);
TETRA_API void tetra_context_destroy(tetra_context* ctx);
TETRA_API int tetra_context_precision(const tetra_context* ctx);

/* suite: all, lattice, coxeter, group, quaternion, tree, game.
   options_json may be NULL or {"radius": N}. The report is written even when
   the suite fails, in which case TETRA_E_CHECK_FAILED is returned. */
TETRA_API tetra_status tetra_verify(const tetra_context* ctx, const char* suite, const char* options_json,
                                    char** report_json);

TETRA_API tetra_status tetra_cusps(char** json);

/* vector_json: array of 10 rationals in the U-basis. details_json (may be
   NULL) receives the chamber representative and the reducing word. */
TETRA_API tetra_status tetra_nef(const tetra_context* ctx, const char* vector_json, int* is_nef, char** details_json);

TETRA_API tetra_status tetra_tree_ball(const tetra_context* ctx, int radius, char** json);

/* op: "mul" (a*b), "reduce" (a), "inverse" (a), "matrix" (a). Words are
   either text ("x0 x1 s=(1023)") or JSON {"free":[..],"perm":[..]}. */
TETRA_API tetra_status tetra_word(const tetra_context* ctx, const char* op, const char* a, const char* b, char** json);

TETRA_API tetra_status tetra_lattice_inner_product(const char* v_json, const char* w_json, char** result);

TETRA_API tetra_status tetra_game_new(int scramble, uint64_t seed, int allow_symmetry, tetra_game** out);
TETRA_API tetra_status tetra_game_from_json(const char* json, tetra_game** out);
TETRA_API void tetra_game_destroy(tetra_game* game);
TETRA_API tetra_status tetra_game_to_json(const tetra_game* game, char** json);
/* token: "F0".."F3" or "S=(abcd)". */
TETRA_API tetra_status tetra_game_move(tetra_game* game, const char* token);
/* JSON array of move tokens returning the pose to the reference. */
TETRA_API tetra_status tetra_game_solve(const tetra_game* game, char** moves_json);
/* Tree vertex of the current word, {"a","b","c"}. */
TETRA_API tetra_status tetra_game_vertex(const tetra_context* ctx, const tetra_game* game, char** json);

#ifdef __cplusplus
}
#endif

#endif
