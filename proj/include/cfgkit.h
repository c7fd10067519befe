/* C interface to the cfgkit grammar library.
 *
 * Grammars are opaque handles created by cfgkit_parse and released with
 * cfgkit_grammar_free. Every function reports a cfgkit_status; results and
 * diagnostic messages come back through out-parameters. All returned strings
 * are heap copies owned by the caller; release them with cfgkit_string_free.
 * Handles obtained from this interface always hold structurally valid
 * grammars. All functions are thread-safe on distinct handles.
 */
#ifndef CFGKIT_H
#define CFGKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cfgkit_grammar cfgkit_grammar;

typedef enum cfgkit_status {
  CFGKIT_OK = 0,
  CFGKIT_ERR_SYNTAX = 1,       /* malformed grammar text */
  CFGKIT_ERR_VALIDATION = 2,   /* grammar breaks an invariant */
  CFGKIT_ERR_PRECONDITION = 3, /* empty language, not in CNF, ... */
  CFGKIT_ERR_LIMIT = 4,        /* resource cap hit */
  CFGKIT_ERR_ARGUMENT = 5,     /* null or out-of-domain argument */
  CFGKIT_ERR_INTERNAL = 6
} cfgkit_status;

void cfgkit_string_free(char* s);
void cfgkit_grammar_free(cfgkit_grammar* g);

/* Parses grammar text. On failure *out_grammar stays null and *out_error
 * (when non-null) receives a description, with line/column for syntax
 * errors. */
cfgkit_status cfgkit_parse(const char* text, cfgkit_grammar** out_grammar,
                           char** out_error);

/* Validates text without producing a handle. Invariant violations are data
 * here: the status is CFGKIT_OK, *out_ok is 0 and *out_report lists them one
 * per line. Only syntax errors fail the call. */
cfgkit_status cfgkit_validate_text(const char* text, int* out_ok,
                                   char** out_report);

/* Canonical text form of the grammar. */
cfgkit_status cfgkit_render(const cfgkit_grammar* g, char** out_text);

/* Language-preserving constructions. */
cfgkit_status cfgkit_union(const cfgkit_grammar* g1, const cfgkit_grammar* g2,
                           cfgkit_grammar** out_grammar, char** out_error);
cfgkit_status cfgkit_concat(const cfgkit_grammar* g1, const cfgkit_grammar* g2,
                            cfgkit_grammar** out_grammar, char** out_error);
cfgkit_status cfgkit_star(const cfgkit_grammar* g,
                          cfgkit_grammar** out_grammar, char** out_error);

/* pass: "empty", "unit", "useless", "inaccessible", or "all". */
cfgkit_status cfgkit_simplify(const cfgkit_grammar* g, const char* pass,
                              cfgkit_grammar** out_grammar, char** out_error);

cfgkit_status cfgkit_to_cnf(const cfgkit_grammar* g,
                            cfgkit_grammar** out_grammar, char** out_error);

/* Eight lines of "name: true|false": the six simplification predicates plus
 * is_cnf and is_cnf_with_empty_rule. */
cfgkit_status cfgkit_check(const cfgkit_grammar* g, char** out_report);

/* All sentences of length <= max_len, one per line, shortest first and
 * lexicographic within a length; the empty sentence prints as %empty. */
cfgkit_status cfgkit_enumerate(const cfgkit_grammar* g, unsigned max_len,
                               char** out_lines, char** out_error);

/* Membership of the token sequence (count may be 0 for the empty sentence).
 * Converts to CNF internally when needed; a start symbol that derives no
 * sentence simply answers no. */
cfgkit_status cfgkit_member(const cfgkit_grammar* g,
                            const char* const* tokens, size_t count,
                            int* out_member, char** out_error);

/* Compares bounded languages. When they differ, *out_equal is 0, *out_side
 * tells which grammar produced the smallest separating sentence (1 or 2) and
 * *out_counterexample (when non-null) receives that sentence. */
cfgkit_status cfgkit_equiv(const cfgkit_grammar* g1, const cfgkit_grammar* g2,
                           unsigned max_len, int* out_equal, int* out_side,
                           char** out_counterexample, char** out_error);

cfgkit_status cfgkit_non_empty(const cfgkit_grammar* g, int* out);
cfgkit_status cfgkit_generates_empty(const cfgkit_grammar* g, int* out);

#ifdef __cplusplus
}
#endif

#endif /* CFGKIT_H */
