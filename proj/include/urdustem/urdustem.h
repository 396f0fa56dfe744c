/*
 * urdustem: rule-driven affix-stripping stemmer for Urdu.
 *
 * C interface over opaque handles. Every fallible call returns a us_status;
 * on failure the thread-local error slot describes what went wrong
 * (us_last_error_message and friends) and no output handle is written.
 *
 * Strings are UTF-8 and passed as (pointer, length). Views returned by
 * accessors borrow from the handle they came from and stay valid until that
 * handle is freed. Strings returned as us_string are owned by the caller.
 */
#ifndef URDUSTEM_URDUSTEM_H
#define URDUSTEM_URDUSTEM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(URDUSTEM_BUILDING)
#define URDUSTEM_API __declspec(dllexport)
#else
#define URDUSTEM_API __declspec(dllimport)
#endif
#else
#define URDUSTEM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum us_status {
  US_OK = 0,
  US_ERR_INVALID_ARGUMENT = 1,
  US_ERR_ENCODING = 2,
  US_ERR_NOT_NORMALIZED = 3,
  US_ERR_RULE_SYNTAX = 4,
  US_ERR_DUPLICATE_RULE = 5,
  US_ERR_CONFIG = 6,
  US_ERR_GOLD_SYNTAX = 7,
  US_ERR_ALIGNMENT = 8,
  US_ERR_EMPTY_INPUT = 9,
  US_ERR_PARADIGM = 10,
  US_ERR_LEXICON_SYNTAX = 11,
  US_ERR_INTERNAL = 99
} us_status;

URDUSTEM_API const char* us_status_name(us_status status);

/* Details of the last failed call on this thread. Line numbers are 1-based;
 * the *_line / index getters return 0 when the value is not set. */
URDUSTEM_API const char* us_last_error_message(void);
URDUSTEM_API size_t us_last_error_line(void);
URDUSTEM_API size_t us_last_error_other_line(void);
/* Returns 1 and writes the 0-based batch/alignment index when one is set. */
URDUSTEM_API int us_last_error_index(size_t* index);

typedef struct us_str_view {
  const char* data;
  size_t size;
} us_str_view;

/* ---- owned strings ---------------------------------------------------- */

typedef struct us_string us_string;

URDUSTEM_API us_str_view us_string_view(const us_string* s);
URDUSTEM_API void us_string_free(us_string* s);

/* ---- text ------------------------------------------------------------- */

URDUSTEM_API us_status us_normalize(const char* text, size_t len, int strip_diacritics, us_string** out);
URDUSTEM_API us_status us_grapheme_count(const char* text, size_t len, size_t* out);

typedef enum us_token_kind { US_TOKEN_WORD = 0, US_TOKEN_PUNCT = 1, US_TOKEN_NUMBER = 2, US_TOKEN_OTHER = 3 } us_token_kind;

typedef struct us_token {
  us_token_kind kind;
  size_t start; /* byte offset into the tokenized text */
  size_t end;
} us_token;

typedef struct us_token_list us_token_list;

URDUSTEM_API us_status us_tokenize(const char* text, size_t len, us_token_list** out);
URDUSTEM_API size_t us_token_list_size(const us_token_list* list);
URDUSTEM_API us_status us_token_list_at(const us_token_list* list, size_t i, us_token* out);
URDUSTEM_API void us_token_list_free(us_token_list* list);
URDUSTEM_API const char* us_token_kind_name(us_token_kind kind);

/* ---- rule sets -------------------------------------------------------- */

typedef enum us_affix_kind { US_PREFIX = 0, US_SUFFIX = 1 } us_affix_kind;

typedef struct us_rule_view {
  us_affix_kind kind;
  us_str_view pattern;
  us_str_view replacement;
  uint32_t min_stem;     /* effective value */
  int min_stem_explicit; /* 0 when inherited from the rule set default */
} us_rule_view;

typedef struct us_rule_set us_rule_set;

URDUSTEM_API us_status us_rule_set_parse(const char* text, size_t len, us_rule_set** out);

/* Built-in rule files. */
typedef enum us_builtin_rules {
  US_RULES_DEFAULT = 0,
  US_RULES_COMPANION_ALIF = 1,
  US_RULES_COMPANION_HE = 2
} us_builtin_rules;

URDUSTEM_API us_status us_rule_set_builtin(us_builtin_rules which, us_rule_set** out);
URDUSTEM_API us_str_view us_builtin_rules_text(us_builtin_rules which);

URDUSTEM_API void us_rule_set_free(us_rule_set* rs);
URDUSTEM_API size_t us_rule_set_size(const us_rule_set* rs);
URDUSTEM_API size_t us_rule_set_count(const us_rule_set* rs, us_affix_kind kind);
URDUSTEM_API size_t us_rule_set_exception_count(const us_rule_set* rs);
URDUSTEM_API uint32_t us_rule_set_default_min_stem(const us_rule_set* rs);
/* Rules in applied (longest-first) order. */
URDUSTEM_API us_status us_rule_set_rule(const us_rule_set* rs, size_t i, us_rule_view* out);
URDUSTEM_API us_status us_rule_set_serialize(const us_rule_set* rs, us_string** out);

/* ---- stemming --------------------------------------------------------- */

typedef enum us_pass_order { US_SUFFIX_FIRST = 0, US_PREFIX_FIRST = 1 } us_pass_order;

typedef struct us_stem_config {
  uint32_t max_suffix_passes; /* at most 4 */
  uint32_t max_prefix_passes; /* at most 4 */
  us_pass_order order;
} us_stem_config;

URDUSTEM_API us_stem_config us_stem_config_default(void);

typedef struct us_stem_result us_stem_result;

/* cfg may be NULL for the default configuration. word must be NFC. */
URDUSTEM_API us_status us_stem_word(const us_rule_set* rs, const char* word, size_t len, const us_stem_config* cfg,
                                    us_stem_result** out);
URDUSTEM_API void us_stem_result_free(us_stem_result* r);
URDUSTEM_API us_str_view us_stem_result_word(const us_stem_result* r);
URDUSTEM_API us_str_view us_stem_result_stem(const us_stem_result* r);
/* Return 1 and fill *out when the affix is present, 0 otherwise. */
URDUSTEM_API int us_stem_result_prefix(const us_stem_result* r, us_str_view* out);
URDUSTEM_API int us_stem_result_suffix(const us_stem_result* r, us_str_view* out);
URDUSTEM_API int us_stem_result_exception_hit(const us_stem_result* r);
/* Applied-rule trace: indices into the rule set, in firing order. */
URDUSTEM_API size_t us_stem_result_applied_count(const us_stem_result* r);
URDUSTEM_API size_t us_stem_result_applied(const us_stem_result* r, size_t i);

typedef struct us_stem_batch us_stem_batch;

/* On failure the error index names the first offending word. */
URDUSTEM_API us_status us_stem_batch_run(const us_rule_set* rs, const us_str_view* words, size_t n,
                                         const us_stem_config* cfg, us_stem_batch** out);
/* Reads `word<TAB>prefix<TAB>stem<TAB>suffix` lines (stemmer output). */
URDUSTEM_API us_status us_stem_batch_parse_tsv(const char* text, size_t len, us_stem_batch** out);
URDUSTEM_API us_status us_stem_batch_format_tsv(const us_stem_batch* b, us_string** out);
URDUSTEM_API size_t us_stem_batch_size(const us_stem_batch* b);
URDUSTEM_API const us_stem_result* us_stem_batch_at(const us_stem_batch* b, size_t i);
URDUSTEM_API void us_stem_batch_free(us_stem_batch* b);

/* ---- gold corpora and evaluation -------------------------------------- */

typedef struct us_gold_view {
  us_str_view word;
  us_str_view expected_stem;
  int has_prefix;
  us_str_view expected_prefix;
  int has_suffix;
  us_str_view expected_suffix;
  int pattern_generalized;
} us_gold_view;

typedef struct us_gold_corpus us_gold_corpus;

URDUSTEM_API us_status us_gold_corpus_parse(const char* text, size_t len, us_gold_corpus** out);
URDUSTEM_API us_status us_gold_corpus_serialize(const us_gold_corpus* g, us_string** out);
URDUSTEM_API size_t us_gold_corpus_size(const us_gold_corpus* g);
URDUSTEM_API us_status us_gold_corpus_entry(const us_gold_corpus* g, size_t i, us_gold_view* out);
URDUSTEM_API void us_gold_corpus_free(us_gold_corpus* g);

typedef enum us_error_class {
  US_CORRECT = 0,
  US_OVER_STEMMING = 1,
  US_UNDER_STEMMING = 2,
  US_OTHER_ERROR = 3
} us_error_class;

URDUSTEM_API const char* us_error_class_name(us_error_class c);

typedef enum us_match_policy { US_MATCH_STRICT = 0, US_MATCH_STEM_ONLY = 1 } us_match_policy;

URDUSTEM_API us_status us_classify_error(const us_stem_result* r, const us_gold_corpus* g, size_t gold_index,
                                         us_match_policy policy, us_error_class* out);

typedef struct us_eval_summary {
  uint64_t total_words;
  uint64_t correct;
  uint64_t wrong;
  uint64_t unique_correct;
  uint64_t pass_through;
  uint64_t over_count;
  uint64_t under_count;
  uint64_t other_count;
  uint64_t min_word_len;
  uint64_t max_word_len;
  uint64_t accuracy_num; /* accuracy percent = accuracy_num / accuracy_den */
  uint64_t accuracy_den;
} us_eval_summary;

typedef enum us_report_format { US_REPORT_TABLE = 0, US_REPORT_KEY_VALUE = 1 } us_report_format;

typedef struct us_eval_report us_eval_report;

URDUSTEM_API us_status us_evaluate(const us_stem_batch* results, const us_gold_corpus* gold, us_match_policy policy,
                                   us_eval_report** out);
URDUSTEM_API void us_eval_report_summary(const us_eval_report* r, us_eval_summary* out);
URDUSTEM_API us_status us_eval_report_class(const us_eval_report* r, size_t i, us_error_class* out);
URDUSTEM_API us_status us_eval_report_format(const us_eval_report* r, us_report_format fmt, us_string** out);
/* Accuracy percent rounded half up to `decimals` places. */
URDUSTEM_API us_status us_eval_report_accuracy_text(const us_eval_report* r, unsigned decimals, us_string** out);
URDUSTEM_API void us_eval_report_free(us_eval_report* r);

/* ---- morphology ------------------------------------------------------- */

typedef enum us_case { US_NOMINATIVE = 0, US_OBLIQUE = 1, US_VOCATIVE = 2 } us_case;
typedef enum us_number { US_SINGULAR = 0, US_PLURAL = 1 } us_number;
typedef enum us_gender { US_MASCULINE = 0, US_FEMININE = 1 } us_gender;

/* group may be NULL for the group-1 masculine paradigm. */
URDUSTEM_API us_status us_inflect_noun(const char* lemma, size_t len, const char* group, us_case c, us_number n,
                                       us_gender g, us_string** out);
/* out[0..2]: infinitive, direct causative, indirect causative. */
URDUSTEM_API us_status us_inflect_verb(const char* root, size_t len, us_string* out[3]);
URDUSTEM_API us_status us_inflect_adjective(const char* lemma, size_t len, us_string** masculine_oblique,
                                            us_string** feminine);

typedef struct us_lexicon us_lexicon;

URDUSTEM_API us_status us_lexicon_parse(const char* text, size_t len, us_lexicon** out);
URDUSTEM_API size_t us_lexicon_size(const us_lexicon* lex);
URDUSTEM_API void us_lexicon_free(us_lexicon* lex);
URDUSTEM_API us_status us_generate_gold(const us_lexicon* lex, us_gold_corpus** out);

#ifdef __cplusplus
}
#endif

#endif /* URDUSTEM_URDUSTEM_H */
