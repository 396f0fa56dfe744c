#include "urdustem/urdustem.h"

#include "corpus.hpp"
#include "embedded_data.hpp"
#include "error.hpp"
#include "eval.hpp"
#include "morphology.hpp"
#include "rules.hpp"
#include "stemmer.hpp"
#include "unicode.hpp"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

using namespace urdustem;

struct us_string {
  std::string value;
};

struct us_token_list {
  std::vector<corpus::Token> tokens;
};

struct us_rule_set {
  rules::RuleSet value;
};

struct us_stem_result {
  stemmer::StemResult value;
};

struct us_stem_batch {
  std::vector<us_stem_result> items;
};

struct us_gold_corpus {
  std::vector<eval::GoldEntry> entries;
};

struct us_eval_report {
  eval::EvalReport value;
};

struct us_lexicon {
  std::vector<morphology::LexiconItem> items;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t other_line = 0;
  std::optional<std::size_t> index;
};

thread_local LastError g_last_error;

us_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return US_ERR_INVALID_ARGUMENT;
    case ErrorCode::Encoding: return US_ERR_ENCODING;
    case ErrorCode::NotNormalized: return US_ERR_NOT_NORMALIZED;
    case ErrorCode::RuleSyntax: return US_ERR_RULE_SYNTAX;
    case ErrorCode::DuplicateRule: return US_ERR_DUPLICATE_RULE;
    case ErrorCode::Config: return US_ERR_CONFIG;
    case ErrorCode::GoldSyntax: return US_ERR_GOLD_SYNTAX;
    case ErrorCode::Alignment: return US_ERR_ALIGNMENT;
    case ErrorCode::EmptyInput: return US_ERR_EMPTY_INPUT;
    case ErrorCode::Paradigm: return US_ERR_PARADIGM;
    case ErrorCode::LexiconSyntax: return US_ERR_LEXICON_SYNTAX;
  }
  return US_ERR_INTERNAL;
}

us_status fail(us_status status, std::string message) {
  g_last_error = LastError{std::move(message), 0, 0, std::nullopt};
  return status;
}

// Runs `body`, translating exceptions into a status plus the thread-local
// error slot.
template <typename F>
us_status guarded(F&& body) {
  try {
    body();
    g_last_error = LastError{};
    return US_OK;
  } catch (const Error& e) {
    g_last_error = LastError{e.what(), e.line().value_or(0), e.other_line().value_or(0), e.index()};
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    return fail(US_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(US_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(US_ERR_INTERNAL, "unknown error");
  }
}

std::string_view view(const char* data, std::size_t len) {
  return data == nullptr ? std::string_view{} : std::string_view(data, len);
}

us_str_view to_view(const std::string& s) {
  return us_str_view{s.data(), s.size()};
}

us_string* make_string(std::string s) {
  return new us_string{std::move(s)};
}

stemmer::StemConfig to_config(const us_stem_config* cfg) {
  stemmer::StemConfig c;
  if (cfg != nullptr) {
    c.max_suffix_passes = cfg->max_suffix_passes;
    c.max_prefix_passes = cfg->max_prefix_passes;
    c.order = cfg->order == US_PREFIX_FIRST ? stemmer::PassOrder::PrefixFirst : stemmer::PassOrder::SuffixFirst;
  }
  return c;
}

us_error_class to_class(eval::ErrorClass c) {
  switch (c) {
    case eval::ErrorClass::Correct: return US_CORRECT;
    case eval::ErrorClass::OverStemming: return US_OVER_STEMMING;
    case eval::ErrorClass::UnderStemming: return US_UNDER_STEMMING;
    case eval::ErrorClass::Other: return US_OTHER_ERROR;
  }
  return US_OTHER_ERROR;
}

eval::MatchPolicy to_policy(us_match_policy p) {
  return p == US_MATCH_STEM_ONLY ? eval::MatchPolicy::StemOnly : eval::MatchPolicy::Strict;
}

std::string_view builtin_text(us_builtin_rules which) {
  switch (which) {
    case US_RULES_DEFAULT: return data::kDefaultRules;
    case US_RULES_COMPANION_ALIF: return data::kCompanionAlifRules;
    case US_RULES_COMPANION_HE: return data::kCompanionHeRules;
  }
  return {};
}

#define US_REQUIRE(cond, what)                               \
  do {                                                       \
    if (!(cond)) return fail(US_ERR_INVALID_ARGUMENT, what); \
  } while (0)

}  // namespace

extern "C" {

const char* us_status_name(us_status status) {
  switch (status) {
    case US_OK: return "ok";
    case US_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case US_ERR_ENCODING: return "encoding";
    case US_ERR_NOT_NORMALIZED: return "not-normalized";
    case US_ERR_RULE_SYNTAX: return "rule-syntax";
    case US_ERR_DUPLICATE_RULE: return "duplicate-rule";
    case US_ERR_CONFIG: return "config";
    case US_ERR_GOLD_SYNTAX: return "gold-syntax";
    case US_ERR_ALIGNMENT: return "alignment";
    case US_ERR_EMPTY_INPUT: return "empty-input";
    case US_ERR_PARADIGM: return "paradigm";
    case US_ERR_LEXICON_SYNTAX: return "lexicon-syntax";
    case US_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* us_last_error_message(void) {
  return g_last_error.message.c_str();
}

size_t us_last_error_line(void) {
  return g_last_error.line;
}

size_t us_last_error_other_line(void) {
  return g_last_error.other_line;
}

int us_last_error_index(size_t* index) {
  if (!g_last_error.index) return 0;
  if (index != nullptr) *index = *g_last_error.index;
  return 1;
}

us_str_view us_string_view(const us_string* s) {
  return s == nullptr ? us_str_view{nullptr, 0} : to_view(s->value);
}

void us_string_free(us_string* s) {
  delete s;
}

/* text */

us_status us_normalize(const char* text, size_t len, int strip_diacritics, us_string** out) {
  US_REQUIRE(out != nullptr && (text != nullptr || len == 0), "null argument");
  return guarded([&] { *out = make_string(corpus::normalize(view(text, len), strip_diacritics != 0)); });
}

us_status us_grapheme_count(const char* text, size_t len, size_t* out) {
  US_REQUIRE(out != nullptr && (text != nullptr || len == 0), "null argument");
  return guarded([&] {
    const auto s = view(text, len);
    text::validate_utf8(s);
    *out = text::grapheme_count(s);
  });
}

us_status us_tokenize(const char* text, size_t len, us_token_list** out) {
  US_REQUIRE(out != nullptr && (text != nullptr || len == 0), "null argument");
  return guarded([&] {
    const auto s = view(text, len);
    text::validate_utf8(s);
    *out = new us_token_list{corpus::tokenize(s)};
  });
}

size_t us_token_list_size(const us_token_list* list) {
  return list == nullptr ? 0 : list->tokens.size();
}

us_status us_token_list_at(const us_token_list* list, size_t i, us_token* out) {
  US_REQUIRE(list != nullptr && out != nullptr, "null argument");
  US_REQUIRE(i < list->tokens.size(), "token index out of range");
  const auto& t = list->tokens[i];
  *out = us_token{static_cast<us_token_kind>(t.kind), t.span.start, t.span.end};
  return US_OK;
}

void us_token_list_free(us_token_list* list) {
  delete list;
}

const char* us_token_kind_name(us_token_kind kind) {
  return corpus::to_string(static_cast<corpus::TokenKind>(kind));
}

/* rule sets */

us_status us_rule_set_parse(const char* text, size_t len, us_rule_set** out) {
  US_REQUIRE(out != nullptr && (text != nullptr || len == 0), "null argument");
  return guarded([&] { *out = new us_rule_set{rules::parse_rule_file(view(text, len))}; });
}

us_status us_rule_set_builtin(us_builtin_rules which, us_rule_set** out) {
  US_REQUIRE(out != nullptr, "null argument");
  const auto text = builtin_text(which);
  US_REQUIRE(text.data() != nullptr, "unknown built-in rule set");
  return guarded([&] { *out = new us_rule_set{rules::parse_rule_file(text)}; });
}

us_str_view us_builtin_rules_text(us_builtin_rules which) {
  const auto text = builtin_text(which);
  return us_str_view{text.data(), text.size()};
}

void us_rule_set_free(us_rule_set* rs) {
  delete rs;
}

size_t us_rule_set_size(const us_rule_set* rs) {
  return rs == nullptr ? 0 : rs->value.size();
}

size_t us_rule_set_count(const us_rule_set* rs, us_affix_kind kind) {
  if (rs == nullptr) return 0;
  return rs->value.count(kind == US_PREFIX ? rules::AffixKind::Prefix : rules::AffixKind::Suffix);
}

size_t us_rule_set_exception_count(const us_rule_set* rs) {
  return rs == nullptr ? 0 : rs->value.exceptions().size();
}

uint32_t us_rule_set_default_min_stem(const us_rule_set* rs) {
  return rs == nullptr ? 0 : rs->value.default_min_stem();
}

us_status us_rule_set_rule(const us_rule_set* rs, size_t i, us_rule_view* out) {
  US_REQUIRE(rs != nullptr && out != nullptr, "null argument");
  US_REQUIRE(i < rs->value.size(), "rule index out of range");
  const auto& r = rs->value.rules()[i];
  *out = us_rule_view{r.kind() == rules::AffixKind::Prefix ? US_PREFIX : US_SUFFIX, to_view(r.pattern()),
                      to_view(r.replacement()), rs->value.effective_min_stem(r), r.min_stem() ? 1 : 0};
  return US_OK;
}

us_status us_rule_set_serialize(const us_rule_set* rs, us_string** out) {
  US_REQUIRE(rs != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = make_string(rules::serialize_rule_set(rs->value)); });
}

/* stemming */

us_stem_config us_stem_config_default(void) {
  const stemmer::StemConfig c;
  return us_stem_config{c.max_suffix_passes, c.max_prefix_passes, US_SUFFIX_FIRST};
}

us_status us_stem_word(const us_rule_set* rs, const char* word, size_t len, const us_stem_config* cfg,
                       us_stem_result** out) {
  US_REQUIRE(rs != nullptr && out != nullptr && (word != nullptr || len == 0), "null argument");
  return guarded(
      [&] { *out = new us_stem_result{stemmer::stem_word(view(word, len), rs->value, to_config(cfg))}; });
}

void us_stem_result_free(us_stem_result* r) {
  delete r;
}

us_str_view us_stem_result_word(const us_stem_result* r) {
  return r == nullptr ? us_str_view{nullptr, 0} : to_view(r->value.word);
}

us_str_view us_stem_result_stem(const us_stem_result* r) {
  return r == nullptr ? us_str_view{nullptr, 0} : to_view(r->value.stem);
}

int us_stem_result_prefix(const us_stem_result* r, us_str_view* out) {
  if (r == nullptr || !r->value.prefix) return 0;
  if (out != nullptr) *out = to_view(*r->value.prefix);
  return 1;
}

int us_stem_result_suffix(const us_stem_result* r, us_str_view* out) {
  if (r == nullptr || !r->value.suffix) return 0;
  if (out != nullptr) *out = to_view(*r->value.suffix);
  return 1;
}

int us_stem_result_exception_hit(const us_stem_result* r) {
  return r != nullptr && r->value.exception_hit ? 1 : 0;
}

size_t us_stem_result_applied_count(const us_stem_result* r) {
  return r == nullptr ? 0 : r->value.applied.size();
}

size_t us_stem_result_applied(const us_stem_result* r, size_t i) {
  if (r == nullptr || i >= r->value.applied.size()) return SIZE_MAX;
  return r->value.applied[i];
}

us_status us_stem_batch_run(const us_rule_set* rs, const us_str_view* words, size_t n, const us_stem_config* cfg,
                            us_stem_batch** out) {
  US_REQUIRE(rs != nullptr && out != nullptr && (words != nullptr || n == 0), "null argument");
  return guarded([&] {
    std::vector<std::string> ws;
    ws.reserve(n);
    for (size_t i = 0; i < n; ++i) ws.emplace_back(view(words[i].data, words[i].size));
    auto results = stemmer::stem_batch(ws, rs->value, to_config(cfg));
    auto batch = std::make_unique<us_stem_batch>();
    batch->items.reserve(results.size());
    for (auto& r : results) batch->items.push_back(us_stem_result{std::move(r)});
    *out = batch.release();
  });
}

us_status us_stem_batch_parse_tsv(const char* text, size_t len, us_stem_batch** out) {
  US_REQUIRE(out != nullptr && (text != nullptr || len == 0), "null argument");
  return guarded([&] {
    auto results = eval::parse_results_tsv(view(text, len));
    auto batch = std::make_unique<us_stem_batch>();
    for (auto& r : results) batch->items.push_back(us_stem_result{std::move(r)});
    *out = batch.release();
  });
}

us_status us_stem_batch_format_tsv(const us_stem_batch* b, us_string** out) {
  US_REQUIRE(b != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    std::vector<stemmer::StemResult> results;
    results.reserve(b->items.size());
    for (const auto& item : b->items) results.push_back(item.value);
    *out = make_string(eval::format_results_tsv(results));
  });
}

size_t us_stem_batch_size(const us_stem_batch* b) {
  return b == nullptr ? 0 : b->items.size();
}

const us_stem_result* us_stem_batch_at(const us_stem_batch* b, size_t i) {
  if (b == nullptr || i >= b->items.size()) return nullptr;
  return &b->items[i];
}

void us_stem_batch_free(us_stem_batch* b) {
  delete b;
}

/* gold corpora and evaluation */

us_status us_gold_corpus_parse(const char* text, size_t len, us_gold_corpus** out) {
  US_REQUIRE(out != nullptr && (text != nullptr || len == 0), "null argument");
  return guarded([&] { *out = new us_gold_corpus{eval::parse_gold_tsv(view(text, len))}; });
}

us_status us_gold_corpus_serialize(const us_gold_corpus* g, us_string** out) {
  US_REQUIRE(g != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = make_string(eval::format_gold_tsv(g->entries)); });
}

size_t us_gold_corpus_size(const us_gold_corpus* g) {
  return g == nullptr ? 0 : g->entries.size();
}

us_status us_gold_corpus_entry(const us_gold_corpus* g, size_t i, us_gold_view* out) {
  US_REQUIRE(g != nullptr && out != nullptr, "null argument");
  US_REQUIRE(i < g->entries.size(), "gold index out of range");
  const auto& e = g->entries[i];
  static const std::string empty;
  *out = us_gold_view{to_view(e.word),
                      to_view(e.expected_stem),
                      e.expected_prefix ? 1 : 0,
                      to_view(e.expected_prefix ? *e.expected_prefix : empty),
                      e.expected_suffix ? 1 : 0,
                      to_view(e.expected_suffix ? *e.expected_suffix : empty),
                      e.provenance == eval::Provenance::PatternGeneralized ? 1 : 0};
  return US_OK;
}

void us_gold_corpus_free(us_gold_corpus* g) {
  delete g;
}

const char* us_error_class_name(us_error_class c) {
  switch (c) {
    case US_CORRECT: return eval::to_string(eval::ErrorClass::Correct);
    case US_OVER_STEMMING: return eval::to_string(eval::ErrorClass::OverStemming);
    case US_UNDER_STEMMING: return eval::to_string(eval::ErrorClass::UnderStemming);
    case US_OTHER_ERROR: return eval::to_string(eval::ErrorClass::Other);
  }
  return "unknown";
}

us_status us_classify_error(const us_stem_result* r, const us_gold_corpus* g, size_t gold_index,
                            us_match_policy policy, us_error_class* out) {
  US_REQUIRE(r != nullptr && g != nullptr && out != nullptr, "null argument");
  US_REQUIRE(gold_index < g->entries.size(), "gold index out of range");
  return guarded([&] { *out = to_class(eval::classify_error(r->value, g->entries[gold_index], to_policy(policy))); });
}

us_status us_evaluate(const us_stem_batch* results, const us_gold_corpus* gold, us_match_policy policy,
                      us_eval_report** out) {
  US_REQUIRE(results != nullptr && gold != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    std::vector<stemmer::StemResult> rs;
    rs.reserve(results->items.size());
    for (const auto& item : results->items) rs.push_back(item.value);
    *out = new us_eval_report{eval::evaluate(rs, gold->entries, to_policy(policy))};
  });
}

void us_eval_report_summary(const us_eval_report* r, us_eval_summary* out) {
  if (r == nullptr || out == nullptr) return;
  const auto& v = r->value;
  const auto acc = v.accuracy_percent();
  *out = us_eval_summary{v.total_words, v.correct,      v.wrong,       v.unique_correct,
                         v.pass_through, v.over_count,  v.under_count, v.other_count,
                         v.min_word_len, v.max_word_len, acc.num,      acc.den};
}

us_status us_eval_report_class(const us_eval_report* r, size_t i, us_error_class* out) {
  US_REQUIRE(r != nullptr && out != nullptr, "null argument");
  US_REQUIRE(i < r->value.classes.size(), "report index out of range");
  *out = to_class(r->value.classes[i]);
  return US_OK;
}

us_status us_eval_report_format(const us_eval_report* r, us_report_format fmt, us_string** out) {
  US_REQUIRE(r != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = make_string(fmt == US_REPORT_KEY_VALUE ? eval::report_key_values(r->value) : eval::summarize(r->value));
  });
}

us_status us_eval_report_accuracy_text(const us_eval_report* r, unsigned decimals, us_string** out) {
  US_REQUIRE(r != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = make_string(r->value.accuracy_percent().to_fixed(decimals)); });
}

void us_eval_report_free(us_eval_report* r) {
  delete r;
}

/* morphology */

us_status us_inflect_noun(const char* lemma, size_t len, const char* group, us_case c, us_number n, us_gender g,
                          us_string** out) {
  US_REQUIRE(out != nullptr && (lemma != nullptr || len == 0), "null argument");
  return guarded([&] {
    const auto grp = group == nullptr ? morphology::NounGroup::Group1Masculine : morphology::parse_noun_group(group);
    const morphology::ParadigmEntry entry(std::string(view(lemma, len)), grp);
    const morphology::NounFeatures f{static_cast<morphology::Case>(c), static_cast<morphology::Number>(n),
                                     static_cast<morphology::Gender>(g)};
    *out = make_string(morphology::inflect_noun(entry, f));
  });
}

us_status us_inflect_verb(const char* root, size_t len, us_string* out[3]) {
  US_REQUIRE(out != nullptr && (root != nullptr || len == 0), "null argument");
  return guarded([&] {
    auto forms = morphology::inflect_verb(view(root, len));
    auto a = std::make_unique<us_string>(us_string{std::move(forms.infinitive)});
    auto b = std::make_unique<us_string>(us_string{std::move(forms.direct_causative)});
    auto c = std::make_unique<us_string>(us_string{std::move(forms.indirect_causative)});
    out[0] = a.release();
    out[1] = b.release();
    out[2] = c.release();
  });
}

us_status us_inflect_adjective(const char* lemma, size_t len, us_string** masculine_oblique, us_string** feminine) {
  US_REQUIRE(masculine_oblique != nullptr && feminine != nullptr && (lemma != nullptr || len == 0),
             "null argument");
  return guarded([&] {
    auto forms = morphology::inflect_adjective(view(lemma, len));
    auto m = std::make_unique<us_string>(us_string{std::move(forms.masculine_oblique)});
    auto f = std::make_unique<us_string>(us_string{std::move(forms.feminine)});
    *masculine_oblique = m.release();
    *feminine = f.release();
  });
}

us_status us_lexicon_parse(const char* text, size_t len, us_lexicon** out) {
  US_REQUIRE(out != nullptr && (text != nullptr || len == 0), "null argument");
  return guarded([&] { *out = new us_lexicon{morphology::parse_lexicon(view(text, len))}; });
}

size_t us_lexicon_size(const us_lexicon* lex) {
  return lex == nullptr ? 0 : lex->items.size();
}

void us_lexicon_free(us_lexicon* lex) {
  delete lex;
}

us_status us_generate_gold(const us_lexicon* lex, us_gold_corpus** out) {
  US_REQUIRE(lex != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = new us_gold_corpus{morphology::generate_gold(lex->items)}; });
}

}  // extern "C"
