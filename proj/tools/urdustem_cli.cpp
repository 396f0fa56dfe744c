// urdustem command-line front end. Talks to the library only through the C
// API in urdustem/urdustem.h.
//
// Exit codes: 0 success, 1 validation failure (rule file, paradigm),
// 2 input, IO or alignment error.

#include "urdustem/urdustem.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

using json = nlohmann::json;

// Carries an exit code up to main(); message goes to stderr.
struct CliFailure {
  int exit_code;
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Free(p); }
};

using StringPtr = std::unique_ptr<us_string, Deleter<us_string, us_string_free>>;
using RuleSetPtr = std::unique_ptr<us_rule_set, Deleter<us_rule_set, us_rule_set_free>>;
using BatchPtr = std::unique_ptr<us_stem_batch, Deleter<us_stem_batch, us_stem_batch_free>>;
using GoldPtr = std::unique_ptr<us_gold_corpus, Deleter<us_gold_corpus, us_gold_corpus_free>>;
using ReportPtr = std::unique_ptr<us_eval_report, Deleter<us_eval_report, us_eval_report_free>>;
using LexiconPtr = std::unique_ptr<us_lexicon, Deleter<us_lexicon, us_lexicon_free>>;
using TokensPtr = std::unique_ptr<us_token_list, Deleter<us_token_list, us_token_list_free>>;

std::string_view sv(us_str_view v) {
  return v.data == nullptr ? std::string_view{} : std::string_view(v.data, v.size);
}

std::string str(const StringPtr& s) {
  return std::string(sv(us_string_view(s.get())));
}

[[noreturn]] void fail_with(int code, const std::string& context) {
  std::string msg = context.empty() ? std::string(us_last_error_message())
                                    : context + ": " + us_last_error_message();
  throw CliFailure{code, msg};
}

void check(us_status st, int code, const std::string& context = {}) {
  if (st != US_OK) fail_with(code, context);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitInput, "cannot open '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string normalize(const std::string& text, bool strip, const std::string& context) {
  us_string* out = nullptr;
  check(us_normalize(text.data(), text.size(), strip ? 1 : 0, &out), kExitInput, context);
  return str(StringPtr(out));
}

struct StemOptions {
  std::string rules_path;
  bool strip_diacritics = true;
  uint32_t suffix_passes = 1;
  uint32_t prefix_passes = 1;
  std::string order = "suffix-first";
  bool json = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--rules", rules_path, "Rule file (defaults to the built-in rule set)");
    cmd->add_flag("--strip-diacritics", strip_diacritics, "Remove Arabic vowel marks before stemming (default true; =false keeps them)");
    cmd->add_option("--suffix-passes", suffix_passes, "Maximum suffix rules applied per word")
        ->check(CLI::Range(0, 4));
    cmd->add_option("--prefix-passes", prefix_passes, "Maximum prefix rules applied per word")
        ->check(CLI::Range(0, 4));
    cmd->add_option("--order", order, "Which affix kind is stripped first")
        ->check(CLI::IsMember({"suffix-first", "prefix-first"}));
    cmd->add_flag("--json", json, "Emit JSON instead of TSV");
  }

  us_stem_config config() const {
    us_stem_config cfg = us_stem_config_default();
    cfg.max_suffix_passes = suffix_passes;
    cfg.max_prefix_passes = prefix_passes;
    cfg.order = order == "prefix-first" ? US_PREFIX_FIRST : US_SUFFIX_FIRST;
    return cfg;
  }
};

RuleSetPtr load_rules(const std::string& path) {
  us_rule_set* rs = nullptr;
  if (path.empty()) {
    check(us_rule_set_builtin(US_RULES_DEFAULT, &rs), kExitValidation, "built-in rules");
  } else {
    const std::string text = read_input(path);
    check(us_rule_set_parse(text.data(), text.size(), &rs), kExitValidation, path);
  }
  return RuleSetPtr(rs);
}

json rule_json(const us_rule_set* rs, size_t index) {
  us_rule_view r{};
  us_rule_set_rule(rs, index, &r);
  return json{{"index", index},
              {"kind", r.kind == US_PREFIX ? "P" : "S"},
              {"pattern", sv(r.pattern)},
              {"replacement", sv(r.replacement)},
              {"min_stem", r.min_stem}};
}

json result_json(const us_stem_result* r, const us_rule_set* rs) {
  us_str_view affix{};
  json j;
  j["word"] = sv(us_stem_result_word(r));
  j["prefix"] = us_stem_result_prefix(r, &affix) ? json(sv(affix)) : json(nullptr);
  j["stem"] = sv(us_stem_result_stem(r));
  j["suffix"] = us_stem_result_suffix(r, &affix) ? json(sv(affix)) : json(nullptr);
  j["exception_hit"] = us_stem_result_exception_hit(r) != 0;
  json applied = json::array();
  for (size_t i = 0; i < us_stem_result_applied_count(r); ++i) {
    applied.push_back(rs != nullptr ? rule_json(rs, us_stem_result_applied(r, i)) : json(us_stem_result_applied(r, i)));
  }
  j["applied"] = std::move(applied);
  return j;
}

// Word tokens of the text, or one word per non-blank line in line mode.
std::vector<std::string> extract_words(const std::string& text, bool line_mode) {
  std::vector<std::string> words;
  if (line_mode) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      words.push_back(line.substr(first, last - first + 1));
    }
    return words;
  }
  us_token_list* raw = nullptr;
  check(us_tokenize(text.data(), text.size(), &raw), kExitInput, "tokenize");
  TokensPtr tokens(raw);
  for (size_t i = 0; i < us_token_list_size(tokens.get()); ++i) {
    us_token t{};
    us_token_list_at(tokens.get(), i, &t);
    if (t.kind == US_TOKEN_WORD) words.push_back(text.substr(t.start, t.end - t.start));
  }
  return words;
}

BatchPtr stem_words(const us_rule_set* rs, const std::vector<std::string>& words, const us_stem_config& cfg) {
  std::vector<us_str_view> views;
  views.reserve(words.size());
  for (const auto& w : words) views.push_back(us_str_view{w.data(), w.size()});
  us_stem_batch* batch = nullptr;
  check(us_stem_batch_run(rs, views.data(), views.size(), &cfg, &batch), kExitInput, "stem");
  return BatchPtr(batch);
}

std::string cmd_stem(const StemOptions& opt, const std::string& input, bool line_mode) {
  const RuleSetPtr rs = load_rules(opt.rules_path);
  const std::string text = normalize(read_input(input), opt.strip_diacritics, input.empty() ? "stdin" : input);
  const auto words = extract_words(text, line_mode);
  const BatchPtr batch = stem_words(rs.get(), words, opt.config());

  if (opt.json) {
    json arr = json::array();
    for (size_t i = 0; i < us_stem_batch_size(batch.get()); ++i) {
      arr.push_back(result_json(us_stem_batch_at(batch.get(), i), rs.get()));
    }
    return arr.dump(2) + "\n";
  }
  us_string* out = nullptr;
  check(us_stem_batch_format_tsv(batch.get(), &out), kExitInput);
  return str(StringPtr(out));
}

std::string cmd_eval(const StemOptions& opt, const std::string& gold_path, const std::string& results_path,
                     bool stem_only) {
  const std::string gold_text = normalize(read_input(gold_path), opt.strip_diacritics, gold_path);
  us_gold_corpus* g = nullptr;
  check(us_gold_corpus_parse(gold_text.data(), gold_text.size(), &g), kExitInput, gold_path);
  const GoldPtr gold(g);

  BatchPtr batch;
  RuleSetPtr rs;
  if (!results_path.empty()) {
    const std::string results_text = normalize(read_input(results_path), opt.strip_diacritics, results_path);
    us_stem_batch* b = nullptr;
    check(us_stem_batch_parse_tsv(results_text.data(), results_text.size(), &b), kExitInput, results_path);
    batch.reset(b);
  } else {
    rs = load_rules(opt.rules_path);
    std::vector<std::string> words;
    for (size_t i = 0; i < us_gold_corpus_size(gold.get()); ++i) {
      us_gold_view v{};
      us_gold_corpus_entry(gold.get(), i, &v);
      words.emplace_back(sv(v.word));
    }
    batch = stem_words(rs.get(), words, opt.config());
  }

  us_eval_report* r = nullptr;
  const us_status st = us_evaluate(batch.get(), gold.get(), stem_only ? US_MATCH_STEM_ONLY : US_MATCH_STRICT, &r);
  if (st != US_OK) {
    size_t index = 0;
    std::string where = "evaluation";
    if (us_last_error_index(&index)) where += " (first mismatch at entry " + std::to_string(index + 1) + ")";
    fail_with(kExitInput, where);
  }
  const ReportPtr report(r);

  us_string* acc = nullptr;
  check(us_eval_report_accuracy_text(report.get(), 1, &acc), kExitInput);
  const std::string accuracy = str(StringPtr(acc));

  if (opt.json) {
    us_eval_summary s{};
    us_eval_report_summary(report.get(), &s);
    json j{{"total_words", s.total_words},
           {"correct", s.correct},
           {"wrong", s.wrong},
           {"unique_correct", s.unique_correct},
           {"pass_through", s.pass_through},
           {"accuracy_percent", accuracy},
           {"accuracy_exact", std::to_string(s.accuracy_num) + "/" + std::to_string(s.accuracy_den)},
           {"over_stemming", s.over_count},
           {"under_stemming", s.under_count},
           {"other_errors", s.other_count},
           {"min_word_len", s.min_word_len},
           {"max_word_len", s.max_word_len}};
    json classes = json::array();
    for (size_t i = 0; i < s.total_words; ++i) {
      us_error_class c{};
      us_eval_report_class(report.get(), i, &c);
      classes.push_back(us_error_class_name(c));
    }
    j["classes"] = std::move(classes);
    return j.dump(2) + "\n";
  }

  us_string* table = nullptr;
  check(us_eval_report_format(report.get(), US_REPORT_TABLE, &table), kExitInput);
  us_string* kv = nullptr;
  check(us_eval_report_format(report.get(), US_REPORT_KEY_VALUE, &kv), kExitInput);
  return str(StringPtr(table)) + "\n" + str(StringPtr(kv));
}

std::string cmd_rules(const std::string& action, const std::string& path, bool as_json) {
  const RuleSetPtr rs = load_rules(path);
  if (action == "validate") return {};

  const size_t n = us_rule_set_size(rs.get());
  if (as_json) {
    json rules = json::array();
    for (size_t i = 0; i < n; ++i) rules.push_back(rule_json(rs.get(), i));
    json j{{"suffixes", us_rule_set_count(rs.get(), US_SUFFIX)},
           {"prefixes", us_rule_set_count(rs.get(), US_PREFIX)},
           {"exceptions", us_rule_set_exception_count(rs.get())},
           {"min_stem", us_rule_set_default_min_stem(rs.get())},
           {"rules", std::move(rules)}};
    return j.dump(2) + "\n";
  }
  std::string out;
  out += "suffixes: " + std::to_string(us_rule_set_count(rs.get(), US_SUFFIX)) + "\n";
  out += "prefixes: " + std::to_string(us_rule_set_count(rs.get(), US_PREFIX)) + "\n";
  out += "exceptions: " + std::to_string(us_rule_set_exception_count(rs.get())) + "\n";
  out += "min_stem: " + std::to_string(us_rule_set_default_min_stem(rs.get())) + "\n";
  for (size_t i = 0; i < n; ++i) {
    us_rule_view r{};
    us_rule_set_rule(rs.get(), i, &r);
    out += r.kind == US_PREFIX ? "P" : "S";
    out += '\t';
    out += sv(r.pattern);
    out += '\t';
    out += sv(r.replacement);
    out += '\t';
    out += std::to_string(r.min_stem);
    out += '\n';
  }
  return out;
}

std::string cmd_gen(const std::string& lexicon_path, bool as_json) {
  const std::string text = read_input(lexicon_path);
  us_lexicon* lex = nullptr;
  check(us_lexicon_parse(text.data(), text.size(), &lex), kExitInput, lexicon_path);
  const LexiconPtr lexicon(lex);

  us_gold_corpus* g = nullptr;
  const us_status st = us_generate_gold(lexicon.get(), &g);
  if (st != US_OK) fail_with(st == US_ERR_PARADIGM ? kExitValidation : kExitInput, lexicon_path);
  const GoldPtr gold(g);

  if (as_json) {
    json arr = json::array();
    for (size_t i = 0; i < us_gold_corpus_size(gold.get()); ++i) {
      us_gold_view v{};
      us_gold_corpus_entry(gold.get(), i, &v);
      arr.push_back(json{{"word", sv(v.word)},
                         {"expected_stem", sv(v.expected_stem)},
                         {"expected_prefix", v.has_prefix ? json(sv(v.expected_prefix)) : json(nullptr)},
                         {"expected_suffix", v.has_suffix ? json(sv(v.expected_suffix)) : json(nullptr)},
                         {"provenance", v.pattern_generalized ? "pattern-generalized" : "attested"}});
    }
    return arr.dump(2) + "\n";
  }
  us_string* out = nullptr;
  check(us_gold_corpus_serialize(gold.get(), &out), kExitInput);
  return str(StringPtr(out));
}

std::string cmd_tokenize(const std::string& input, bool strip) {
  const std::string text = normalize(read_input(input), strip, input.empty() ? "stdin" : input);
  us_token_list* raw = nullptr;
  check(us_tokenize(text.data(), text.size(), &raw), kExitInput, "tokenize");
  const TokensPtr tokens(raw);
  std::string out;
  for (size_t i = 0; i < us_token_list_size(tokens.get()); ++i) {
    us_token t{};
    us_token_list_at(tokens.get(), i, &t);
    out += text.substr(t.start, t.end - t.start);
    out += '\t';
    out += us_token_kind_name(t.kind);
    out += '\t';
    out += std::to_string(t.start);
    out += '\t';
    out += std::to_string(t.end);
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"urdustem: rule-based affix-stripping stemmer for Urdu"};
  app.require_subcommand(1);

  StemOptions stem_opt;
  std::string stem_input;
  bool line_mode = false;
  auto* stem = app.add_subcommand("stem", "Stem the words of a text, one TSV line per word");
  stem_opt.add_to(stem);
  stem->add_option("input", stem_input, "Input text file (default: stdin)");
  stem->add_flag("--lines", line_mode, "Treat each non-blank line as one word instead of tokenizing");

  StemOptions eval_opt;
  std::string gold_path;
  std::string results_path;
  bool stem_only = false;
  auto* evaluate = app.add_subcommand("eval", "Score the stemmer against a gold corpus");
  eval_opt.add_to(evaluate);
  evaluate->add_option("--gold", gold_path, "Gold corpus TSV")->required();
  evaluate->add_option("results", results_path, "Stemmer output TSV to score (default: stem the gold words)");
  evaluate->add_flag("--stem-only", stem_only, "Score stems only, ignoring affix fields");

  std::string rules_action;
  std::string rules_path;
  bool rules_json = false;
  auto* rules = app.add_subcommand("rules", "Validate or list a rule file");
  rules->add_option("action", rules_action, "validate | list")
      ->required()
      ->check(CLI::IsMember({"validate", "list"}));
  rules->add_option("--rules", rules_path, "Rule file (defaults to the built-in rule set)");
  rules->add_flag("--json", rules_json, "Emit JSON");

  std::string lexicon_path;
  bool gen_json = false;
  auto* gen = app.add_subcommand("gen", "Generate a gold corpus from a lexicon of paradigm entries");
  gen->add_option("--lexicon", lexicon_path, "Lexicon file")->required();
  gen->add_flag("--json", gen_json, "Emit JSON");

  std::string tok_input;
  bool tok_strip = true;
  auto* tokenize = app.add_subcommand("tokenize", "Normalize and tokenize text (surface, kind, start, end)");
  tokenize->add_option("input", tok_input, "Input text file (default: stdin)");
  tokenize->add_flag("--strip-diacritics", tok_strip, "Remove Arabic vowel marks (default true; =false keeps them)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    std::string out;
    if (*stem) {
      out = cmd_stem(stem_opt, stem_input, line_mode);
    } else if (*evaluate) {
      out = cmd_eval(eval_opt, gold_path, results_path, stem_only);
    } else if (*rules) {
      out = cmd_rules(rules_action, rules_path, rules_json);
    } else if (*gen) {
      out = cmd_gen(lexicon_path, gen_json);
    } else if (*tokenize) {
      out = cmd_tokenize(tok_input, tok_strip);
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return std::fflush(stdout) == 0 ? kExitOk : kExitInput;
  } catch (const CliFailure& f) {
    std::cerr << "urdustem: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "urdustem: " << e.what() << "\n";
    return kExitInput;
  }
}
