#include "eval.hpp"

#include "error.hpp"
#include "unicode.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace urdustem::eval {

namespace {

using stemmer::StemResult;

constexpr std::string_view kProvenanceDirective = "#!provenance";

bool affix_equal(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  return a.value_or(std::string()) == b.value_or(std::string());
}

bool matches(const StemResult& r, const GoldEntry& g, MatchPolicy policy) {
  if (r.stem != g.expected_stem) return false;
  if (policy == MatchPolicy::StemOnly) return true;
  return affix_equal(r.prefix, g.expected_prefix) && affix_equal(r.suffix, g.expected_suffix);
}

// Whether the graphemes of `small` appear in order inside `big`, with
// `big` strictly longer.
bool is_proper_subsequence(std::string_view small, std::string_view big) {
  const auto a = text::graphemes(small);
  const auto b = text::graphemes(big);
  if (a.size() >= b.size()) return false;
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j) {
    if (a[i] == b[j]) ++i;
  }
  return i == a.size();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t tab; (tab = line.find('\t', start)) != std::string_view::npos; start = tab + 1) {
    fields.push_back(line.substr(start, tab - start));
  }
  fields.push_back(line.substr(start));
  return fields;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

Error syntax_error(std::size_t line, const std::string& what) {
  Error e(ErrorCode::GoldSyntax, "line " + std::to_string(line) + ": " + what);
  e.at_line(line);
  return e;
}

std::optional<std::string> optional_field(const std::vector<std::string_view>& fields, std::size_t i) {
  if (i >= fields.size() || fields[i].empty()) return std::nullopt;
  return std::string(fields[i]);
}

// Field `required` must be present and non-empty.
void check_fields(const std::vector<std::string_view>& fields, std::size_t line, std::size_t required,
                  std::string_view required_name) {
  if (fields.size() > 4) {
    throw syntax_error(line, "expected at most 4 tab-separated fields, got " + std::to_string(fields.size()));
  }
  if (fields[0].empty()) throw syntax_error(line, "empty word field");
  if (fields.size() <= required || fields[required].empty()) {
    throw syntax_error(line, "empty " + std::string(required_name) + " field");
  }
  for (const auto f : fields) {
    if (!text::is_valid_utf8(f)) throw syntax_error(line, "invalid UTF-8");
  }
}

std::string row(std::string_view label, const std::string& value) {
  constexpr std::size_t kLabelWidth = 26;
  std::string out(label);
  if (out.size() < kLabelWidth) out.append(kLabelWidth - out.size(), ' ');
  out += value;
  out += '\n';
  return out;
}

}  // namespace

const char* to_string(ErrorClass c) noexcept {
  switch (c) {
    case ErrorClass::Correct: return "correct";
    case ErrorClass::OverStemming: return "over-stemming";
    case ErrorClass::UnderStemming: return "under-stemming";
    case ErrorClass::Other: return "other";
  }
  return "other";
}

std::string Rational::to_fixed(unsigned decimals) const {
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < decimals; ++i) scale *= 10;
  // round(num * scale / den), half up, in integers.
  const std::uint64_t scaled = (2 * num * scale + den) / (2 * den);
  std::string out = std::to_string(scaled / scale);
  if (decimals > 0) {
    std::string frac = std::to_string(scaled % scale);
    frac.insert(0, decimals - frac.size(), '0');
    out += '.';
    out += frac;
  }
  return out;
}

Rational EvalReport::accuracy_percent() const {
  if (total_words == 0) {
    throw Error(ErrorCode::EmptyInput, "accuracy is undefined for zero words");
  }
  std::uint64_t num = static_cast<std::uint64_t>(correct) * 100;
  std::uint64_t den = total_words;
  const std::uint64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

ErrorClass classify_error(const StemResult& result, const GoldEntry& gold, MatchPolicy policy) {
  if (result.word != gold.word) {
    throw Error(ErrorCode::Alignment, "result word '" + result.word + "' does not match gold word '" + gold.word + "'");
  }
  if (matches(result, gold, policy)) return ErrorClass::Correct;
  if (is_proper_subsequence(gold.expected_stem, result.stem)) return ErrorClass::UnderStemming;
  if (is_proper_subsequence(result.stem, gold.expected_stem)) return ErrorClass::OverStemming;
  return ErrorClass::Other;
}

EvalReport evaluate(std::span<const StemResult> results, std::span<const GoldEntry> gold, MatchPolicy policy) {
  if (results.size() != gold.size()) {
    const std::size_t first = std::min(results.size(), gold.size());
    Error e(ErrorCode::Alignment, "length mismatch: " + std::to_string(results.size()) + " results vs " +
                                      std::to_string(gold.size()) + " gold entries (first unmatched index " +
                                      std::to_string(first) + ")");
    e.at_index(first);
    throw e;
  }
  if (gold.empty()) {
    throw Error(ErrorCode::EmptyInput, "nothing to evaluate");
  }

  EvalReport report;
  report.total_words = gold.size();
  report.classes.reserve(gold.size());
  report.min_word_len = std::numeric_limits<std::size_t>::max();
  std::set<std::string_view> correct_types;

  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (results[i].word != gold[i].word) {
      Error e(ErrorCode::Alignment, "index " + std::to_string(i) + ": result word '" + results[i].word +
                                        "' does not match gold word '" + gold[i].word + "'");
      e.at_index(i);
      throw e;
    }
    const ErrorClass c = classify_error(results[i], gold[i], policy);
    report.classes.push_back(c);
    switch (c) {
      case ErrorClass::Correct:
        ++report.correct;
        correct_types.insert(gold[i].word);
        break;
      case ErrorClass::OverStemming: ++report.over_count; break;
      case ErrorClass::UnderStemming: ++report.under_count; break;
      case ErrorClass::Other: ++report.other_count; break;
    }
    if (results[i].applied.empty() && !results[i].prefix && !results[i].suffix) ++report.pass_through;
    const std::size_t len = text::grapheme_count(gold[i].word);
    report.min_word_len = std::min(report.min_word_len, len);
    report.max_word_len = std::max(report.max_word_len, len);
  }
  report.wrong = report.total_words - report.correct;
  report.unique_correct = correct_types.size();
  return report;
}

std::string summarize(const EvalReport& report) {
  std::string out;
  out += row("Test Data Features", "Total Count");
  out += row("Total Words", std::to_string(report.total_words));
  out += row("Correct stemmed output", std::to_string(report.correct));
  out += row("Wrong output", std::to_string(report.wrong));
  out += row("Unique Words", std::to_string(report.unique_correct));
  out += row("Min Length", std::to_string(report.min_word_len));
  out += row("Max Length", std::to_string(report.max_word_len));
  out += row("Accuracy (%)", report.accuracy_percent().to_fixed(1));
  out += row("Over stemming", std::to_string(report.over_count));
  out += row("Under stemming", std::to_string(report.under_count));
  out += row("Other errors", std::to_string(report.other_count));
  out += row("Pass-through words", std::to_string(report.pass_through));
  return out;
}

std::string report_key_values(const EvalReport& report) {
  const Rational acc = report.accuracy_percent();
  std::string out;
  auto kv = [&out](std::string_view key, const std::string& value) {
    out += key;
    out += '\t';
    out += value;
    out += '\n';
  };
  kv("total_words", std::to_string(report.total_words));
  kv("correct", std::to_string(report.correct));
  kv("wrong", std::to_string(report.wrong));
  kv("unique_correct", std::to_string(report.unique_correct));
  kv("pass_through", std::to_string(report.pass_through));
  kv("accuracy_percent", acc.to_fixed(1));
  kv("accuracy_exact", std::to_string(acc.num) + "/" + std::to_string(acc.den));
  kv("over_stemming", std::to_string(report.over_count));
  kv("under_stemming", std::to_string(report.under_count));
  kv("other_errors", std::to_string(report.other_count));
  kv("min_word_len", std::to_string(report.min_word_len));
  kv("max_word_len", std::to_string(report.max_word_len));
  return out;
}

std::vector<GoldEntry> parse_gold_tsv(std::string_view text) {
  std::vector<GoldEntry> out;
  Provenance provenance = Provenance::Attested;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    const auto line = lines[n];
    if (line.empty() || is_blank(line)) continue;
    if (line.front() == '#') {
      if (line.starts_with(kProvenanceDirective)) {
        const auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0] != kProvenanceDirective) {
          throw syntax_error(line_no, "provenance directive needs exactly one value");
        }
        if (fields[1] == "attested") {
          provenance = Provenance::Attested;
        } else if (fields[1] == "pattern-generalized") {
          provenance = Provenance::PatternGeneralized;
        } else {
          throw syntax_error(line_no, "unknown provenance '" + std::string(fields[1]) + "'");
        }
      }
      continue;
    }
    const auto fields = split_tabs(line);
    check_fields(fields, line_no, 1, "expected_stem");
    out.push_back(GoldEntry{std::string(fields[0]), std::string(fields[1]), optional_field(fields, 2),
                            optional_field(fields, 3), provenance});
  }
  return out;
}

std::string format_gold_tsv(std::span<const GoldEntry> gold) {
  std::string out;
  Provenance current = Provenance::Attested;
  for (const auto& g : gold) {
    if (g.provenance != current) {
      current = g.provenance;
      out += kProvenanceDirective;
      out += current == Provenance::Attested ? "\tattested\n" : "\tpattern-generalized\n";
    }
    out += g.word;
    out += '\t';
    out += g.expected_stem;
    out += '\t';
    out += g.expected_prefix.value_or(std::string());
    out += '\t';
    out += g.expected_suffix.value_or(std::string());
    out += '\n';
  }
  return out;
}

std::vector<StemResult> parse_results_tsv(std::string_view text) {
  std::vector<StemResult> out;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = lines[n];
    if (line.empty() || is_blank(line) || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    check_fields(fields, n + 1, 2, "stem");
    StemResult r;
    r.word = std::string(fields[0]);
    r.prefix = optional_field(fields, 1);
    r.stem = std::string(fields[2]);
    r.suffix = optional_field(fields, 3);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_results_tsv(std::span<const StemResult> results) {
  std::string out;
  for (const auto& r : results) {
    out += r.word;
    out += '\t';
    out += r.prefix.value_or(std::string());
    out += '\t';
    out += r.stem;
    out += '\t';
    out += r.suffix.value_or(std::string());
    out += '\n';
  }
  return out;
}

}  // namespace urdustem::eval
