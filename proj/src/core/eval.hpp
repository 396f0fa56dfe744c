#pragma once

#include "stemmer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace urdustem::eval {

enum class Provenance { Attested, PatternGeneralized };

struct GoldEntry {
  std::string word;
  std::string expected_stem;
  std::optional<std::string> expected_prefix;
  std::optional<std::string> expected_suffix;
  Provenance provenance = Provenance::Attested;

  bool operator==(const GoldEntry&) const = default;
};

enum class ErrorClass { Correct, OverStemming, UnderStemming, Other };

const char* to_string(ErrorClass c) noexcept;

// Strict compares stem and both affix fields; StemOnly ignores affixes.
enum class MatchPolicy { Strict, StemOnly };

// Exact non-negative fraction.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  // Decimal rendering, rounded half up.
  std::string to_fixed(unsigned decimals) const;
  bool operator==(const Rational& o) const noexcept { return num * o.den == o.num * den; }
};

struct EvalReport {
  std::size_t total_words = 0;
  std::size_t correct = 0;
  std::size_t wrong = 0;
  // Distinct word types among correctly stemmed words.
  std::size_t unique_correct = 0;
  // Words the stemmer returned unchanged (no rule fired).
  std::size_t pass_through = 0;
  std::size_t over_count = 0;
  std::size_t under_count = 0;
  std::size_t other_count = 0;
  std::size_t min_word_len = 0;
  std::size_t max_word_len = 0;
  std::vector<ErrorClass> classes;

  // correct / total_words * 100, reduced.
  Rational accuracy_percent() const;
};

// Correct when the fields selected by `policy` agree. Otherwise, comparing
// stems grapheme by grapheme: UnderStemming when the gold stem is a proper
// subsequence of the produced stem, OverStemming when the produced stem is
// a proper subsequence of the gold stem, Other for anything else.
// Throws Error{Alignment} when the words differ.
ErrorClass classify_error(const stemmer::StemResult& result, const GoldEntry& gold,
                          MatchPolicy policy = MatchPolicy::Strict);

// Throws Error{Alignment} (with index) on length or word mismatch and
// Error{EmptyInput} when there is nothing to score.
EvalReport evaluate(std::span<const stemmer::StemResult> results, std::span<const GoldEntry> gold,
                    MatchPolicy policy = MatchPolicy::Strict);

// Plain-text table: the test-data summary rows followed by accuracy and
// the error breakdown.
std::string summarize(const EvalReport& report);

// One `key<TAB>value` line per field.
std::string report_key_values(const EvalReport& report);

// Gold file: `word<TAB>expected_stem<TAB>expected_prefix<TAB>expected_suffix`,
// empty fields for absent affixes, trailing empty fields may be omitted.
// `#` comments; `#!provenance<TAB>attested|pattern-generalized` applies to
// the lines that follow it. Errors carry the line number.
std::vector<GoldEntry> parse_gold_tsv(std::string_view text);
std::string format_gold_tsv(std::span<const GoldEntry> gold);

// Stemmer output in `word<TAB>prefix<TAB>stem<TAB>suffix` form.
std::vector<stemmer::StemResult> parse_results_tsv(std::string_view text);
std::string format_results_tsv(std::span<const stemmer::StemResult> results);

}  // namespace urdustem::eval
