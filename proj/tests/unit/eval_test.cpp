#include "embedded_data.hpp"
#include "error.hpp"
#include "eval.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "unicode.hpp"

#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <string>
#include <vector>

using namespace urdustem::eval;
using urdustem::Error;
using urdustem::ErrorCode;
using urdustem::stemmer::StemResult;
namespace t = urdustem::testing;
namespace text = urdustem::text;

namespace {

StemResult produced(const std::string& word, const std::string& stem, std::optional<std::string> prefix = std::nullopt,
                    std::optional<std::string> suffix = std::nullopt) {
  StemResult r;
  r.word = word;
  r.stem = stem;
  r.prefix = std::move(prefix);
  r.suffix = std::move(suffix);
  if (r.prefix || r.suffix) r.applied.push_back(0);
  return r;
}

GoldEntry gold(const std::string& word, const std::string& stem, std::optional<std::string> prefix = std::nullopt,
               std::optional<std::string> suffix = std::nullopt) {
  return GoldEntry{word, stem, std::move(prefix), std::move(suffix)};
}

// `correct` of `total` aligned pairs right; the wrong ones are split across
// over-, under- and other-stemming as evenly as possible.
void synthesize(std::size_t total, std::size_t correct, std::vector<StemResult>& results,
                std::vector<GoldEntry>& golds) {
  results.clear();
  golds.clear();
  for (std::size_t i = 0; i < total; ++i) {
    const std::string stem = "کتاب" + std::to_string(i);
    const std::string word = stem + "وں";
    golds.push_back(gold(word, stem, std::nullopt, "وں"));
    if (i < correct) {
      results.push_back(produced(word, stem, std::nullopt, "وں"));
    } else if (i % 3 == 0) {
      results.push_back(produced(word, "تاب" + std::to_string(i), "ک", "وں"));  // over
    } else if (i % 3 == 1) {
      results.push_back(produced(word, word));  // under
    } else {
      results.push_back(produced(word, "قلم", std::nullopt, "وں"));  // other
    }
  }
}

std::string collapse_ws(const std::string& s) { return std::regex_replace(s, std::regex("[ \t]+"), " "); }

}  // namespace

TEST(Rational, RoundsHalfUp) {
  EXPECT_EQ((Rational{1730 * 100, 2000}).to_fixed(1), "86.5");
  EXPECT_EQ((Rational{200, 3}).to_fixed(1), "66.7");
  EXPECT_EQ((Rational{5, 100}).to_fixed(1), "0.1");
  EXPECT_EQ((Rational{4, 100}).to_fixed(1), "0.0");
  EXPECT_EQ((Rational{100, 1}).to_fixed(1), "100.0");
  EXPECT_EQ((Rational{7, 2}).to_fixed(0), "4");
  EXPECT_EQ((Rational{1, 3}).to_fixed(3), "0.333");
}

TEST(Evaluate, ReferenceAccuracyFigure) {
  std::vector<StemResult> r;
  std::vector<GoldEntry> g;
  synthesize(2000, 1730, r, g);
  const EvalReport rep = evaluate(r, g);
  EXPECT_EQ(rep.total_words, 2000u);
  EXPECT_EQ(rep.correct, 1730u);
  EXPECT_EQ(rep.wrong, 270u);
  EXPECT_EQ(rep.accuracy_percent().to_fixed(1), "86.5");
  EXPECT_EQ(rep.accuracy_percent(), (Rational{173, 2}));
  EXPECT_EQ(rep.over_count + rep.under_count + rep.other_count, rep.wrong);
  EXPECT_EQ(rep.over_count, 90u);
  EXPECT_EQ(rep.under_count, 90u);
  EXPECT_EQ(rep.other_count, 90u);
  const std::string table = collapse_ws(summarize(rep));
  EXPECT_NE(table.find("Total Words 2000\n"), std::string::npos);
  EXPECT_NE(table.find("Correct stemmed output 1730\n"), std::string::npos);
  EXPECT_NE(table.find("Wrong output 270\n"), std::string::npos);
  EXPECT_NE(table.find("Accuracy (%) 86.5\n"), std::string::npos);
}

TEST(Evaluate, ThreeOfFour) {
  std::vector<StemResult> r;
  std::vector<GoldEntry> g;
  synthesize(4, 3, r, g);
  EXPECT_EQ(evaluate(r, g).accuracy_percent().to_fixed(1), "75.0");
}

TEST(Evaluate, AllCorrectAnySize) {
  for (std::size_t n : {1u, 2u, 17u, 500u}) {
    std::vector<StemResult> r;
    std::vector<GoldEntry> g;
    synthesize(n, n, r, g);
    const EvalReport rep = evaluate(r, g);
    EXPECT_EQ(rep.wrong, 0u);
    EXPECT_EQ(rep.accuracy_percent().to_fixed(1), "100.0");
  }
}

TEST(Evaluate, SingleWordSummary) {
  const EvalReport rep = evaluate(std::vector{produced("قلم", "قلم")}, std::vector{gold("قلم", "قلم")});
  EXPECT_EQ(rep.pass_through, 1u);
  EXPECT_EQ(rep.unique_correct, 1u);
  EXPECT_EQ(rep.min_word_len, 3u);
  EXPECT_EQ(rep.max_word_len, 3u);
  const std::string table = collapse_ws(summarize(rep));
  EXPECT_NE(table.find("Total Words 1\n"), std::string::npos);
  EXPECT_NE(table.find("Accuracy (%) 100.0\n"), std::string::npos);
  EXPECT_EQ(summarize(rep), summarize(rep));
}

TEST(Evaluate, ReferenceTableWithShippedRules) {
  const auto rs = urdustem::rules::parse_rule_file(t::read_file(URDUSTEM_TEST_DATA "/reference.rules"));
  std::vector<StemResult> r;
  std::vector<GoldEntry> g;
  for (const auto& row : t::reference_rows()) {
    r.push_back(urdustem::stemmer::stem_word(row.word, rs));
    auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
    g.push_back(gold(row.word, row.stem, opt(row.prefix), opt(row.suffix)));
  }
  const EvalReport rep = evaluate(r, g);
  EXPECT_EQ(rep.correct, 8u);
  EXPECT_EQ(rep.over_count + rep.under_count + rep.other_count, 0u);
  EXPECT_EQ(rep.unique_correct, 8u);
  EXPECT_EQ(rep.min_word_len, 5u);  // فاصلے
  EXPECT_EQ(rep.max_word_len, 7u);  // بد نصیب
}

TEST(Evaluate, UniqueCountsDistinctCorrectTypes) {
  std::vector<StemResult> r = {produced("قلم", "قلم"), produced("قلم", "قلم"), produced("علاقوں", "علاقہ", {}, "وں")};
  std::vector<GoldEntry> g = {gold("قلم", "قلم"), gold("قلم", "قلم"), gold("علاقوں", "علاقہ", {}, "وں")};
  const EvalReport rep = evaluate(r, g);
  EXPECT_EQ(rep.correct, 3u);
  EXPECT_EQ(rep.unique_correct, 2u);
  EXPECT_EQ(rep.pass_through, 2u);
}

TEST(Evaluate, AlignmentAndEmptyErrors) {
  const std::vector<StemResult> r = {produced("قلم", "قلم"), produced("کتاب", "کتاب")};
  const std::vector<GoldEntry> g = {gold("قلم", "قلم"), gold("کتب", "کتب")};
  try {
    evaluate(r, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Alignment);
    EXPECT_EQ(e.index(), 1u);
  }
  try {
    evaluate(r, std::span(g).first(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Alignment);
  }
  try {
    evaluate({}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
  EXPECT_THROW(EvalReport{}.accuracy_percent(), Error);
}

TEST(Classify, TaxonomyExamples) {
  EXPECT_EQ(classify_error(produced("پیشگی", "پیشگ", {}, "ی"), gold("پیشگی", "پیش", {}, "گی")),
            ErrorClass::UnderStemming);
  EXPECT_EQ(classify_error(produced("بدمعاش", "ماش", "بدمع"), gold("بدمعاش", "بدمعاش")), ErrorClass::OverStemming);
  EXPECT_EQ(classify_error(produced("علاقوں", "علاق", {}, "وں"), gold("علاقوں", "علاقہ", {}, "وں")),
            ErrorClass::OverStemming);
  EXPECT_EQ(classify_error(produced("علاقوں", "علاقہ", {}, "وں"), gold("علاقوں", "علاقہ", {}, "وں")),
            ErrorClass::Correct);
  EXPECT_EQ(classify_error(produced("علاقوں", "علاقا", {}, "وں"), gold("علاقوں", "علاقہ", {}, "وں")),
            ErrorClass::Other);
}

TEST(Classify, AffixFieldsMatterUnderStrictPolicy) {
  const auto r = produced("بد نصیب", "نصیب", "بد");
  const auto g = gold("بد نصیب", "نصیب", "بد ");
  EXPECT_EQ(classify_error(r, g), ErrorClass::Other);
  EXPECT_EQ(classify_error(r, g, MatchPolicy::StemOnly), ErrorClass::Correct);
  // An empty gold affix field means "absent".
  EXPECT_EQ(classify_error(produced("قلم", "قلم"), gold("قلم", "قلم", "", "")), ErrorClass::Correct);
}

TEST(Classify, ComparesGraphemesNotBytes) {
  // ب is a byte-level prefix of بَ but not a grapheme subsequence of it.
  EXPECT_EQ(classify_error(produced("بَت", "ب", {}, "ت"), gold("بَت", "بَ", {}, "ت")), ErrorClass::Other);
}

TEST(Classify, WordMismatchIsAlignmentError) {
  try {
    classify_error(produced("قلم", "قلم"), gold("کتاب", "کتاب"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Alignment);
  }
}

TEST(Classify, ConsistentWithEvaluateOnRandomPairs) {
  std::mt19937 rng(11);
  std::bernoulli_distribution coin(0.5);
  std::vector<StemResult> r;
  std::vector<GoldEntry> g;
  for (int i = 0; i < 2000; ++i) {
    const std::string word = text::from_u32(t::random_string(rng, 2, 6, 5));
    auto pick = [&] { return text::from_u32(t::random_string(rng, 1, 4, 5)); };
    auto maybe = [&]() -> std::optional<std::string> {
      return coin(rng) ? std::optional<std::string>(text::from_u32(t::random_string(rng, 1, 1, 2))) : std::nullopt;
    };
    r.push_back(produced(word, pick(), maybe(), maybe()));
    g.push_back(gold(word, coin(rng) ? r.back().stem : pick(), maybe(), maybe()));
  }
  const EvalReport rep = evaluate(r, g);
  ASSERT_EQ(rep.classes.size(), r.size());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const ErrorClass c = classify_error(r[i], g[i]);
    ASSERT_EQ(c, rep.classes[i]);
    correct += c == ErrorClass::Correct;
  }
  EXPECT_EQ(correct, rep.correct);
  EXPECT_EQ(rep.correct + rep.wrong, rep.total_words);
  EXPECT_EQ(rep.over_count + rep.under_count + rep.other_count, rep.wrong);
  EXPECT_GT(rep.correct, 0u);
  EXPECT_GT(rep.wrong, 0u);
}

TEST(Report, KeyValueBlock) {
  std::vector<StemResult> r;
  std::vector<GoldEntry> g;
  synthesize(2000, 1730, r, g);
  const std::string kv = report_key_values(evaluate(r, g));
  EXPECT_NE(kv.find("total_words\t2000\n"), std::string::npos);
  EXPECT_NE(kv.find("accuracy_percent\t86.5\n"), std::string::npos);
  EXPECT_NE(kv.find("accuracy_exact\t173/2\n"), std::string::npos);
}

TEST(GoldTsv, ParseFormatRoundTrip) {
  const std::string src =
      "# gold\n"
      "علاقوں\tعلاقہ\t\tوں\n"
      "قلم\tقلم\n"
      "بد نصیب\tنصیب\tبد \n"
      "#!provenance\tpattern-generalized\n"
      "پڑھنا\tپڑھ\t\tنا\n";
  const auto g = parse_gold_tsv(src);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[0].expected_suffix.value_or(""), "وں");
  EXPECT_FALSE(g[0].expected_prefix.has_value());
  EXPECT_FALSE(g[1].expected_suffix.has_value());
  EXPECT_EQ(g[2].expected_prefix.value_or(""), "بد ");
  EXPECT_EQ(g[2].provenance, Provenance::Attested);
  EXPECT_EQ(g[3].provenance, Provenance::PatternGeneralized);
  EXPECT_EQ(parse_gold_tsv(format_gold_tsv(g)), g);
}

TEST(GoldTsv, ErrorsCarryLine) {
  auto line_of = [](std::string_view s) -> std::optional<std::size_t> {
    try {
      parse_gold_tsv(s);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::GoldSyntax);
      return e.line();
    }
    return std::nullopt;
  };
  EXPECT_EQ(line_of("قلم\tقلم\nعلاقوں\n"), 2u);
  EXPECT_EQ(line_of("قلم\tقلم\ta\tb\tc\n"), 1u);
  EXPECT_EQ(line_of("\tقلم\n"), 1u);
  EXPECT_EQ(line_of("قلم\t\n"), 1u);
  EXPECT_EQ(line_of("#!provenance\tguessed\n"), 1u);
  EXPECT_EQ(line_of("ok\tok\n\xFF\tx\n"), 2u);
}

TEST(ResultsTsv, RoundTrip) {
  const std::vector<StemResult> r = {produced("علاقوں", "علاقہ", {}, "وں"), produced("قلم", "قلم"),
                                     produced("نوجوان", "جوان", "نو")};
  const std::string tsv = format_results_tsv(r);
  EXPECT_EQ(tsv, "علاقوں\t\tعلاقہ\tوں\nقلم\t\tقلم\t\nنوجوان\tنو\tجوان\t\n");
  const auto back = parse_results_tsv(tsv);
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back[i].word, r[i].word);
    EXPECT_EQ(back[i].stem, r[i].stem);
    EXPECT_EQ(back[i].prefix, r[i].prefix);
    EXPECT_EQ(back[i].suffix, r[i].suffix);
  }
}
