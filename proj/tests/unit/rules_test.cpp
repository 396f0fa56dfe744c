#include "embedded_data.hpp"
#include "error.hpp"
#include "rules.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "unicode.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

using namespace urdustem::rules;
using urdustem::Error;
using urdustem::ErrorCode;
namespace t = urdustem::testing;

namespace {

std::vector<std::string> patterns(const RuleSet& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs.rules()) out.push_back(r.pattern());
  return out;
}

Error parse_error(std::string_view text) {
  try {
    parse_rule_file(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return Error(ErrorCode::InvalidArgument, "none");
}

}  // namespace

TEST(RuleFile, SevenRuleExampleOrdersLongestFirst) {
  const RuleSet rs = parse_rule_file("S\tوں\nS\tے\nS\tات\nS\tیاں\nP\tنو\nP\tلا\nP\tبد\n");
  EXPECT_EQ(rs.size(), 7u);
  EXPECT_EQ(rs.count(AffixKind::Suffix), 4u);
  EXPECT_EQ(rs.count(AffixKind::Prefix), 3u);
  // Ties keep file order.
  const std::vector<std::string> expected = {"یاں", "وں", "ات", "نو", "لا", "بد", "ے"};
  EXPECT_EQ(patterns(rs), expected);
}

TEST(RuleFile, EmptyFileIsEmptyRuleSet) {
  const RuleSet rs = parse_rule_file("");
  EXPECT_TRUE(rs.empty());
  EXPECT_TRUE(rs.exceptions().empty());
  EXPECT_EQ(rs.default_min_stem(), kDefaultMinStem);
  EXPECT_TRUE(parse_rule_file("# only a comment\n\n").empty());
}

TEST(RuleFile, RecodingRuleKeepsReplacement) {
  const RuleSet rs = parse_rule_file("S\tوں\tہ\n");
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs.rules()[0].pattern(), "وں");
  EXPECT_EQ(rs.rules()[0].replacement(), "ہ");
  EXPECT_FALSE(rs.rules()[0].min_stem().has_value());
}

TEST(RuleFile, ShippedDefaultMatchesHandSortedOrder) {
  const RuleSet rs = parse_rule_file(urdustem::data::kDefaultRules);
  const std::vector<std::string> expected = {
      "انیں", "نال", "انی", "یاں", "یوں", "ناک", "بد ", "یں", "ین", "ات", "وں",
      "تا",   "بد",  "نو",  "گے",  "لا",  "ی",   "و",   "ے",  "ا",  "ں",
  };
  EXPECT_EQ(patterns(rs), expected);
  EXPECT_EQ(rs.count(AffixKind::Suffix), 17u);
  EXPECT_EQ(rs.count(AffixKind::Prefix), 4u);
}

TEST(RuleFile, OrderIsNonIncreasingInGraphemes) {
  const RuleSet rs = parse_rule_file(urdustem::data::kDefaultRules);
  for (std::size_t i = 1; i < rs.size(); ++i) {
    EXPECT_GE(rs.rules()[i - 1].pattern_graphemes(), rs.rules()[i].pattern_graphemes()) << i;
  }
}

TEST(RuleFile, DirectivesAndExplicitMinStem) {
  const RuleSet rs = parse_rule_file("#!min_stem\t3\n#!exception\tبدمعاش\nS\tوں\t\t4\nS\tات\n");
  EXPECT_EQ(rs.default_min_stem(), 3u);
  EXPECT_TRUE(rs.is_exception("بدمعاش"));
  EXPECT_FALSE(rs.is_exception("معاش"));
  EXPECT_EQ(rs.effective_min_stem(rs.rules()[0]), 4u);
  EXPECT_EQ(rs.effective_min_stem(rs.rules()[1]), 3u);
}

TEST(RuleFile, InputIsNfcNormalizedAndCrlfTolerated) {
  const RuleSet rs = parse_rule_file("P\t\xD8\xA7\xD9\x93\r\n");  // alif + combining madda
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs.rules()[0].pattern(), "آ");
}

TEST(RuleFile, WrongFieldCountNamesLine) {
  const Error e = parse_error("S\tوں\nS\n");
  EXPECT_EQ(e.code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(parse_error("S\ta\tb\t2\textra\n").line(), 1u);
}

TEST(RuleFile, EmptyPatternRejected) {
  const Error e = parse_error("# c\nS\t\n");
  EXPECT_EQ(e.code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(e.line(), 2u);
}

TEST(RuleFile, ReplacementLongerThanPatternRejected) {
  const Error e = parse_error("S\tے\tہا\n");
  EXPECT_EQ(e.code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(e.line(), 1u);
}

TEST(RuleFile, ReplacementEqualToPatternRejected) {
  EXPECT_EQ(parse_error("S\tوں\tوں\n").code(), ErrorCode::RuleSyntax);
}

TEST(RuleFile, BadMinStemRejected) {
  EXPECT_EQ(parse_error("S\tوں\t\t0\n").code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(parse_error("S\tوں\t\t-1\n").code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(parse_error("S\tوں\t\tx\n").code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(parse_error("#!min_stem\t0\n").code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(parse_error("#!min_stem\t2\n#!min_stem\t3\n").line(), 2u);
}

TEST(RuleFile, UnknownKindAndDirectiveRejected) {
  EXPECT_EQ(parse_error("X\tوں\n").code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(parse_error("#!infix\tوں\n").code(), ErrorCode::RuleSyntax);
  EXPECT_EQ(parse_error("#!exception\t\n").code(), ErrorCode::RuleSyntax);
}

TEST(RuleFile, DuplicateNamesBothLines) {
  const Error e = parse_error("S\tوں\n# gap\nP\tوں\nS\tوں\tہ\n");
  EXPECT_EQ(e.code(), ErrorCode::DuplicateRule);
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.other_line(), 1u);
  EXPECT_NE(std::string(e.what()).find('1'), std::string::npos);
  EXPECT_NE(std::string(e.what()).find('4'), std::string::npos);
}

TEST(RuleFile, InvalidUtf8Rejected) {
  EXPECT_EQ(parse_error("S\t\xC3\n").code(), ErrorCode::Encoding);
}

TEST(RuleSetCtor, DuplicateRejected) {
  std::vector<AffixRule> rules{AffixRule(AffixKind::Suffix, "ے"), AffixRule(AffixKind::Suffix, "ے", "ہ")};
  try {
    RuleSet rs(rules);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateRule);
  }
  // Same pattern, different kind is fine.
  RuleSet ok({AffixRule(AffixKind::Suffix, "لا"), AffixRule(AffixKind::Prefix, "لا")});
  EXPECT_EQ(ok.size(), 2u);
}

TEST(OrderRules, StableOnTies) {
  auto ordered = order_rules({AffixRule(AffixKind::Suffix, "ا"), AffixRule(AffixKind::Suffix, "وں"),
                              AffixRule(AffixKind::Suffix, "ی"), AffixRule(AffixKind::Suffix, "ات")});
  ASSERT_EQ(ordered.size(), 4u);
  EXPECT_EQ(ordered[0].pattern(), "وں");
  EXPECT_EQ(ordered[1].pattern(), "ات");
  EXPECT_EQ(ordered[2].pattern(), "ا");
  EXPECT_EQ(ordered[3].pattern(), "ی");
}

TEST(OrderRules, CountsGraphemesNotBytes) {
  // "بَ" is two code points and one grapheme; "ab" is two graphemes.
  auto ordered = order_rules({AffixRule(AffixKind::Suffix, "بَ"), AffixRule(AffixKind::Suffix, "ab")});
  EXPECT_EQ(ordered[0].pattern(), "ab");
  EXPECT_EQ(ordered[1].pattern_graphemes(), 1u);
}

TEST(Serialize, HeaderCountsMatchBody) {
  const RuleSet rs = parse_rule_file(urdustem::data::kDefaultRules);
  const std::string text = serialize_rule_set(rs);
  EXPECT_NE(text.find("# suffixes: 17\n"), std::string::npos);
  EXPECT_NE(text.find("# prefixes: 4\n"), std::string::npos);
}

TEST(Serialize, EmptyRuleSetIsHeaderOnly) {
  const std::string text = serialize_rule_set(RuleSet{});
  EXPECT_EQ(text, "# urdustem affix rules\n# suffixes: 0\n# prefixes: 0\n#!min_stem\t2\n");
  EXPECT_EQ(parse_rule_file(text), RuleSet{});
}

TEST(Serialize, ShippedFilesAreCanonical) {
  for (auto text : {urdustem::data::kDefaultRules, urdustem::data::kCompanionAlifRules,
                    urdustem::data::kCompanionHeRules}) {
    EXPECT_EQ(serialize_rule_set(parse_rule_file(text)), text);
  }
  const std::string reference = t::read_file(URDUSTEM_TEST_DATA "/reference.rules");
  EXPECT_EQ(serialize_rule_set(parse_rule_file(reference)), reference);
}

TEST(Serialize, EmbeddedDataMatchesDataDirectory) {
  EXPECT_EQ(t::read_file(URDUSTEM_SHIPPED_DATA "/default.rules"), urdustem::data::kDefaultRules);
  EXPECT_EQ(t::read_file(URDUSTEM_SHIPPED_DATA "/letter_map.tsv"), urdustem::data::kLetterMap);
}

TEST(Serialize, RoundTripPropertyOverRandomRuleSets) {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> count(0, 25);
  std::uniform_int_distribution<std::uint32_t> dflt(1, 4);
  std::bernoulli_distribution with_exception(0.3);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<AffixRule> rules;
    for (const auto& r : t::random_rules(rng, static_cast<std::size_t>(count(rng)), 12)) {
      rules.emplace_back(r.suffix ? AffixKind::Suffix : AffixKind::Prefix, urdustem::text::from_u32(r.pattern),
                         urdustem::text::from_u32(r.replacement), r.min_stem);
    }
    ExceptionSet exceptions;
    if (with_exception(rng)) exceptions.insert(urdustem::text::from_u32(t::random_string(rng, 2, 6, 12)));
    const RuleSet rs(rules, exceptions, dflt(rng));
    const std::string once = serialize_rule_set(rs);
    const RuleSet back = parse_rule_file(once);
    ASSERT_EQ(back, rs) << once;
    ASSERT_EQ(serialize_rule_set(back), once);
  }
}
