#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace urdustem::rules {

enum class AffixKind { Prefix, Suffix };

const char* to_string(AffixKind kind) noexcept;

inline constexpr std::uint32_t kDefaultMinStem = 2;

using ExceptionSet = std::set<std::string, std::less<>>;

// One prefix or suffix pattern. The matched affix is removed and
// `replacement` is put in its place; an empty replacement is pure stripping.
// min_stem, when set, is the minimum grapheme count of the residual stem
// (before the replacement is attached); when unset the owning RuleSet's
// default applies.
class AffixRule {
public:
  // Throws Error{RuleSyntax} when the pattern is empty, the replacement is
  // longer than the pattern or identical to it, or min_stem is zero.
  AffixRule(AffixKind kind, std::string pattern, std::string replacement = {},
            std::optional<std::uint32_t> min_stem = std::nullopt);

  AffixKind kind() const noexcept { return kind_; }
  const std::string& pattern() const noexcept { return pattern_; }
  const std::string& replacement() const noexcept { return replacement_; }
  std::optional<std::uint32_t> min_stem() const noexcept { return min_stem_; }
  std::size_t pattern_graphemes() const noexcept { return pattern_graphemes_; }

  bool operator==(const AffixRule& other) const noexcept {
    return kind_ == other.kind_ && pattern_ == other.pattern_ && replacement_ == other.replacement_ &&
           min_stem_ == other.min_stem_;
  }

private:
  AffixKind kind_;
  std::string pattern_;
  std::string replacement_;
  std::optional<std::uint32_t> min_stem_;
  std::size_t pattern_graphemes_;
};

// Longest pattern first (grapheme count), stable on ties.
std::vector<AffixRule> order_rules(std::vector<AffixRule> rules);

// Immutable, ordered rule collection plus exception words.
class RuleSet {
public:
  RuleSet() = default;

  // Orders the rules. Throws Error{DuplicateRule} on a repeated
  // (kind, pattern), Error{RuleSyntax} on an empty exception or a zero
  // default_min_stem.
  RuleSet(std::vector<AffixRule> rules, ExceptionSet exceptions = {},
          std::uint32_t default_min_stem = kDefaultMinStem);

  const std::vector<AffixRule>& rules() const noexcept { return rules_; }
  const ExceptionSet& exceptions() const noexcept { return exceptions_; }
  std::uint32_t default_min_stem() const noexcept { return default_min_stem_; }

  std::uint32_t effective_min_stem(const AffixRule& rule) const noexcept {
    return rule.min_stem().value_or(default_min_stem_);
  }

  bool is_exception(std::string_view word) const;
  std::size_t count(AffixKind kind) const noexcept;
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }

  bool operator==(const RuleSet& other) const = default;

private:
  std::vector<AffixRule> rules_;
  ExceptionSet exceptions_;
  std::uint32_t default_min_stem_ = kDefaultMinStem;
};

// Rule file: UTF-8, NFC-normalized on read, one rule per line with
// tab-separated fields `kind pattern [replacement] [min_stem]`, kind P or S.
// `#` starts a comment; `#!exception<TAB>word` and `#!min_stem<TAB>N` are
// directives. Errors carry the 1-based line number (both lines for
// duplicates).
RuleSet parse_rule_file(std::string_view text);

// Canonical text form; parse_rule_file(serialize_rule_set(rs)) == rs.
std::string serialize_rule_set(const RuleSet& rs);

}  // namespace urdustem::rules
