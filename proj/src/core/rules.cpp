#include "rules.hpp"

#include "error.hpp"
#include "unicode.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>

namespace urdustem::rules {

namespace {

constexpr std::string_view kExceptionDirective = "#!exception";
constexpr std::string_view kMinStemDirective = "#!min_stem";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

Error line_error(std::size_t line, const std::string& what) {
  Error e(ErrorCode::RuleSyntax, "line " + std::to_string(line) + ": " + what);
  e.at_line(line);
  return e;
}

std::uint32_t parse_positive(std::string_view field, std::size_t line, std::string_view what) {
  std::uint32_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw line_error(line, std::string(what) + " must be a positive integer, got '" + std::string(field) + "'");
  }
  if (value == 0) {
    throw line_error(line, std::string(what) + " must be positive");
  }
  return value;
}

}  // namespace

const char* to_string(AffixKind kind) noexcept {
  return kind == AffixKind::Prefix ? "P" : "S";
}

AffixRule::AffixRule(AffixKind kind, std::string pattern, std::string replacement,
                     std::optional<std::uint32_t> min_stem)
    : kind_(kind), pattern_(std::move(pattern)), replacement_(std::move(replacement)), min_stem_(min_stem) {
  if (pattern_.empty()) {
    throw Error(ErrorCode::RuleSyntax, "empty affix pattern");
  }
  pattern_graphemes_ = text::grapheme_count(pattern_);
  if (text::grapheme_count(replacement_) > pattern_graphemes_) {
    throw Error(ErrorCode::RuleSyntax,
                "replacement '" + replacement_ + "' is longer than pattern '" + pattern_ + "'");
  }
  if (replacement_ == pattern_) {
    throw Error(ErrorCode::RuleSyntax, "replacement equals pattern '" + pattern_ + "'");
  }
  if (min_stem_ && *min_stem_ == 0) {
    throw Error(ErrorCode::RuleSyntax, "min_stem must be positive");
  }
}

std::vector<AffixRule> order_rules(std::vector<AffixRule> rules) {
  std::stable_sort(rules.begin(), rules.end(), [](const AffixRule& a, const AffixRule& b) {
    return a.pattern_graphemes() > b.pattern_graphemes();
  });
  return rules;
}

RuleSet::RuleSet(std::vector<AffixRule> rules, ExceptionSet exceptions, std::uint32_t default_min_stem)
    : rules_(order_rules(std::move(rules))), exceptions_(std::move(exceptions)), default_min_stem_(default_min_stem) {
  if (default_min_stem_ == 0) {
    throw Error(ErrorCode::RuleSyntax, "default min_stem must be positive");
  }
  if (exceptions_.count(std::string_view{}) != 0) {
    throw Error(ErrorCode::RuleSyntax, "empty exception word");
  }
  std::set<std::pair<AffixKind, std::string_view>> seen;
  for (const auto& r : rules_) {
    if (!seen.emplace(r.kind(), r.pattern()).second) {
      throw Error(ErrorCode::DuplicateRule,
                  std::string("duplicate rule ") + to_string(r.kind()) + " '" + r.pattern() + "'");
    }
  }
}

bool RuleSet::is_exception(std::string_view word) const {
  return exceptions_.find(word) != exceptions_.end();
}

std::size_t RuleSet::count(AffixKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rules_.begin(), rules_.end(), [kind](const AffixRule& r) { return r.kind() == kind; }));
}

RuleSet parse_rule_file(std::string_view raw) {
  text::validate_utf8(raw);
  const std::string text = text::to_nfc(raw);

  std::vector<AffixRule> rules;
  ExceptionSet exceptions;
  std::optional<std::uint32_t> default_min_stem;
  std::map<std::pair<AffixKind, std::string>, std::size_t> first_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string_view line(text.data() + pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || is_blank(line)) continue;

    if (line.front() == '#') {
      if (line.substr(0, 2) != "#!") continue;
      const auto fields = split_tabs(line);
      if (fields[0] == kExceptionDirective) {
        if (fields.size() != 2 || fields[1].empty()) {
          throw line_error(line_no, "exception directive needs exactly one non-empty word");
        }
        exceptions.emplace(fields[1]);
      } else if (fields[0] == kMinStemDirective) {
        if (fields.size() != 2) {
          throw line_error(line_no, "min_stem directive needs exactly one value");
        }
        if (default_min_stem) {
          throw line_error(line_no, "min_stem directive given twice");
        }
        default_min_stem = parse_positive(fields[1], line_no, "min_stem");
      } else {
        throw line_error(line_no, "unknown directive '" + std::string(fields[0]) + "'");
      }
      continue;
    }

    const auto fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 4) {
      throw line_error(line_no, "expected 2 to 4 tab-separated fields, got " + std::to_string(fields.size()));
    }
    AffixKind kind;
    if (fields[0] == "P") {
      kind = AffixKind::Prefix;
    } else if (fields[0] == "S") {
      kind = AffixKind::Suffix;
    } else {
      throw line_error(line_no, "kind must be P or S, got '" + std::string(fields[0]) + "'");
    }
    std::string pattern(fields[1]);
    std::string replacement = fields.size() >= 3 ? std::string(fields[2]) : std::string();
    std::optional<std::uint32_t> min_stem;
    if (fields.size() == 4) min_stem = parse_positive(fields[3], line_no, "min_stem");

    auto key = std::make_pair(kind, pattern);
    if (const auto it = first_line.find(key); it != first_line.end()) {
      Error e(ErrorCode::DuplicateRule, "line " + std::to_string(line_no) + ": duplicate rule " + to_string(kind) +
                                            " '" + pattern + "' (first defined on line " +
                                            std::to_string(it->second) + ")");
      e.at_line(line_no).with_other_line(it->second);
      throw e;
    }
    first_line.emplace(std::move(key), line_no);

    try {
      rules.emplace_back(kind, std::move(pattern), std::move(replacement), min_stem);
    } catch (const Error& e) {
      throw line_error(line_no, e.what());
    }
  }

  return RuleSet(std::move(rules), std::move(exceptions), default_min_stem.value_or(kDefaultMinStem));
}

std::string serialize_rule_set(const RuleSet& rs) {
  std::string out;
  out += "# urdustem affix rules\n";
  out += "# suffixes: " + std::to_string(rs.count(AffixKind::Suffix)) + "\n";
  out += "# prefixes: " + std::to_string(rs.count(AffixKind::Prefix)) + "\n";
  out += std::string(kMinStemDirective) + "\t" + std::to_string(rs.default_min_stem()) + "\n";
  for (const auto& word : rs.exceptions()) {
    out += std::string(kExceptionDirective) + "\t" + word + "\n";
  }
  for (const auto& r : rs.rules()) {
    out += to_string(r.kind());
    out += '\t';
    out += r.pattern();
    if (!r.replacement().empty() || r.min_stem()) {
      out += '\t';
      out += r.replacement();
    }
    if (r.min_stem()) {
      out += '\t';
      out += std::to_string(*r.min_stem());
    }
    out += '\n';
  }
  return out;
}

}  // namespace urdustem::rules
