#include "stemmer.hpp"

#include "error.hpp"
#include "unicode.hpp"

#include <algorithm>

namespace urdustem::stemmer {

namespace {

using rules::AffixKind;
using rules::AffixRule;
using rules::RuleSet;

struct WorkState {
  std::string working;
  std::vector<std::size_t> bounds;
  std::uint32_t floor = 0;
  std::vector<std::string> prefixes;  // detachment order
  std::vector<std::string> suffixes;  // detachment order
  std::vector<std::size_t> applied;
};

// Number of graphemes before byte offset `cut`, or nullopt when `cut` is not
// a grapheme boundary.
std::optional<std::size_t> graphemes_before(const std::vector<std::size_t>& bounds, std::size_t cut) {
  const auto it = std::lower_bound(bounds.begin(), bounds.end(), cut);
  if (it == bounds.end() || *it != cut) return std::nullopt;
  return static_cast<std::size_t>(it - bounds.begin());
}

bool try_fire(WorkState& st, const RuleSet& rs, std::size_t index) {
  const AffixRule& rule = rs.rules()[index];
  const std::string& pat = rule.pattern();
  const std::string_view w = st.working;
  if (pat.size() >= w.size()) return false;

  const std::size_t total = st.bounds.size() - 1;
  std::size_t residual_graphemes = 0;
  std::size_t cut = 0;
  if (rule.kind() == AffixKind::Suffix) {
    if (!w.ends_with(pat)) return false;
    cut = w.size() - pat.size();
    const auto before = graphemes_before(st.bounds, cut);
    if (!before) return false;
    residual_graphemes = *before;
  } else {
    if (!w.starts_with(pat)) return false;
    cut = pat.size();
    const auto before = graphemes_before(st.bounds, cut);
    if (!before) return false;
    residual_graphemes = total - *before;
  }

  const std::uint32_t need = std::max(rs.effective_min_stem(rule), st.floor);
  if (residual_graphemes < need) return false;

  if (rule.kind() == AffixKind::Suffix) {
    st.working = std::string(w.substr(0, cut)) + rule.replacement();
    st.suffixes.push_back(pat);
  } else {
    st.working = rule.replacement() + std::string(w.substr(cut));
    st.prefixes.push_back(pat);
  }
  st.floor = need;
  st.applied.push_back(index);
  st.bounds = text::grapheme_boundaries(st.working);
  return true;
}

void run_passes(WorkState& st, const RuleSet& rs, AffixKind kind, std::uint32_t passes) {
  for (std::uint32_t pass = 0; pass < passes; ++pass) {
    bool fired = false;
    for (std::size_t i = 0; i < rs.rules().size() && !fired; ++i) {
      if (rs.rules()[i].kind() == kind) fired = try_fire(st, rs, i);
    }
    if (!fired) return;
  }
}

}  // namespace

void StemConfig::validate() const {
  if (max_suffix_passes > kMaxPasses || max_prefix_passes > kMaxPasses) {
    throw Error(ErrorCode::Config, "pass counts are limited to " + std::to_string(kMaxPasses));
  }
}

StemResult stem_word(std::string_view word, const RuleSet& rs, const StemConfig& cfg) {
  cfg.validate();
  if (word.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot stem an empty word");
  }
  text::validate_utf8(word);
  if (!text::is_nfc(word)) {
    throw Error(ErrorCode::NotNormalized, "word is not NFC; normalize the input text first");
  }

  StemResult result;
  result.word = std::string(word);
  if (rs.is_exception(word)) {
    result.stem = result.word;
    result.exception_hit = true;
    return result;
  }

  WorkState st;
  st.working = result.word;
  st.bounds = text::grapheme_boundaries(st.working);
  if (cfg.order == PassOrder::SuffixFirst) {
    run_passes(st, rs, AffixKind::Suffix, cfg.max_suffix_passes);
    run_passes(st, rs, AffixKind::Prefix, cfg.max_prefix_passes);
  } else {
    run_passes(st, rs, AffixKind::Prefix, cfg.max_prefix_passes);
    run_passes(st, rs, AffixKind::Suffix, cfg.max_suffix_passes);
  }

  result.stem = std::move(st.working);
  result.applied = std::move(st.applied);
  if (!st.prefixes.empty()) {
    std::string p;
    for (const auto& part : st.prefixes) p += part;
    result.prefix = std::move(p);
  }
  if (!st.suffixes.empty()) {
    std::string s;
    for (auto it = st.suffixes.rbegin(); it != st.suffixes.rend(); ++it) s += *it;
    result.suffix = std::move(s);
  }
  return result;
}

std::vector<StemResult> stem_batch(std::span<const std::string> words, const RuleSet& rs, const StemConfig& cfg) {
  cfg.validate();
  std::vector<StemResult> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    try {
      out.push_back(stem_word(words[i], rs, cfg));
    } catch (const Error& e) {
      Error wrapped(e.code(), "word " + std::to_string(i) + ": " + e.what());
      wrapped.at_index(i);
      throw wrapped;
    }
  }
  return out;
}

}  // namespace urdustem::stemmer
