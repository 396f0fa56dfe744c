#pragma once

#include "rules.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace urdustem::stemmer {

enum class PassOrder { SuffixFirst, PrefixFirst };

struct StemConfig {
  static constexpr std::uint32_t kMaxPasses = 4;

  std::uint32_t max_suffix_passes = 1;
  std::uint32_t max_prefix_passes = 1;
  PassOrder order = PassOrder::SuffixFirst;

  // Throws Error{Config} when a pass count exceeds kMaxPasses.
  void validate() const;

  bool operator==(const StemConfig&) const = default;
};

// Word/Prefix/Stem/Suffix decomposition of one word. `applied` holds
// indices into RuleSet::rules() in the order the rules fired.
struct StemResult {
  std::string word;
  std::optional<std::string> prefix;
  std::string stem;
  std::optional<std::string> suffix;
  std::vector<std::size_t> applied;
  bool exception_hit = false;

  bool operator==(const StemResult&) const = default;
};

// Within each enabled pass the first rule (in RuleSet order) that matches
// the word edge on a grapheme boundary and leaves a residual of at least its
// effective min_stem fires. A rule's residual must also satisfy the
// min_stem of every rule that fired before it. Words that match nothing
// come back unchanged.
//
// Throws Error{InvalidArgument} for an empty word, Error{Encoding} for bad
// UTF-8 and Error{NotNormalized} for non-NFC input.
StemResult stem_word(std::string_view word, const rules::RuleSet& rs, const StemConfig& cfg = {});

// Elementwise stem_word, order preserved. The first failing word's error is
// rethrown with its index attached.
std::vector<StemResult> stem_batch(std::span<const std::string> words, const rules::RuleSet& rs,
                                   const StemConfig& cfg = {});

}  // namespace urdustem::stemmer
