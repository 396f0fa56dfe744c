#pragma once

#include "eval.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace urdustem::morphology {

enum class Case { Nominative, Oblique, Vocative };
enum class Number { Singular, Plural };
enum class Gender { Masculine, Feminine };

struct NounFeatures {
  Case grammatical_case = Case::Nominative;
  Number number = Number::Singular;
  Gender gender = Gender::Masculine;
};

// Only Group1Masculine has inflection rules; the other groups are named so
// that lexicons can mention them and get a clear "not specified" error.
enum class NounGroup { Group1Masculine, MasculineAan, FeminineI, FeminineAAanOn };

enum class TerminationClass { AlifHe, Ain };

const char* to_string(NounGroup group) noexcept;
// Accepts the names produced by to_string(NounGroup). Throws Error{Paradigm}.
NounGroup parse_noun_group(std::string_view name);

class ParadigmEntry {
public:
  // Derives the termination class from the final letter: ا or ہ gives
  // AlifHe, ع gives Ain. Group1Masculine lemmas ending in anything else are
  // rejected with Error{Paradigm}.
  explicit ParadigmEntry(std::string lemma, NounGroup group = NounGroup::Group1Masculine);

  const std::string& lemma() const noexcept { return lemma_; }
  NounGroup group() const noexcept { return group_; }
  TerminationClass termination_class() const noexcept { return termination_; }

private:
  std::string lemma_;
  NounGroup group_;
  TerminationClass termination_ = TerminationClass::AlifHe;
};

std::string inflect_noun(const ParadigmEntry& entry, const NounFeatures& features);

struct VerbForms {
  std::string infinitive;
  std::string direct_causative;
  std::string indirect_causative;
};

// root+نا, root+انا, root+وانا. Throws Error{InvalidArgument} on empty root.
VerbForms inflect_verb(std::string_view root);

struct AdjectiveForms {
  std::string masculine_oblique;
  std::string feminine;
};

// Final ا becomes ے (masculine non-direct) or ی (feminine).
AdjectiveForms inflect_adjective(std::string_view lemma);

// Feature order used when expanding a noun into gold entries.
inline constexpr std::array<std::pair<Number, Case>, 6> kNounGrid{{
    {Number::Singular, Case::Nominative},
    {Number::Singular, Case::Oblique},
    {Number::Singular, Case::Vocative},
    {Number::Plural, Case::Nominative},
    {Number::Plural, Case::Oblique},
    {Number::Plural, Case::Vocative},
}};

struct VerbRoot {
  std::string root;
};

struct Adjective {
  std::string lemma;
};

using LexiconItem = std::variant<ParadigmEntry, VerbRoot, Adjective>;

// Lexicon file: `noun<TAB>lemma[<TAB>group]`, `verb<TAB>root`,
// `adj<TAB>lemma`; `#` comments and blank lines ignored. Text is normalized
// (NFC, letter unification, diacritics stripped) before parsing. Errors
// carry the line number.
std::vector<LexiconItem> parse_lexicon(std::string_view text);

// Emits every inflected form as a gold entry, in lexicon order: 6 cells per
// noun (kNounGrid order), 3 per verb, 2 per adjective. Verbs other than the
// attested کر are marked pattern-generalized. Paradigm errors are rethrown
// with the index of the offending item.
std::vector<eval::GoldEntry> generate_gold(const std::vector<LexiconItem>& lexicon);

}  // namespace urdustem::morphology
