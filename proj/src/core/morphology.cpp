#include "morphology.hpp"

#include "corpus.hpp"
#include "error.hpp"
#include "unicode.hpp"

#include <algorithm>

namespace urdustem::morphology {

namespace {

constexpr std::string_view kAlif = "ا";
constexpr std::string_view kHeGoal = "ہ";
constexpr std::string_view kAin = "ع";
constexpr std::string_view kBariYe = "ے";
constexpr std::string_view kChotiYe = "ی";
constexpr std::string_view kWaw = "و";
constexpr std::string_view kWawNoonGhunna = "وں";

constexpr std::string_view kInfinitive = "نا";
constexpr std::string_view kDirectCausative = "انا";
constexpr std::string_view kIndirectCausative = "وانا";
constexpr std::string_view kAttestedVerbRoot = "کر";

std::string_view last_grapheme(std::string_view s) {
  const auto g = text::graphemes(s);
  return g.empty() ? std::string_view{} : g.back();
}

std::string_view without_last_grapheme(std::string_view s) {
  return s.substr(0, s.size() - last_grapheme(s).size());
}

Error not_specified(const std::string& what) {
  return Error(ErrorCode::Paradigm, "paradigm not specified by source: " + what);
}

// Ending for a group-1 masculine cell; empty for the citation form.
std::string_view group1_ending(const NounFeatures& f) {
  if (f.number == Number::Singular && f.grammatical_case == Case::Nominative) return {};
  if (f.number == Number::Plural && f.grammatical_case == Case::Oblique) return kWawNoonGhunna;
  if (f.number == Number::Plural && f.grammatical_case == Case::Vocative) return kWaw;
  return kBariYe;
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

Error lexicon_error(std::size_t line, const std::string& what) {
  Error e(ErrorCode::LexiconSyntax, "lexicon line " + std::to_string(line) + ": " + what);
  e.at_line(line);
  return e;
}

std::string describe(const LexiconItem& item) {
  if (const auto* n = std::get_if<ParadigmEntry>(&item)) return "noun '" + n->lemma() + "'";
  if (const auto* v = std::get_if<VerbRoot>(&item)) return "verb '" + v->root + "'";
  return "adjective '" + std::get<Adjective>(item).lemma + "'";
}

}  // namespace

const char* to_string(NounGroup group) noexcept {
  switch (group) {
    case NounGroup::Group1Masculine: return "group1-masc-a/he/ain";
    case NounGroup::MasculineAan: return "masc-aan";
    case NounGroup::FeminineI: return "fem-i";
    case NounGroup::FeminineAAanOn: return "fem-a/aan/on";
  }
  return "unknown";
}

NounGroup parse_noun_group(std::string_view name) {
  for (auto g : {NounGroup::Group1Masculine, NounGroup::MasculineAan, NounGroup::FeminineI,
                 NounGroup::FeminineAAanOn}) {
    if (name == to_string(g)) return g;
  }
  throw Error(ErrorCode::Paradigm, "unknown noun group '" + std::string(name) + "'");
}

ParadigmEntry::ParadigmEntry(std::string lemma, NounGroup group) : lemma_(std::move(lemma)), group_(group) {
  if (lemma_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty noun lemma");
  }
  if (group_ != NounGroup::Group1Masculine) return;
  const auto last = last_grapheme(lemma_);
  if (last == kAlif || last == kHeGoal) {
    termination_ = TerminationClass::AlifHe;
  } else if (last == kAin) {
    termination_ = TerminationClass::Ain;
  } else {
    throw Error(ErrorCode::Paradigm, "group-1 masculine lemma '" + lemma_ + "' must end in ا, ہ or ع");
  }
}

std::string inflect_noun(const ParadigmEntry& entry, const NounFeatures& features) {
  if (entry.group() != NounGroup::Group1Masculine) {
    throw not_specified(std::string("noun group ") + to_string(entry.group()) + " ('" + entry.lemma() + "')");
  }
  if (features.gender != Gender::Masculine) {
    throw not_specified("feminine forms of group-1 noun '" + entry.lemma() + "'");
  }
  const auto ending = group1_ending(features);
  if (ending.empty()) return entry.lemma();
  if (entry.termination_class() == TerminationClass::Ain) return entry.lemma() + std::string(ending);
  return std::string(without_last_grapheme(entry.lemma())) + std::string(ending);
}

VerbForms inflect_verb(std::string_view root) {
  if (root.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty verb root");
  }
  const std::string r(root);
  return VerbForms{r + std::string(kInfinitive), r + std::string(kDirectCausative),
                   r + std::string(kIndirectCausative)};
}

AdjectiveForms inflect_adjective(std::string_view lemma) {
  if (last_grapheme(lemma) != kAlif) {
    throw not_specified("adjective '" + std::string(lemma) + "' does not end in ا");
  }
  const std::string base(without_last_grapheme(lemma));
  return AdjectiveForms{base + std::string(kBariYe), base + std::string(kChotiYe)};
}

std::vector<LexiconItem> parse_lexicon(std::string_view raw) {
  const std::string normalized = corpus::normalize(raw, true);
  const std::string_view text = normalized;
  std::vector<LexiconItem> items;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#' ||
        std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; })) {
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() < 2 || fields[1].empty()) {
      throw lexicon_error(line_no, "expected `kind<TAB>lemma`");
    }
    const std::string lemma(fields[1]);
    try {
      if (fields[0] == "noun") {
        if (fields.size() > 3) throw lexicon_error(line_no, "noun takes a lemma and an optional group");
        const auto group = fields.size() == 3 ? parse_noun_group(fields[2]) : NounGroup::Group1Masculine;
        items.emplace_back(ParadigmEntry(lemma, group));
      } else if (fields[0] == "verb" || fields[0] == "adj") {
        if (fields.size() != 2) throw lexicon_error(line_no, std::string(fields[0]) + " takes exactly one form");
        if (fields[0] == "verb") {
          items.emplace_back(VerbRoot{lemma});
        } else {
          items.emplace_back(Adjective{lemma});
        }
      } else {
        throw lexicon_error(line_no, "unknown entry kind '" + std::string(fields[0]) + "'");
      }
    } catch (const Error& e) {
      if (e.line()) throw;
      Error wrapped(e.code(), "lexicon line " + std::to_string(line_no) + ": " + e.what());
      wrapped.at_line(line_no);
      throw wrapped;
    }
  }
  return items;
}

std::vector<eval::GoldEntry> generate_gold(const std::vector<LexiconItem>& lexicon) {
  std::vector<eval::GoldEntry> out;
  for (std::size_t i = 0; i < lexicon.size(); ++i) {
    const auto& item = lexicon[i];
    try {
      if (const auto* noun = std::get_if<ParadigmEntry>(&item)) {
        for (const auto& [number, grammatical_case] : kNounGrid) {
          const NounFeatures f{grammatical_case, number, Gender::Masculine};
          const std::string surface = inflect_noun(*noun, f);
          const auto ending = group1_ending(f);
          out.push_back(eval::GoldEntry{surface, noun->lemma(), std::nullopt,
                                        ending.empty() ? std::nullopt : std::optional<std::string>(ending)});
        }
      } else if (const auto* verb = std::get_if<VerbRoot>(&item)) {
        const VerbForms forms = inflect_verb(verb->root);
        const auto provenance =
            verb->root == kAttestedVerbRoot ? eval::Provenance::Attested : eval::Provenance::PatternGeneralized;
        out.push_back(eval::GoldEntry{forms.infinitive, verb->root, std::nullopt, std::string(kInfinitive), provenance});
        out.push_back(
            eval::GoldEntry{forms.direct_causative, verb->root, std::nullopt, std::string(kDirectCausative), provenance});
        out.push_back(eval::GoldEntry{forms.indirect_causative, verb->root, std::nullopt,
                                      std::string(kIndirectCausative), provenance});
      } else {
        const auto& adj = std::get<Adjective>(item);
        const AdjectiveForms forms = inflect_adjective(adj.lemma);
        out.push_back(eval::GoldEntry{forms.masculine_oblique, adj.lemma, std::nullopt, std::string(kBariYe)});
        out.push_back(eval::GoldEntry{forms.feminine, adj.lemma, std::nullopt, std::string(kChotiYe)});
      }
    } catch (const Error& e) {
      Error wrapped(e.code(), "lexicon entry " + std::to_string(i) + " (" + describe(item) + "): " + e.what());
      wrapped.at_index(i);
      throw wrapped;
    }
  }
  return out;
}

}  // namespace urdustem::morphology
