#include "corpus.hpp"

#include "embedded_data.hpp"
#include "error.hpp"
#include "unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/uscript.h>

#include <charconv>
#include <optional>
#include <unordered_map>

namespace urdustem::corpus {

namespace {

constexpr char32_t kZwj = 0x200D;

struct LetterMapping {
  std::optional<char32_t> to;
  bool skip_before_zwj = false;
};

char32_t parse_code_point(std::string_view field) {
  if (field.size() < 3 || field.substr(0, 2) != "U+") {
    throw std::runtime_error("letter map: bad code point '" + std::string(field) + "'");
  }
  unsigned value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data() + 2, end, value, 16);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("letter map: bad code point '" + std::string(field) + "'");
  }
  return static_cast<char32_t>(value);
}

std::unordered_map<char32_t, LetterMapping> load_letter_map(std::string_view data) {
  std::unordered_map<char32_t, LetterMapping> map;
  std::size_t pos = 0;
  while (pos < data.size()) {
    auto nl = data.find('\n', pos);
    if (nl == std::string_view::npos) nl = data.size();
    const std::string_view line = data.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string_view::npos; start = tab + 1) {
      fields.push_back(line.substr(start, tab - start));
    }
    fields.push_back(line.substr(start));
    if (fields.size() < 3) throw std::runtime_error("letter map: short line '" + std::string(line) + "'");

    LetterMapping m;
    if (fields[1] != "-") m.to = parse_code_point(fields[1]);
    if (fields[2] == "not-before-zwj") {
      m.skip_before_zwj = true;
    } else if (fields[2] != "any") {
      throw std::runtime_error("letter map: unknown context '" + std::string(fields[2]) + "'");
    }
    map.emplace(parse_code_point(fields[0]), m);
  }
  return map;
}

const std::unordered_map<char32_t, LetterMapping>& letter_map() {
  static const auto map = load_letter_map(data::kLetterMap);
  return map;
}

enum class CharClass { Space, Word, Number, Punct, Other };

CharClass classify(char32_t cp) {
  const auto c = static_cast<UChar32>(cp);
  if (u_isUWhiteSpace(c)) return CharClass::Space;
  const auto mask = U_GET_GC_MASK(c);
  if (u_isalpha(c) || (mask & (U_GC_M_MASK | U_GC_CF_MASK)) != 0) return CharClass::Word;
  if (u_isdigit(c)) return CharClass::Number;
  if ((mask & U_GC_P_MASK) != 0) return CharClass::Punct;
  return CharClass::Other;
}

TokenKind kind_of(CharClass c) {
  switch (c) {
    case CharClass::Word: return TokenKind::Word;
    case CharClass::Number: return TokenKind::Number;
    case CharClass::Punct: return TokenKind::Punct;
    default: return TokenKind::Other;
  }
}

}  // namespace

const char* to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::Punct: return "punct";
    case TokenKind::Number: return "number";
    case TokenKind::Other: return "other";
  }
  return "other";
}

bool is_strippable_mark(char32_t cp) noexcept {
  return (cp >= 0x0610 && cp <= 0x061A) ||  // honorific and small high marks
         (cp >= 0x064B && cp <= 0x0652) ||  // tanween, fatha, damma, kasra, shadda, sukun
         (cp >= 0x0656 && cp <= 0x065F) ||  // subscript alef, inverted damma, ...
         cp == 0x0670 ||                    // superscript alef
         (cp >= 0x06D6 && cp <= 0x06DC) || (cp >= 0x06DF && cp <= 0x06E4) || (cp >= 0x06E7 && cp <= 0x06E8) ||
         (cp >= 0x06EA && cp <= 0x06ED);
}

std::string normalize(std::string_view raw, bool strip_diacritics) {
  text::validate_utf8(raw);
  const std::u32string cps = text::to_u32(text::to_nfc(raw));
  const auto& map = letter_map();

  std::string mapped;
  mapped.reserve(raw.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (strip_diacritics && is_strippable_mark(cp)) continue;
    if (const auto it = map.find(cp); it != map.end()) {
      const bool before_zwj = i + 1 < cps.size() && cps[i + 1] == kZwj;
      if (!(it->second.skip_before_zwj && before_zwj)) {
        if (it->second.to) text::append_utf8(mapped, *it->second.to);
        continue;
      }
    }
    text::append_utf8(mapped, cp);
  }
  return text::to_nfc(mapped);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  const auto bounds = text::grapheme_boundaries(text);

  std::optional<CharClass> run;
  std::size_t run_start = 0;
  auto flush = [&](std::size_t end) {
    if (run && *run != CharClass::Space) {
      tokens.push_back(Token{std::string(text.substr(run_start, end - run_start)), {run_start, end}, kind_of(*run)});
    }
    run.reset();
  };

  for (std::size_t g = 1; g < bounds.size(); ++g) {
    const std::size_t start = bounds[g - 1];
    std::size_t pos = start;
    const CharClass cls = classify(text::decode_at(text, pos));
    const bool joins = run && *run == cls && cls != CharClass::Punct;
    if (!joins) {
      flush(start);
      run = cls;
      run_start = start;
    }
  }
  flush(text.size());
  return tokens;
}

std::string format_tokens_tsv(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    out += t.surface;
    out += '\t';
    out += to_string(t.kind);
    out += '\t';
    out += std::to_string(t.span.start);
    out += '\t';
    out += std::to_string(t.span.end);
    out += '\n';
  }
  return out;
}

}  // namespace urdustem::corpus
