#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace urdustem::corpus {

enum class TokenKind { Word, Punct, Number, Other };

const char* to_string(TokenKind kind) noexcept;

struct ByteSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const ByteSpan&) const = default;
};

struct Token {
  std::string surface;
  ByteSpan span;
  TokenKind kind = TokenKind::Word;

  bool operator==(const Token&) const = default;
};

// NFC, Arabic-to-Urdu letter unification (data/letter_map.tsv) and, when
// requested, removal of Arabic-script vowel and cantillation marks.
// Idempotent. Throws Error{Encoding} with the byte offset of invalid UTF-8.
std::string normalize(std::string_view text, bool strip_diacritics);

// True for the marks removed by normalize(..., true).
bool is_strippable_mark(char32_t cp) noexcept;

// Splits normalized text on whitespace. Letters, marks and format
// characters (ZWNJ, ZWJ) form Word runs; digits form Number runs; every
// punctuation grapheme is its own Punct token; anything else groups into
// Other runs. Spans are byte offsets into `text`.
std::vector<Token> tokenize(std::string_view text);

// One `surface<TAB>kind<TAB>start<TAB>end` line per token.
std::string format_tokens_tsv(const std::vector<Token>& tokens);

}  // namespace urdustem::corpus
