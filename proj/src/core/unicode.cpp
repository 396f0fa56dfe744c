#include "unicode.hpp"

#include "error.hpp"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utext.h>
#include <unicode/utf8.h>

#include <memory>

namespace urdustem::text {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) {
    throw std::runtime_error(std::string("ICU NFC instance unavailable: ") + u_errorName(status));
  }
  return *n;
}

// BreakIterator is not thread-safe; one clone per thread.
icu::BreakIterator& character_iterator() {
  thread_local std::unique_ptr<icu::BreakIterator> it = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> bi(icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(), status));
    if (U_FAILURE(status)) {
      throw std::runtime_error(std::string("ICU grapheme iterator unavailable: ") + u_errorName(status));
    }
    return bi;
  }();
  return *it;
}

bool is_ascii(std::string_view s) noexcept {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

}  // namespace

bool is_valid_utf8(std::string_view s) noexcept {
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  const auto len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(p, i, len, c);
    if (c < 0) return false;
  }
  return true;
}

void validate_utf8(std::string_view s) {
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  const auto len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(p, i, len, c);
    if (c < 0) {
      throw Error(ErrorCode::Encoding, "invalid UTF-8 at byte offset " + std::to_string(start)).at_byte(start);
    }
  }
}

bool is_nfc(std::string_view s) {
  if (is_ascii(s)) return true;
  UErrorCode status = U_ZERO_ERROR;
  const auto u = icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  const bool ok = nfc().isNormalized(u, status);
  return U_SUCCESS(status) && ok;
}

std::string to_nfc(std::string_view s) {
  if (is_ascii(s)) return std::string(s);
  UErrorCode status = U_ZERO_ERROR;
  const auto u = icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  const icu::UnicodeString n = nfc().normalize(u, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("NFC normalization failed: ") + u_errorName(status));
  }
  std::string out;
  n.toUTF8String(out);
  return out;
}

std::vector<std::size_t> grapheme_boundaries(std::string_view s) {
  std::vector<std::size_t> bounds;
  bounds.reserve(s.size() + 1);
  if (s.empty()) {
    bounds.push_back(0);
    return bounds;
  }
  UErrorCode status = U_ZERO_ERROR;
  UText ut = UTEXT_INITIALIZER;
  utext_openUTF8(&ut, s.data(), static_cast<int64_t>(s.size()), &status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("utext_openUTF8 failed: ") + u_errorName(status));
  }
  icu::BreakIterator& bi = character_iterator();
  bi.setText(&ut, status);
  if (U_FAILURE(status)) {
    utext_close(&ut);
    throw std::runtime_error(std::string("BreakIterator::setText failed: ") + u_errorName(status));
  }
  for (int32_t b = bi.first(); b != icu::BreakIterator::DONE; b = bi.next()) {
    bounds.push_back(static_cast<std::size_t>(b));
  }
  utext_close(&ut);
  return bounds;
}

std::size_t grapheme_count(std::string_view s) {
  return grapheme_boundaries(s).size() - 1;
}

std::vector<std::string_view> graphemes(std::string_view s) {
  const auto bounds = grapheme_boundaries(s);
  std::vector<std::string_view> out;
  out.reserve(bounds.size() - 1);
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    out.push_back(s.substr(bounds[i - 1], bounds[i] - bounds[i - 1]));
  }
  return out;
}

char32_t decode_at(std::string_view s, std::size_t& pos) {
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  auto i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(p, i, static_cast<int32_t>(s.size()), c);
  if (c < 0) {
    throw Error(ErrorCode::Encoding, "invalid UTF-8 at byte offset " + std::to_string(pos)).at_byte(pos);
  }
  pos = static_cast<std::size_t>(i);
  return static_cast<char32_t>(c);
}

void append_utf8(std::string& out, char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool err = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), err);
  if (err) {
    throw Error(ErrorCode::Encoding, "code point out of range");
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

std::u32string to_u32(std::string_view s) {
  std::u32string out;
  std::size_t pos = 0;
  while (pos < s.size()) out.push_back(decode_at(s, pos));
  return out;
}

std::string from_u32(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) append_utf8(out, c);
  return out;
}

}  // namespace urdustem::text
