#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers backed by ICU. All lengths in this project are measured in
// extended grapheme clusters, never bytes or code points.
namespace urdustem::text {

// Throws Error{Encoding} carrying the byte offset of the first bad sequence.
void validate_utf8(std::string_view s);

bool is_valid_utf8(std::string_view s) noexcept;

// Input must be valid UTF-8.
bool is_nfc(std::string_view s);
std::string to_nfc(std::string_view s);

// Byte offsets of every grapheme boundary, including 0 and s.size().
std::vector<std::size_t> grapheme_boundaries(std::string_view s);

std::size_t grapheme_count(std::string_view s);

std::vector<std::string_view> graphemes(std::string_view s);

// Decodes / encodes single code points. decode_at advances pos.
char32_t decode_at(std::string_view s, std::size_t& pos);
void append_utf8(std::string& out, char32_t cp);

std::u32string to_u32(std::string_view s);
std::string from_u32(std::u32string_view s);

}  // namespace urdustem::text
