#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace urdustem {

enum class ErrorCode {
  InvalidArgument,
  Encoding,
  NotNormalized,
  RuleSyntax,
  DuplicateRule,
  Config,
  GoldSyntax,
  Alignment,
  EmptyInput,
  Paradigm,
  LexiconSyntax,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the core is reported as an Error. Line numbers are
// 1-based and refer to the input file being parsed; index is the 0-based
// position inside a batch or aligned sequence.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> other_line() const noexcept { return other_line_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  std::optional<std::size_t> byte_offset() const noexcept { return byte_offset_; }

  Error& at_line(std::size_t line) {
    line_ = line;
    return *this;
  }
  Error& with_other_line(std::size_t line) {
    other_line_ = line;
    return *this;
  }
  Error& at_index(std::size_t index) {
    index_ = index;
    return *this;
  }
  Error& at_byte(std::size_t offset) {
    byte_offset_ = offset;
    return *this;
  }

private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> other_line_;
  std::optional<std::size_t> index_;
  std::optional<std::size_t> byte_offset_;
};

}  // namespace urdustem
