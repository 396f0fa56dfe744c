#include "error.hpp"

namespace urdustem {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Encoding: return "encoding";
    case ErrorCode::NotNormalized: return "not-normalized";
    case ErrorCode::RuleSyntax: return "rule-syntax";
    case ErrorCode::DuplicateRule: return "duplicate-rule";
    case ErrorCode::Config: return "config";
    case ErrorCode::GoldSyntax: return "gold-syntax";
    case ErrorCode::Alignment: return "alignment";
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::Paradigm: return "paradigm";
    case ErrorCode::LexiconSyntax: return "lexicon-syntax";
  }
  return "unknown";
}

}  // namespace urdustem
