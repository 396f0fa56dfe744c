#pragma once

#include <string_view>

// Contents of the files under data/, compiled into the library.
namespace urdustem::data {

extern const std::string_view kDefaultRules;
extern const std::string_view kCompanionAlifRules;
extern const std::string_view kCompanionHeRules;
extern const std::string_view kLetterMap;

}  // namespace urdustem::data
