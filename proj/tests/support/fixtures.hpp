#pragma once

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace urdustem::testing {

struct TableRow {
  std::string word;
  std::string prefix;
  std::string stem;
  std::string suffix;
};

// Word / Prefix / Stem / Suffix as printed in the reference results table.
// The بد نصیب row detaches the prefix together with its trailing space.
inline const std::vector<TableRow>& reference_rows() {
  static const std::vector<TableRow> rows = {
      {"علاقوں", "", "علاقہ", "وں"},
      {"فاصلے", "", "فاصلہ", "ے"},
      {"سوالات", "", "سوال", "ات"},
      {"لڑکیاں", "", "لڑکی", "یاں"},
      {"راجویر", "راج", "ویر", ""},
      {"نوجوان", "نو", "جوان", ""},
      {"لاجواب", "لا", "جواب", ""},
      {"بد نصیب", "بد ", "نصیب", ""},
  };
  return rows;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// 55 masculine nouns in ا, group-1 paradigm.
inline const std::vector<std::string>& alif_noun_lexicon() {
  static const std::vector<std::string> lemmas = {
      "لڑکا", "کتا",   "گھوڑا", "ہتھوڑا", "بکرا",  "کپڑا",  "جوتا",   "پنکھا", "تارا",   "بیٹا",  "بھتیجا",
      "بھانجا", "پوتا",  "نواسا", "سالا",   "ڈبا",   "پتا",   "کیلا",   "انڈا",  "ڈنڈا",   "جھنڈا", "گملا",
      "تالا",  "مسالا", "لوٹا",  "گلا",    "کانٹا", "دھاگا", "پتلا",   "کنارا", "بچھڑا",  "چمچا",  "کوا",
      "بھیڑیا", "گدھا",  "ٹکڑا",  "چھاتا",  "پہیا",  "طوطا",  "چوزا",   "بٹوا",  "پیسا",   "دھوکا", "بگلا",
      "لہنگا", "ٹانگا", "گھونسلا", "پراٹھا", "سموسا", "کرتا",  "پاجاما", "جھولا", "کھلونا", "ڈھکنا", "چولہا",
  };
  return lemmas;
}

inline const std::vector<std::string>& he_noun_lexicon() {
  static const std::vector<std::string> lemmas = {
      "علاقہ", "فاصلہ", "کمرہ", "بچہ", "دروازہ", "راستہ", "چشمہ", "پردہ", "بستہ", "رسالہ", "اشارہ", "قصبہ",
  };
  return lemmas;
}

}  // namespace urdustem::testing
