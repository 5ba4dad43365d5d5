#include "sindhi/encoder.hpp"

#include "sindhi/errors.hpp"
#include "sindhi/text.hpp"

namespace sindhi {

PhoneticCode encode(std::u32string_view word, const GroupTable& table,
                    const EncodeOptions& options) {
  if (word.empty()) throw EmptyInputError("cannot encode an empty word");
  PhoneticCode code{std::string(1, kCodePrefix), table.kind()};
  code.text.reserve(word.size() + 1);
  for (char32_t c : word) {
    if (const auto symbol = table.code_of(c)) {
      code.text.push_back(*symbol);
    } else if (!(options.drop_unmapped_marks && is_combining_mark(c))) {
      code.text.push_back(kUnmappedSymbol);
    }
  }
  return code;
}

PhoneticCode encode(std::string_view word_utf8, const GroupTable& table,
                    const EncodeOptions& options) {
  return encode(std::u32string_view(decode_utf8(word_utf8)), table, options);
}

std::vector<PhoneticCode> encode_batch(std::span<const std::u32string> words,
                                       const GroupTable& table, const EncodeOptions& options) {
  std::vector<PhoneticCode> codes;
  codes.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) {
      throw EmptyInputError("word at index " + std::to_string(i) + " is empty");
    }
    codes.push_back(encode(words[i], table, options));
  }
  return codes;
}

bool is_well_formed_code(std::string_view code) {
  return is_well_formed_code(code, TableKind::Shape);
}

bool is_well_formed_code(std::string_view code, TableKind kind) {
  if (code.empty() || code.front() != kCodePrefix) return false;
  const std::string_view alphabet = code_alphabet(kind);
  for (char c : code.substr(1)) {
    if (c != kUnmappedSymbol && alphabet.find(c) == std::string_view::npos) return false;
  }
  return true;
}

PhoneticCode parse_code(std::string_view code, TableKind kind) {
  if (!is_well_formed_code(code, kind)) {
    throw CodeGrammarError("malformed " + std::string(to_string(kind)) + " code '" +
                           std::string(code) + "'");
  }
  return PhoneticCode{std::string(code), kind};
}

}  // namespace sindhi
