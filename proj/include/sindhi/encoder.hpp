#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sindhi/group_table.hpp"

namespace sindhi {

inline constexpr char kCodePrefix = 'x';
inline constexpr char kUnmappedSymbol = '?';

// 'x' followed by one symbol per encoded scalar.
struct PhoneticCode {
  std::string text;
  TableKind kind = TableKind::Sound;

  friend bool operator==(const PhoneticCode&, const PhoneticCode&) = default;
};

struct EncodeOptions {
  // Unmapped combining marks are skipped instead of escaped.
  bool drop_unmapped_marks = true;
};

PhoneticCode encode(std::u32string_view word, const GroupTable& table,
                    const EncodeOptions& options = {});
PhoneticCode encode(std::string_view word_utf8, const GroupTable& table,
                    const EncodeOptions& options = {});

// Throws EmptyInputError naming the index of the first empty word.
std::vector<PhoneticCode> encode_batch(std::span<const std::u32string> words,
                                       const GroupTable& table,
                                       const EncodeOptions& options = {});

// Grammar `x[0-9A-Z?]*`, optionally restricted to a table's alphabet.
bool is_well_formed_code(std::string_view code);
bool is_well_formed_code(std::string_view code, TableKind kind);
// Throws CodeGrammarError.
PhoneticCode parse_code(std::string_view code, TableKind kind);

}  // namespace sindhi
