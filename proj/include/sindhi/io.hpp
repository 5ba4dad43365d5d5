#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "sindhi/errors.hpp"
#include "sindhi/group_table.hpp"
#include "sindhi/lexicon.hpp"

namespace sindhi {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

GroupTable load_table_file(const std::filesystem::path& path, TableKind kind);

// Where a lexicon comes from: a saved index, or a word list plus tables.
// When both an index and tables are given, the tables must match the index.
struct LexiconSource {
  std::optional<std::filesystem::path> index;
  std::optional<std::filesystem::path> words;
  std::optional<std::filesystem::path> sound_table;
  std::optional<std::filesystem::path> shape_table;
};

// Throws InvalidRequestError unless exactly one of index/words is set.
Lexicon load_lexicon(const LexiconSource& source);

}  // namespace sindhi
