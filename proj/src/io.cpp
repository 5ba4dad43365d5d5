#include "sindhi/io.hpp"

#include <fstream>
#include <sstream>

#include "sindhi/errors.hpp"

namespace sindhi {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

GroupTable load_table_file(const std::filesystem::path& path, TableKind kind) {
  const std::string content = read_file(path);
  try {
    return GroupTable::load(content, kind);
  } catch (const TableError& e) {
    throw TableError(e.kind(), e.line(), path.string() + ": " + e.what());
  }
}

Lexicon load_lexicon(const LexiconSource& source) {
  if (source.index.has_value() == source.words.has_value()) {
    throw InvalidRequestError("supply exactly one of a word list or a saved index");
  }
  if (source.index) {
    Lexicon lex = [&] {
      try {
        return Lexicon::load(read_file(*source.index));
      } catch (const IndexFormatError& e) {
        throw IndexFormatError(e.kind(), source.index->string() + ": " + e.what());
      }
    }();
    if (source.sound_table || source.shape_table) {
      const GroupTable sound = source.sound_table ? load_table_file(*source.sound_table, TableKind::Sound)
                                                  : lex.sound_table();
      const GroupTable shape = source.shape_table ? load_table_file(*source.shape_table, TableKind::Shape)
                                                  : lex.shape_table();
      lex.require_tables(sound, shape);
    }
    return lex;
  }

  if (!source.sound_table || !source.shape_table) {
    throw InvalidRequestError("building from a word list needs both a sound table and a shape table");
  }
  GroupTable sound = load_table_file(*source.sound_table, TableKind::Sound);
  GroupTable shape = load_table_file(*source.shape_table, TableKind::Shape);
  const std::string name = source.words->string();
  WordList list = [&] {
    try {
      return parse_word_list(read_file(*source.words), name);
    } catch (const WordListError& e) {
      throw WordListError(e.line(), name + ": " + e.what());
    }
  }();
  return Lexicon::build(list, std::move(sound), std::move(shape), source.words->filename().string());
}

}  // namespace sindhi
