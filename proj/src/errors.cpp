#include "sindhi/errors.hpp"

#include <utility>

namespace sindhi {

DecodeError::DecodeError(std::string source, std::size_t byte_offset)
    : Error(source + ": invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
      source_(std::move(source)),
      byte_offset_(byte_offset) {}

TableError::TableError(Kind kind, std::size_t line, const std::string& what)
    : Error(line ? "line " + std::to_string(line) + ": " + what : what), kind_(kind), line_(line) {}

WordListError::WordListError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

IndexFormatError::IndexFormatError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

}  // namespace sindhi
