#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sindhi {

// Base for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-formed UTF-8 in input bytes.
class DecodeError : public Error {
 public:
  DecodeError(std::string source, std::size_t byte_offset);

  const std::string& source() const { return source_; }
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::string source_;
  std::size_t byte_offset_;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class TableError : public Error {
 public:
  enum class Kind { Syntax, PartitionViolation, DuplicateCode, Alphabet, EmptyGroup };

  TableError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  // 1-based line in the table source, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// A code string that does not match `x[0-9A-Z?]*`.
class CodeGrammarError : public Error {
 public:
  using Error::Error;
};

class WordListError : public Error {
 public:
  WordListError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IndexFormatError : public Error {
 public:
  enum class Kind { BadMagic, VersionMismatch, ChecksumFailure, Corrupt };

  IndexFormatError(Kind kind, const std::string& what);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Index was built over different tables than the ones supplied.
class StaleIndexError : public Error {
 public:
  using Error::Error;
};

class InvalidRequestError : public Error {
 public:
  using Error::Error;
};

}  // namespace sindhi
