#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sindhi/encoder.hpp"
#include "sindhi/group_table.hpp"

namespace sindhi {

using WordId = std::uint32_t;

struct IndexStats {
  std::size_t buckets = 0;
  std::size_t max_bucket = 0;
  double mean_bucket = 0.0;
};

struct LexiconStats {
  std::size_t words = 0;
  std::size_t duplicates_merged = 0;
  IndexStats sound;
  IndexStats shape;
};

struct LexiconMeta {
  std::string source;
  std::uint32_t sound_checksum = 0;
  std::uint32_t shape_checksum = 0;

  friend bool operator==(const LexiconMeta&, const LexiconMeta&) = default;
};

// Parsed word-list file: one word per line, '#' comments.
struct WordList {
  std::vector<std::string> words;  // normalized, duplicates removed, file order
  std::size_t duplicates_merged = 0;
};

// Throws WordListError naming the 1-based line of a blank line or a line that
// is not exactly one Sindhi word, DecodeError on bad UTF-8.
WordList parse_word_list(std::string_view content, std::string_view source = "<words>");

// Correctly spelled words plus sound- and shape-code inverted indexes.
// Immutable once built; share it through shared_ptr<const Lexicon>.
class Lexicon {
 public:
  using Bucket = std::vector<WordId>;
  using Index = std::unordered_map<std::string, Bucket>;

  // Words must be normalized and non-empty. Duplicates are merged (first
  // occurrence keeps its position). Throws EmptyInputError naming the index.
  static Lexicon build(std::span<const std::string> words, GroupTable sound, GroupTable shape,
                       std::string source = {});
  static Lexicon build(const WordList& list, GroupTable sound, GroupTable shape,
                       std::string source = {});

  // Versioned binary form with an embedded crc32.
  std::string save() const;
  // Throws IndexFormatError; never returns a partial lexicon.
  static Lexicon load(std::string_view bytes);

  // Throws StaleIndexError if either table differs from the one the index
  // was built with.
  void require_tables(const GroupTable& sound, const GroupTable& shape) const;

  bool contains(std::string_view word) const;
  bool contains(std::u32string_view word) const;

  // Words whose code equals `code`, in insertion order.
  std::vector<std::string_view> bucket(const PhoneticCode& code) const;
  // Throws CodeGrammarError for malformed codes.
  std::vector<std::string_view> bucket(std::string_view code, TableKind kind) const;
  std::span<const WordId> bucket_ids(const PhoneticCode& code) const;

  const std::vector<std::string>& words() const { return words_; }
  std::string_view word(WordId id) const { return words_[id]; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  const GroupTable& table(TableKind kind) const;
  const GroupTable& sound_table() const { return sound_; }
  const GroupTable& shape_table() const { return shape_; }
  const Index& index(TableKind kind) const;
  const LexiconMeta& meta() const { return meta_; }
  LexiconStats stats() const;

  friend bool operator==(const Lexicon& a, const Lexicon& b);

 private:
  Lexicon(GroupTable sound, GroupTable shape) : sound_(std::move(sound)), shape_(std::move(shape)) {}
  void insert(std::string word);

  GroupTable sound_;
  GroupTable shape_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> ids_;
  Index sound_index_;
  Index shape_index_;
  LexiconMeta meta_;
  std::size_t duplicates_merged_ = 0;
};

}  // namespace sindhi
