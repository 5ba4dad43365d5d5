#include "sindhi/lexicon.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>

#include "sindhi/errors.hpp"
#include "sindhi/text.hpp"

namespace sindhi {
namespace {

constexpr char kMagic[4] = {'S', 'N', 'D', 'X'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 4 + 8;

std::uint32_t crc(std::string_view bytes) {
  uLong c = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large payloads in chunks.
  while (!bytes.empty()) {
    const auto n = static_cast<uInt>(std::min<std::size_t>(bytes.size(), 1u << 30));
    c = crc32(c, reinterpret_cast<const Bytef*>(bytes.data()), n);
    bytes.remove_prefix(n);
  }
  return static_cast<std::uint32_t>(c);
}

class Writer {
 public:
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void str(std::string_view s) {
    u64(s.size());
    out_.append(s);
  }
  void raw(std::string_view s) { out_.append(s); }
  std::string& bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(uint(4)); }
  std::uint64_t u64() { return uint(8); }
  std::string str() {
    const std::uint64_t n = u64();
    need(n);
    std::string s(in_.substr(0, n));
    in_.remove_prefix(n);
    return s;
  }
  bool done() const { return in_.empty(); }

 private:
  std::uint64_t uint(int width) {
    need(static_cast<std::uint64_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[i])) << (8 * i);
    }
    in_.remove_prefix(static_cast<std::size_t>(width));
    return v;
  }
  void need(std::uint64_t n) const {
    if (n > in_.size()) throw IndexFormatError(IndexFormatError::Kind::Corrupt, "index payload is malformed");
  }

  std::string_view in_;
};

void write_index(Writer& w, const Lexicon::Index& index) {
  std::vector<const Lexicon::Index::value_type*> entries;
  entries.reserve(index.size());
  for (const auto& entry : index) entries.push_back(&entry);
  std::sort(entries.begin(), entries.end(), [](auto* a, auto* b) { return a->first < b->first; });
  w.u64(entries.size());
  for (const auto* entry : entries) {
    w.str(entry->first);
    w.u64(entry->second.size());
    for (WordId id : entry->second) w.u32(id);
  }
}

Lexicon::Index read_index(Reader& r) {
  Lexicon::Index index;
  const std::uint64_t buckets = r.u64();
  for (std::uint64_t b = 0; b < buckets; ++b) {
    std::string key = r.str();
    const std::uint64_t n = r.u64();
    Lexicon::Bucket bucket;
    for (std::uint64_t i = 0; i < n; ++i) bucket.push_back(r.u32());
    index.emplace(std::move(key), std::move(bucket));
  }
  return index;
}

IndexStats index_stats(const Lexicon::Index& index, std::size_t words) {
  IndexStats stats;
  stats.buckets = index.size();
  for (const auto& [code, bucket] : index) stats.max_bucket = std::max(stats.max_bucket, bucket.size());
  stats.mean_bucket = index.empty() ? 0.0 : static_cast<double>(words) / static_cast<double>(index.size());
  return stats;
}

std::string checksum_hex(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

}  // namespace

WordList parse_word_list(std::string_view content, std::string_view source) {
  const std::u32string text = decode_utf8(content, source);
  WordList list;
  std::unordered_map<std::string, bool> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find(U'\n', pos);
    if (eol == std::u32string::npos) eol = text.size();
    std::u32string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    while (!line.empty() && (line.back() == U'\r' || line.back() == U' ' || line.back() == U'\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == U' ' || line.front() == U'\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() == U'#') continue;
    if (line.empty()) throw WordListError(line_no, "empty word");

    const NormalizedText normalized = normalize(line);
    const auto tokens = tokenize(normalized);
    if (tokens.size() != 1 || tokens.front().start != 0 || tokens.front().end != normalized.size()) {
      throw WordListError(line_no, "'" + encode_utf8(line) + "' is not a single Sindhi word");
    }
    std::string word = normalized.utf8();
    if (seen.emplace(word, true).second) {
      list.words.push_back(std::move(word));
    } else {
      ++list.duplicates_merged;
    }
  }
  return list;
}

void Lexicon::insert(std::string word) {
  if (ids_.contains(word)) {
    ++duplicates_merged_;
    return;
  }
  const auto id = static_cast<WordId>(words_.size());
  const std::u32string scalars = decode_utf8(word);
  sound_index_[encode(scalars, sound_).text].push_back(id);
  shape_index_[encode(scalars, shape_).text].push_back(id);
  ids_.emplace(word, id);
  words_.push_back(std::move(word));
}

Lexicon Lexicon::build(std::span<const std::string> words, GroupTable sound, GroupTable shape,
                       std::string source) {
  if (sound.kind() != TableKind::Sound || shape.kind() != TableKind::Shape) {
    throw InvalidRequestError("lexicon needs a sound table and a shape table");
  }
  Lexicon lex(std::move(sound), std::move(shape));
  lex.meta_ = LexiconMeta{std::move(source), lex.sound_.checksum(), lex.shape_.checksum()};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) throw EmptyInputError("word at index " + std::to_string(i) + " is empty");
    lex.insert(words[i]);
  }
  return lex;
}

Lexicon Lexicon::build(const WordList& list, GroupTable sound, GroupTable shape, std::string source) {
  Lexicon lex = build(std::span<const std::string>(list.words), std::move(sound), std::move(shape),
                      std::move(source));
  lex.duplicates_merged_ += list.duplicates_merged;
  return lex;
}

std::string Lexicon::save() const {
  Writer payload;
  payload.str(meta_.source);
  payload.u32(meta_.sound_checksum);
  payload.u32(meta_.shape_checksum);
  payload.str(sound_.serialize());
  payload.str(shape_.serialize());
  payload.u64(duplicates_merged_);
  payload.u64(words_.size());
  for (const auto& w : words_) payload.str(w);
  write_index(payload, sound_index_);
  write_index(payload, shape_index_);

  Writer file;
  file.raw(std::string_view(kMagic, sizeof kMagic));
  file.u32(kFormatVersion);
  file.u64(payload.bytes().size());
  file.raw(payload.bytes());
  file.u32(crc(payload.bytes()));
  return std::move(file.bytes());
}

Lexicon Lexicon::load(std::string_view bytes) {
  using Kind = IndexFormatError::Kind;
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw IndexFormatError(Kind::BadMagic, "not a lexicon index file");
  }
  if (bytes.size() < kHeaderSize) {
    throw IndexFormatError(Kind::ChecksumFailure, "checksum failure: index header truncated");
  }
  Reader header(bytes.substr(4, kHeaderSize - 4));
  const std::uint32_t version = header.u32();
  if (version != kFormatVersion) {
    throw IndexFormatError(Kind::VersionMismatch, "index format version " + std::to_string(version) +
                                                      ", expected " + std::to_string(kFormatVersion));
  }
  const std::uint64_t length = header.u64();
  if (bytes.size() - kHeaderSize < 4 || length != bytes.size() - kHeaderSize - 4) {
    throw IndexFormatError(Kind::ChecksumFailure, "checksum failure: index size does not match header");
  }
  const std::string_view payload = bytes.substr(kHeaderSize, length);
  Reader trailer(bytes.substr(kHeaderSize + length));
  if (trailer.u32() != crc(payload)) {
    throw IndexFormatError(Kind::ChecksumFailure, "checksum failure: index payload is corrupt");
  }

  Reader r(payload);
  LexiconMeta meta;
  meta.source = r.str();
  meta.sound_checksum = r.u32();
  meta.shape_checksum = r.u32();
  const std::string sound_text = r.str();
  const std::string shape_text = r.str();
  const std::uint64_t duplicates = r.u64();
  const std::uint64_t count = r.u64();
  std::vector<std::string> words;
  for (std::uint64_t i = 0; i < count; ++i) words.push_back(r.str());
  const Index sound_index = read_index(r);
  const Index shape_index = read_index(r);
  if (!r.done()) throw IndexFormatError(Kind::Corrupt, "trailing bytes in index payload");

  std::optional<Lexicon> lex;
  try {
    lex = build(words, GroupTable::load(sound_text, TableKind::Sound),
                GroupTable::load(shape_text, TableKind::Shape), meta.source);
  } catch (const IndexFormatError&) {
    throw;
  } catch (const Error& e) {
    throw IndexFormatError(Kind::Corrupt, std::string("index content is invalid: ") + e.what());
  }
  if (lex->meta_ != meta || lex->sound_index_ != sound_index || lex->shape_index_ != shape_index ||
      lex->duplicates_merged_ != 0) {
    throw IndexFormatError(Kind::Corrupt, "stored indexes disagree with the stored words and tables");
  }
  lex->duplicates_merged_ = static_cast<std::size_t>(duplicates);
  return std::move(*lex);
}

void Lexicon::require_tables(const GroupTable& sound, const GroupTable& shape) const {
  if (sound.checksum() != meta_.sound_checksum || shape.checksum() != meta_.shape_checksum) {
    throw StaleIndexError("index was built with tables sound=" + checksum_hex(meta_.sound_checksum) +
                          " shape=" + checksum_hex(meta_.shape_checksum) + ", given sound=" +
                          checksum_hex(sound.checksum()) + " shape=" + checksum_hex(shape.checksum()));
  }
}

bool Lexicon::contains(std::string_view word) const { return ids_.contains(std::string(word)); }

bool Lexicon::contains(std::u32string_view word) const { return contains(encode_utf8(word)); }

std::span<const WordId> Lexicon::bucket_ids(const PhoneticCode& code) const {
  const Index& idx = index(code.kind);
  const auto it = idx.find(code.text);
  if (it == idx.end()) return {};
  return it->second;
}

std::vector<std::string_view> Lexicon::bucket(const PhoneticCode& code) const {
  std::vector<std::string_view> out;
  for (WordId id : bucket_ids(code)) out.push_back(words_[id]);
  return out;
}

std::vector<std::string_view> Lexicon::bucket(std::string_view code, TableKind kind) const {
  return bucket(parse_code(code, kind));
}

const GroupTable& Lexicon::table(TableKind kind) const {
  return kind == TableKind::Sound ? sound_ : shape_;
}

const Lexicon::Index& Lexicon::index(TableKind kind) const {
  return kind == TableKind::Sound ? sound_index_ : shape_index_;
}

LexiconStats Lexicon::stats() const {
  return LexiconStats{words_.size(), duplicates_merged_, index_stats(sound_index_, words_.size()),
                      index_stats(shape_index_, words_.size())};
}

bool operator==(const Lexicon& a, const Lexicon& b) {
  return a.sound_ == b.sound_ && a.shape_ == b.shape_ && a.words_ == b.words_ && a.meta_ == b.meta_ &&
         a.sound_index_ == b.sound_index_ && a.shape_index_ == b.shape_index_ &&
         a.duplicates_merged_ == b.duplicates_merged_;
}

}  // namespace sindhi
