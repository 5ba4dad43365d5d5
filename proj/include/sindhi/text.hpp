#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sindhi {

// UTF-8 <-> scalar conversions. decode_utf8 throws DecodeError naming the
// first ill-formed byte offset; `source` is carried into the error message.
std::u32string decode_utf8(std::string_view bytes, std::string_view source = "<input>");
std::string encode_utf8(std::u32string_view scalars);
void append_utf8(std::string& out, char32_t scalar);

struct NormalizeOptions {
  // Harakat U+064B..U+0652. Off by default: shape distinctions rely on marks.
  bool strip_diacritics = false;
};

// Text in canonical composition form with tatweel removed.
class NormalizedText {
 public:
  NormalizedText() = default;

  const std::u32string& scalars() const { return text_; }
  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }
  std::string utf8() const { return encode_utf8(text_); }

  friend bool operator==(const NormalizedText&, const NormalizedText&) = default;

 private:
  friend NormalizedText normalize(std::u32string_view, const NormalizeOptions&);
  explicit NormalizedText(std::u32string text) : text_(std::move(text)) {}

  std::u32string text_;
};

NormalizedText normalize(std::u32string_view raw, const NormalizeOptions& options = {});
NormalizedText normalize(std::string_view raw_utf8, const NormalizeOptions& options = {});
// Convenience for already-normalized word keys.
std::string normalize_word(std::string_view raw_utf8, const NormalizeOptions& options = {});

struct Token {
  std::u32string surface;
  std::size_t start = 0;  // scalar offset, inclusive
  std::size_t end = 0;    // scalar offset, exclusive

  std::string utf8() const { return encode_utf8(surface); }
  friend bool operator==(const Token&, const Token&) = default;
};

// Maximal runs of Arabic-script letters, with combining marks attached to a
// run. Everything else (spaces, digits, Latin, punctuation) separates.
std::vector<Token> tokenize(const NormalizedText& text);

bool is_arabic_letter(char32_t c);
bool is_combining_mark(char32_t c);

}  // namespace sindhi
