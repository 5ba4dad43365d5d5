#include "sindhi/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>

#include "sindhi/errors.hpp"

namespace sindhi {
namespace {

constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kFirstHaraka = 0x064B;
constexpr char32_t kLastHaraka = 0x0652;

bool is_stripped(char32_t c, const NormalizeOptions& options) {
  if (c == kTatweel) return true;
  return options.strip_diacritics && c >= kFirstHaraka && c <= kLastHaraka;
}

std::u32string strip(std::u32string_view in, const NormalizeOptions& options) {
  std::u32string out;
  out.reserve(in.size());
  for (char32_t c : in) {
    if (!is_stripped(c, options)) out.push_back(c);
  }
  return out;
}

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* instance = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || instance == nullptr) {
    throw Error(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
  }
  return *instance;
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes, std::string_view source) {
  std::u32string out;
  out.reserve(bytes.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(bytes.data());
  const auto length = static_cast<std::int32_t>(bytes.size());
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t at = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) throw DecodeError(std::string(source), static_cast<std::size_t>(at));
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view scalars) {
  std::string out;
  out.reserve(scalars.size() * 2);
  for (char32_t c : scalars) append_utf8(out, c);
  return out;
}

NormalizedText normalize(std::u32string_view raw, const NormalizeOptions& options) {
  // Composition never yields tatweel, but a removed tatweel can expose new
  // compositions, hence strip before composing.
  const std::u32string stripped = strip(raw, options);
  auto source = icu::UnicodeString::fromUTF32(reinterpret_cast<const UChar32*>(stripped.data()),
                                              static_cast<std::int32_t>(stripped.size()));
  UErrorCode status = U_ZERO_ERROR;
  const icu::UnicodeString composed = nfc().normalize(source, status);
  if (U_FAILURE(status)) throw Error(std::string("NFC normalization failed: ") + u_errorName(status));

  std::u32string out(static_cast<std::size_t>(composed.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  composed.toUTF32(reinterpret_cast<UChar32*>(out.data()), static_cast<std::int32_t>(out.size()),
                   status);
  if (U_FAILURE(status)) throw Error(std::string("UTF-32 conversion failed: ") + u_errorName(status));
  return NormalizedText(std::move(out));
}

NormalizedText normalize(std::string_view raw_utf8, const NormalizeOptions& options) {
  return normalize(std::u32string_view(decode_utf8(raw_utf8)), options);
}

std::string normalize_word(std::string_view raw_utf8, const NormalizeOptions& options) {
  return normalize(raw_utf8, options).utf8();
}

bool is_arabic_letter(char32_t c) {
  const auto cp = static_cast<UChar32>(c);
  if (!u_isalpha(cp)) return false;
  UErrorCode status = U_ZERO_ERROR;
  return uscript_getScript(cp, &status) == USCRIPT_ARABIC && U_SUCCESS(status);
}

bool is_combining_mark(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_M_MASK) != 0;
}

std::vector<Token> tokenize(const NormalizedText& text) {
  std::vector<Token> tokens;
  const std::u32string& s = text.scalars();
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_arabic_letter(s[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < s.size() && (is_arabic_letter(s[i]) || is_combining_mark(s[i]))) ++i;
    tokens.push_back(Token{s.substr(start, i - start), start, i});
  }
  return tokens;
}

}  // namespace sindhi
