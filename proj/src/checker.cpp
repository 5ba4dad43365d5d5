#include "sindhi/checker.hpp"

#include "sindhi/errors.hpp"

namespace sindhi {

CheckReport check(std::u32string_view text, const Lexicon& lexicon, const NormalizeOptions& options) {
  CheckReport report;
  report.text = normalize(text, options);
  for (Token& token : tokenize(report.text)) {
    const bool misspelled = !lexicon.contains(std::u32string_view(token.surface));
    report.misspelled += misspelled ? 1 : 0;
    report.tokens.push_back(FlaggedToken{std::move(token), misspelled});
  }
  return report;
}

CheckReport check(std::string_view text_utf8, const Lexicon& lexicon, const NormalizeOptions& options) {
  return check(std::u32string_view(decode_utf8(text_utf8)), lexicon, options);
}

std::vector<Suggestion> suggestions_for(const CheckReport& report, std::size_t position,
                                        const Lexicon& lexicon, const SuggestParams& params) {
  if (position >= report.tokens.size()) {
    throw InvalidRequestError("token position " + std::to_string(position) + " is out of range (" +
                              std::to_string(report.tokens.size()) + " tokens)");
  }
  const FlaggedToken& flagged = report.tokens[position];
  if (!flagged.misspelled) {
    throw InvalidRequestError("token " + std::to_string(position) + " is not misspelled");
  }
  return suggest(std::u32string_view(flagged.token.surface), lexicon, params);
}

std::u32string replace_range(std::u32string_view text, std::size_t start, std::size_t end,
                             std::u32string_view replacement) {
  if (start > end || end > text.size()) throw InvalidRequestError("replacement range out of bounds");
  std::u32string out;
  out.reserve(text.size() - (end - start) + replacement.size());
  out.append(text.substr(0, start));
  out.append(replacement);
  out.append(text.substr(end));
  return out;
}

}  // namespace sindhi
