#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sindhi/lexicon.hpp"
#include "sindhi/suggester.hpp"
#include "sindhi/text.hpp"

namespace sindhi {

struct FlaggedToken {
  Token token;
  bool misspelled = false;

  friend bool operator==(const FlaggedToken&, const FlaggedToken&) = default;
};

struct CheckReport {
  NormalizedText text;
  std::vector<FlaggedToken> tokens;
  std::size_t misspelled = 0;

  std::size_t total() const { return tokens.size(); }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

CheckReport check(std::string_view text_utf8, const Lexicon& lexicon,
                  const NormalizeOptions& options = {});
CheckReport check(std::u32string_view text, const Lexicon& lexicon,
                  const NormalizeOptions& options = {});

// Suggestions for the token at `position`. Throws InvalidRequestError when
// the position is out of range or the token is spelled correctly.
std::vector<Suggestion> suggestions_for(const CheckReport& report, std::size_t position,
                                        const Lexicon& lexicon, const SuggestParams& params = {});

// Replaces the scalars [start, end) of `text` with `replacement`.
std::u32string replace_range(std::u32string_view text, std::size_t start, std::size_t end,
                             std::u32string_view replacement);

}  // namespace sindhi
