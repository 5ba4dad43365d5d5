#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sindhi/lexicon.hpp"

namespace sindhi {

enum class Source { Both, Sox, Spx };
enum class MergePolicy { Union, SoundOnly, ShapeOnly };

std::string_view to_string(Source source);
std::string_view to_string(MergePolicy policy);
std::optional<MergePolicy> parse_merge_policy(std::string_view name);

struct Suggestion {
  std::string word;
  Source source = Source::Sox;
  std::size_t distance = 0;
  std::size_t rank = 0;  // 1-based

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

struct SuggestParams {
  std::size_t max_distance = 2;
  std::size_t max_results = 10;
  MergePolicy merge_policy = MergePolicy::Union;
};

// Throws InvalidRequestError if max_results is 0.
void validate(const SuggestParams& params);

// Levenshtein distance over Unicode scalars, unit costs.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::string_view a_utf8, std::string_view b_utf8);

// Lexicon words sharing the word's sound (SOX) or shape (SPX) code, the word
// itself excluded, in lexicon order.
std::vector<std::string_view> sox_candidates(std::u32string_view word, const Lexicon& lexicon);
std::vector<std::string_view> spx_candidates(std::u32string_view word, const Lexicon& lexicon);

// Merges SOX and SPX candidates per policy, drops those farther than
// max_distance, orders by (distance, BOTH < SOX < SPX, lexicon order) and
// keeps the first max_results.
std::vector<Suggestion> suggest(std::u32string_view word, const Lexicon& lexicon,
                                const SuggestParams& params = {});
std::vector<Suggestion> suggest(std::string_view word_utf8, const Lexicon& lexicon,
                                const SuggestParams& params = {});

}  // namespace sindhi
