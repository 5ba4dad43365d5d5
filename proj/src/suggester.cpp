#include "sindhi/suggester.hpp"

#include <algorithm>
#include <unordered_map>

#include "sindhi/errors.hpp"
#include "sindhi/text.hpp"

namespace sindhi {
namespace {

std::vector<std::string_view> candidates(std::u32string_view word, const Lexicon& lexicon,
                                         TableKind kind) {
  const std::string self = encode_utf8(word);
  std::vector<std::string_view> out;
  for (WordId id : lexicon.bucket_ids(encode(word, lexicon.table(kind)))) {
    if (lexicon.word(id) != self) out.push_back(lexicon.word(id));
  }
  return out;
}

int priority(Source source) {
  switch (source) {
    case Source::Both: return 0;
    case Source::Sox: return 1;
    case Source::Spx: return 2;
  }
  return 3;
}

}  // namespace

std::string_view to_string(Source source) {
  switch (source) {
    case Source::Both: return "BOTH";
    case Source::Sox: return "SOX";
    case Source::Spx: return "SPX";
  }
  return "?";
}

std::string_view to_string(MergePolicy policy) {
  switch (policy) {
    case MergePolicy::Union: return "union";
    case MergePolicy::SoundOnly: return "sound-only";
    case MergePolicy::ShapeOnly: return "shape-only";
  }
  return "?";
}

std::optional<MergePolicy> parse_merge_policy(std::string_view name) {
  if (name == "union") return MergePolicy::Union;
  if (name == "sound-only") return MergePolicy::SoundOnly;
  if (name == "shape-only") return MergePolicy::ShapeOnly;
  return std::nullopt;
}

void validate(const SuggestParams& params) {
  if (params.max_results < 1) throw InvalidRequestError("max-results must be at least 1");
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // One row over the shorter string.
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::size_t edit_distance(std::string_view a_utf8, std::string_view b_utf8) {
  return edit_distance(std::u32string_view(decode_utf8(a_utf8)),
                       std::u32string_view(decode_utf8(b_utf8)));
}

std::vector<std::string_view> sox_candidates(std::u32string_view word, const Lexicon& lexicon) {
  return candidates(word, lexicon, TableKind::Sound);
}

std::vector<std::string_view> spx_candidates(std::u32string_view word, const Lexicon& lexicon) {
  return candidates(word, lexicon, TableKind::Shape);
}

std::vector<Suggestion> suggest(std::u32string_view word, const Lexicon& lexicon,
                                const SuggestParams& params) {
  if (word.empty()) throw EmptyInputError("cannot suggest for an empty word");
  validate(params);

  struct Candidate {
    WordId id;
    Source source;
  };
  std::unordered_map<WordId, std::size_t> slot;
  std::vector<Candidate> merged;
  const std::string self = encode_utf8(word);
  const auto collect = [&](TableKind kind, Source source) {
    for (WordId id : lexicon.bucket_ids(encode(word, lexicon.table(kind)))) {
      if (lexicon.word(id) == self) continue;
      auto [it, inserted] = slot.emplace(id, merged.size());
      if (inserted) {
        merged.push_back({id, source});
      } else if (merged[it->second].source != source) {
        merged[it->second].source = Source::Both;
      }
    }
  };
  if (params.merge_policy != MergePolicy::ShapeOnly) collect(TableKind::Sound, Source::Sox);
  if (params.merge_policy != MergePolicy::SoundOnly) collect(TableKind::Shape, Source::Spx);

  std::vector<Suggestion> out;
  std::vector<WordId> ids;
  for (const Candidate& c : merged) {
    const std::string_view candidate = lexicon.word(c.id);
    const std::size_t distance = edit_distance(word, std::u32string_view(decode_utf8(candidate)));
    if (distance > params.max_distance) continue;
    out.push_back(Suggestion{std::string(candidate), c.source, distance, 0});
    ids.push_back(c.id);
  }

  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Suggestion& a = out[x];
    const Suggestion& b = out[y];
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.source != b.source) return priority(a.source) < priority(b.source);
    return ids[x] < ids[y];
  });

  std::vector<Suggestion> ranked;
  const std::size_t n = std::min(order.size(), params.max_results);
  ranked.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ranked.push_back(std::move(out[order[i]]));
    ranked.back().rank = i + 1;
  }
  return ranked;
}

std::vector<Suggestion> suggest(std::string_view word_utf8, const Lexicon& lexicon,
                                const SuggestParams& params) {
  return suggest(std::u32string_view(decode_utf8(word_utf8)), lexicon, params);
}

}  // namespace sindhi
