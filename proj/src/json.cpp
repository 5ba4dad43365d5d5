#include "sindhi/json.hpp"

namespace sindhi {

nlohmann::json to_json(const Suggestion& s) {
  return {{"word", s.word}, {"source", to_string(s.source)}, {"distance", s.distance}, {"rank", s.rank}};
}

nlohmann::json to_json(const std::vector<Suggestion>& suggestions) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : suggestions) out.push_back(to_json(s));
  return out;
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json tokens = nlohmann::json::array();
  for (const auto& t : report.tokens) {
    tokens.push_back({{"surface", t.token.utf8()},
                      {"start", t.token.start},
                      {"end", t.token.end},
                      {"misspelled", t.misspelled}});
  }
  return {{"normalized_text", report.text.utf8()},
          {"tokens", std::move(tokens)},
          {"counts", {{"total", report.total()}, {"misspelled", report.misspelled}}}};
}

nlohmann::json to_json(const LexiconStats& stats) {
  const auto index = [](const IndexStats& s) {
    return nlohmann::json{{"buckets", s.buckets}, {"max_bucket", s.max_bucket}, {"mean_bucket", s.mean_bucket}};
  };
  return {{"words", stats.words},
          {"duplicates_merged", stats.duplicates_merged},
          {"sound_index", index(stats.sound)},
          {"shape_index", index(stats.shape)}};
}

}  // namespace sindhi
