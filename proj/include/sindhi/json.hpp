#pragma once

#include <json.hpp>

#include "sindhi/checker.hpp"
#include "sindhi/lexicon.hpp"
#include "sindhi/suggester.hpp"

namespace sindhi {

// {"word","source","distance","rank"}
nlohmann::json to_json(const Suggestion& suggestion);
nlohmann::json to_json(const std::vector<Suggestion>& suggestions);
// {"normalized_text","tokens":[{"surface","start","end","misspelled"}],
//  "counts":{"total","misspelled"}}
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const LexiconStats& stats);

}  // namespace sindhi
