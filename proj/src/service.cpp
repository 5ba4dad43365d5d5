#include "sindhi/service.hpp"

#include <httplib.h>

#include <charconv>
#include <cstdio>

#include "sindhi/checker.hpp"
#include "sindhi/errors.hpp"
#include "sindhi/json.hpp"
#include "sindhi/suggester.hpp"

namespace sindhi {
namespace {

Reply error_reply(int status, std::string_view message) {
  return Reply{status, nlohmann::json{{"error", message}}.dump()};
}

std::string hex32(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

std::optional<std::size_t> parse_count(const std::string& text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

SpellService::SpellService(ServiceConfig config) : config_(std::move(config)) {}

void SpellService::set_lexicon(std::shared_ptr<const Lexicon> lexicon) {
  std::lock_guard lock(mutex_);
  lexicon_ = std::move(lexicon);
}

std::shared_ptr<const Lexicon> SpellService::lexicon() const {
  std::lock_guard lock(mutex_);
  return lexicon_;
}

void SpellService::reload() {
  auto fresh = std::make_shared<const Lexicon>(load_lexicon(config_.lexicon));
  set_lexicon(std::move(fresh));
}

Reply SpellService::check(std::string_view body) const {
  const auto lex = lexicon();
  if (!lex) return error_reply(503, "index not loaded");
  if (body.size() > config_.max_text_bytes + 64) return error_reply(413, "request body too large");

  nlohmann::json request;
  try {
    request = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    return error_reply(400, std::string("malformed JSON: ") + e.what());
  }
  if (!request.is_object() || !request.contains("text") || !request["text"].is_string()) {
    return error_reply(400, "body must be an object with a string field \"text\"");
  }
  const auto& text = request["text"].get_ref<const std::string&>();
  if (text.size() > config_.max_text_bytes) return error_reply(413, "text exceeds the size cap");

  try {
    return Reply{200, to_json(sindhi::check(std::string_view(text), *lex)).dump()};
  } catch (const DecodeError& e) {
    return error_reply(400, e.what());
  }
}

Reply SpellService::suggest(const std::map<std::string, std::string>& query) const {
  const auto lex = lexicon();
  if (!lex) return error_reply(503, "index not loaded");

  SuggestParams params;
  if (const auto it = query.find("max_distance"); it != query.end()) {
    const auto v = parse_count(it->second);
    if (!v) return error_reply(400, "max_distance must be a non-negative integer");
    params.max_distance = *v;
  }
  if (const auto it = query.find("max_results"); it != query.end()) {
    const auto v = parse_count(it->second);
    if (!v || *v < 1) return error_reply(400, "max_results must be a positive integer");
    params.max_results = *v;
  }
  if (const auto it = query.find("merge_policy"); it != query.end()) {
    const auto policy = parse_merge_policy(it->second);
    if (!policy) return error_reply(400, "merge_policy must be union, sound-only or shape-only");
    params.merge_policy = *policy;
  }

  const auto it = query.find("word");
  if (it == query.end()) return error_reply(400, "missing word");
  try {
    const NormalizedText word = normalize(std::string_view(it->second));
    if (word.empty()) return error_reply(400, "word is empty");
    const auto suggestions = sindhi::suggest(std::u32string_view(word.scalars()), *lex, params);
    return Reply{200, nlohmann::json{{"word", word.utf8()}, {"suggestions", to_json(suggestions)}}.dump()};
  } catch (const DecodeError& e) {
    return error_reply(400, e.what());
  }
}

Reply SpellService::health() const {
  const auto lex = lexicon();
  if (!lex) return Reply{503, nlohmann::json{{"status", "unavailable"}}.dump()};
  return Reply{200, nlohmann::json{{"status", "ok"},
                                   {"lexicon_words", lex->size()},
                                   {"table_checksums",
                                    {{"sound", hex32(lex->meta().sound_checksum)},
                                     {"shape", hex32(lex->meta().shape_checksum)}}}}
                        .dump()};
}

void SpellService::mount(httplib::Server& server) {
  const auto send = [](httplib::Response& res, const Reply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, "application/json; charset=utf-8");
  };

  server.Post("/api/check", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, check(req.body));
  });
  server.Get("/api/suggest", [this, send](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [key, value] : req.params) query.emplace(key, value);
    send(res, suggest(query));
  });
  server.Get("/api/health", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, health());
  });
  server.Post("/api/admin/reload", [this, send](const httplib::Request&, httplib::Response& res) {
    try {
      reload();
      send(res, health());
    } catch (const std::exception& e) {
      send(res, error_reply(500, e.what()));
    }
  });

  if (!config_.cors_origin.empty()) {
    const std::string origin = config_.cors_origin;
    server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }
  if (!config_.static_dir.empty()) server.set_mount_point("/", config_.static_dir);
}

}  // namespace sindhi
