#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include <future>
#include <thread>

#include "sindhi/service.hpp"
#include "test_support.hpp"

using namespace sindhi;
using nlohmann::json;

namespace {

std::shared_ptr<const Lexicon> shared_code_lexicon() {
  return std::make_shared<const Lexicon>(testing::fixture_lexicon("sox_shared_code.txt"));
}

std::unique_ptr<SpellService> loaded_service(ServiceConfig config = {}) {
  auto service = std::make_unique<SpellService>(std::move(config));
  service->set_lexicon(shared_code_lexicon());
  return service;
}

json body_of(const Reply& reply) { return json::parse(reply.body); }

}  // namespace

TEST_CASE("503 until a lexicon is loaded") {
  SpellService service(ServiceConfig{});
  CHECK(service.check(R"({"text":""})").status == 503);
  CHECK(service.suggest({{"word", "اسئر"}}).status == 503);
  CHECK(service.health().status == 503);
}

TEST_CASE("POST /api/check") {
  ServiceConfig config;
  config.max_text_bytes = 64;
  const auto owner = loaded_service(config);
  const SpellService& service = *owner;

  const auto empty = service.check(R"({"text":""})");
  CHECK(empty.status == 200);
  CHECK(body_of(empty)["tokens"] == json::array());

  const auto known = body_of(service.check(json{{"text", "اسير"}}.dump()));
  REQUIRE(known["tokens"].size() == 1);
  CHECK(known["tokens"][0] == json{{"surface", "اسير"}, {"start", 0}, {"end", 4}, {"misspelled", false}});
  CHECK(known["normalized_text"] == "اسير");

  const auto unknown = body_of(service.check(json{{"text", "اسئر"}}.dump()));
  REQUIRE(unknown["tokens"].size() == 1);
  CHECK(unknown["tokens"][0]["misspelled"] == true);
  CHECK(unknown["counts"] == json{{"total", 1}, {"misspelled", 1}});

  CHECK(service.check("{not json").status == 400);
  CHECK(service.check(R"({"txt":"x"})").status == 400);
  CHECK(service.check(R"({"text":5})").status == 400);
  CHECK(service.check(R"(["text"])").status == 400);
  CHECK(service.check(json{{"text", std::string(65, 'a')}}.dump()).status == 413);
  CHECK(service.check(std::string(200, ' ')).status == 413);
}

TEST_CASE("GET /api/suggest") {
  const auto owner = loaded_service();
  const SpellService& service = *owner;
  CHECK(service.suggest({{"word", ""}}).status == 400);
  CHECK(service.suggest({{"word", "\xd9\x80"}}).status == 400);  // tatweel only
  CHECK(service.suggest({}).status == 400);
  CHECK(service.suggest({{"word", "اسئر"}, {"max_results", "0"}}).status == 400);
  CHECK(service.suggest({{"word", "اسئر"}, {"max_distance", "-1"}}).status == 400);
  CHECK(service.suggest({{"word", "اسئر"}, {"merge_policy", "all"}}).status == 400);

  const auto shared = service.suggest(
      {{"word", "اسئر"}, {"merge_policy", "sound-only"}, {"max_distance", "4"}, {"max_results", "20"}});
  REQUIRE(shared.status == 200);
  const auto suggestions = body_of(shared)["suggestions"];
  REQUIRE(suggestions.size() == 15);
  for (std::size_t i = 0; i < suggestions.size(); ++i) {
    CHECK(suggestions[i]["source"] == "SOX");
    CHECK(suggestions[i]["rank"] == i + 1);
  }

  SpellService empty(ServiceConfig{});
  empty.set_lexicon(std::make_shared<const Lexicon>(testing::make_lexicon({})));
  const auto none = empty.suggest({{"word", "اسئر"}});
  CHECK(none.status == 200);
  CHECK(body_of(none)["suggestions"] == json::array());
}

TEST_CASE("GET /api/health") {
  const auto owner = loaded_service();
  const SpellService& service = *owner;
  const auto health = service.health();
  CHECK(health.status == 200);
  const auto body = body_of(health);
  CHECK(body["status"] == "ok");
  CHECK(body["lexicon_words"] == service.lexicon()->stats().words);
  CHECK(body["table_checksums"]["sound"].get<std::string>().size() == 8);
}

TEST_CASE("live HTTP server") {
  ServiceConfig config;
  config.cors_origin = "http://localhost:5173";
  config.lexicon.words = testing::fixture_path("sox_one_word.txt");
  config.lexicon.sound_table = testing::data_path("sound_table.txt");
  config.lexicon.shape_table = testing::data_path("shape_table.txt");
  SpellService service(config);
  service.set_lexicon(shared_code_lexicon());

  httplib::Server server;
  service.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  const auto check = client.Post("/api/check", json{{"text", "اسير اسئر"}}.dump(), "application/json");
  REQUIRE(check);
  CHECK(check->status == 200);
  CHECK(check->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");
  CHECK(json::parse(check->body)["counts"]["misspelled"] == 1);

  const auto query = "/api/suggest?word=" + httplib::detail::encode_query_param("اسئر") +
                     "&merge_policy=sound-only&max_distance=4&max_results=20";
  const auto first = client.Get(query);
  REQUIRE(first);
  CHECK(first->status == 200);
  CHECK(json::parse(first->body)["suggestions"].size() == 15);

  const auto preflight = client.Options("/api/check");
  REQUIRE(preflight);
  CHECK(preflight->status == 204);

  // Parallel identical requests return identical bodies.
  std::vector<std::future<std::string>> replies;
  for (int i = 0; i < 16; ++i) {
    replies.push_back(std::async(std::launch::async, [&] {
      httplib::Client c("127.0.0.1", port);
      auto r = c.Get(query);
      return r ? r->body : std::string();
    }));
  }
  for (auto& r : replies) CHECK(r.get() == first->body);

  // Reload swaps in the configured one-word list.
  const auto reload = client.Post("/api/admin/reload");
  REQUIRE(reload);
  CHECK(reload->status == 200);
  CHECK(json::parse(reload->body)["lexicon_words"] == 1);
  const auto after = client.Get(query);
  CHECK(json::parse(after->body)["suggestions"].size() == 1);

  server.stop();
  worker.join();
}

TEST_CASE("failed reload keeps the previous lexicon") {
  ServiceConfig config;
  config.lexicon.words = testing::fixture_path("does-not-exist.txt");
  config.lexicon.sound_table = testing::data_path("sound_table.txt");
  config.lexicon.shape_table = testing::data_path("shape_table.txt");
  auto service = loaded_service(config);
  CHECK_THROWS(service->reload());
  CHECK(service->lexicon()->size() == 15);
}
