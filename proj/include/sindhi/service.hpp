#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "sindhi/io.hpp"
#include "sindhi/lexicon.hpp"

namespace httplib {
class Server;
}

namespace sindhi {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  LexiconSource lexicon;
  std::size_t max_text_bytes = std::size_t{1} << 20;
  std::string cors_origin;  // empty disables CORS headers
  std::string static_dir;   // optional UI assets served at /
};

struct Reply {
  int status = 200;
  std::string body;  // JSON
};

// JSON handlers for /api/check, /api/suggest and /api/health over a shared
// immutable lexicon. Handlers never mutate state; reload() swaps the
// lexicon pointer under a mutex.
class SpellService {
 public:
  explicit SpellService(ServiceConfig config);

  const ServiceConfig& config() const { return config_; }

  void set_lexicon(std::shared_ptr<const Lexicon> lexicon);
  std::shared_ptr<const Lexicon> lexicon() const;
  // Rebuilds from config().lexicon and swaps it in. Throws on failure and
  // keeps the previous lexicon.
  void reload();

  Reply check(std::string_view body) const;
  Reply suggest(const std::map<std::string, std::string>& query) const;
  Reply health() const;

  // Registers the routes (and CORS/static handling) on `server`.
  void mount(httplib::Server& server);

 private:
  ServiceConfig config_;
  mutable std::mutex mutex_;
  std::shared_ptr<const Lexicon> lexicon_;
};

}  // namespace sindhi
