// Command-line front end: encode, build, check, suggest, validate-tables, serve.
#include <CLI11.hpp>
#include <httplib.h>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sindhi/checker.hpp"
#include "sindhi/encoder.hpp"
#include "sindhi/errors.hpp"
#include "sindhi/io.hpp"
#include "sindhi/json.hpp"
#include "sindhi/service.hpp"
#include "sindhi/suggester.hpp"

#ifndef SINDHI_DATA_DIR
#define SINDHI_DATA_DIR "data"
#endif

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

enum class Format { Plain, Json };

struct Options {
  std::string sound_table = SINDHI_DATA_DIR "/sound_table.txt";
  std::string shape_table = SINDHI_DATA_DIR "/shape_table.txt";
  std::string index;
  std::string words;
  Format format = Format::Plain;
  sindhi::SuggestParams params;
  bool tables_given = false;
};

sindhi::LexiconSource lexicon_source(const Options& o) {
  sindhi::LexiconSource source;
  if (!o.index.empty()) source.index = o.index;
  if (!o.words.empty()) source.words = o.words;
  // A saved index carries its tables; only cross-check when asked to.
  if (source.words || o.tables_given) {
    source.sound_table = o.sound_table;
    source.shape_table = o.shape_table;
  }
  return source;
}

int run_encode(const Options& o, const std::string& word, sindhi::TableKind kind) {
  const std::string& path = kind == sindhi::TableKind::Sound ? o.sound_table : o.shape_table;
  const auto table = sindhi::load_table_file(path, kind);
  const auto normalized = sindhi::normalize(std::string_view(word));
  if (normalized.empty()) {
    std::cerr << "error: empty word\n";
    return kExitError;
  }
  std::cout << sindhi::encode(std::u32string_view(normalized.scalars()), table).text << '\n';
  return kExitClean;
}

int run_build(const Options& o, const std::string& out) {
  if (o.words.empty()) {
    std::cerr << "error: build needs --words\n";
    return kExitError;
  }
  sindhi::LexiconSource source;
  source.words = o.words;
  source.sound_table = o.sound_table;
  source.shape_table = o.shape_table;
  const auto lex = sindhi::load_lexicon(source);
  const std::string bytes = lex.save();
  sindhi::write_file(out, bytes);
  // The written file must load back before we report success.
  sindhi::Lexicon::load(sindhi::read_file(out));

  const auto stats = lex.stats();
  if (o.format == Format::Json) {
    std::cout << sindhi::to_json(stats).dump() << '\n';
  } else {
    std::printf("words: %zu\nduplicates merged: %zu\n", stats.words, stats.duplicates_merged);
    std::printf("sound buckets: %zu (max %zu, mean %.2f)\n", stats.sound.buckets, stats.sound.max_bucket,
                stats.sound.mean_bucket);
    std::printf("shape buckets: %zu (max %zu, mean %.2f)\n", stats.shape.buckets, stats.shape.max_bucket,
                stats.shape.mean_bucket);
  }
  return kExitClean;
}

int run_check(const Options& o, const std::vector<std::string>& files) {
  const auto lex = sindhi::load_lexicon(lexicon_source(o));
  int status = kExitClean;
  for (const auto& file : files) {
    sindhi::CheckReport report;
    try {
      report = sindhi::check(std::u32string_view(sindhi::decode_utf8(sindhi::read_file(file), file)), lex);
    } catch (const sindhi::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      status = kExitError;
      continue;
    }
    if (report.misspelled > 0 && status == kExitClean) status = kExitFindings;

    if (o.format == Format::Json) {
      auto doc = sindhi::to_json(report);
      doc["file"] = file;
      std::cout << doc.dump() << '\n';
      continue;
    }
    const std::u32string& text = report.text.scalars();
    std::size_t line = 1;
    std::size_t line_start = 0;
    std::size_t scanned = 0;
    for (const auto& t : report.tokens) {
      for (; scanned < t.token.start; ++scanned) {
        if (text[scanned] == U'\n') {
          ++line;
          line_start = scanned + 1;
        }
      }
      if (!t.misspelled) continue;
      if (files.size() > 1) std::cout << file << ':';
      std::cout << line << ':' << (t.token.start - line_start) << ':' << t.token.utf8() << '\n';
    }
  }
  return status;
}

int run_suggest(const Options& o, const std::string& word) {
  const auto lex = sindhi::load_lexicon(lexicon_source(o));
  const auto normalized = sindhi::normalize(std::string_view(word));
  if (normalized.empty()) {
    std::cerr << "error: empty word\n";
    return kExitError;
  }
  const auto suggestions = sindhi::suggest(std::u32string_view(normalized.scalars()), lex, o.params);
  if (o.format == Format::Json) {
    std::cout << nlohmann::json{{"word", normalized.utf8()}, {"suggestions", sindhi::to_json(suggestions)}}.dump()
              << '\n';
    return kExitClean;
  }
  for (const auto& s : suggestions) {
    std::cout << s.rank << '\t' << sindhi::to_string(s.source) << " ::\t" << s.distance << '\t' << s.word << '\n';
  }
  return kExitClean;
}

int run_validate(const Options& o) {
  const auto report =
      sindhi::validate_ship_tables(sindhi::read_file(o.sound_table), sindhi::read_file(o.shape_table));
  std::cout << report.describe();
  return report.ok() ? kExitClean : kExitFindings;
}

int run_serve(const Options& o, sindhi::ServiceConfig config) {
  config.lexicon = lexicon_source(o);
  sindhi::SpellService service(config);
  service.reload();
  httplib::Server server;
  service.mount(server);
  std::cerr << "listening on " << config.host << ':' << config.port << " ("
            << service.lexicon()->size() << " words)\n";
  if (!server.listen(config.host, config.port)) {
    std::cerr << "error: cannot listen on " << config.host << ':' << config.port << '\n';
    return kExitError;
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sindhi spell checker (SoundEx + ShapeEx suggestions)"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--sound-table", o.sound_table, "Sound group table")->each([&](const std::string&) {
    o.tables_given = true;
  });
  app.add_option("--shape-table", o.shape_table, "Shape group table")->each([&](const std::string&) {
    o.tables_given = true;
  });
  auto* index_opt = app.add_option("--index", o.index, "Saved lexicon index");
  auto* words_opt = app.add_option("--words", o.words, "Word list, one word per line");
  index_opt->excludes(words_opt);
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"plain", Format::Plain},
                                                                         {"json", Format::Json}}));
  app.add_option("--max-distance", o.params.max_distance, "Largest edit distance kept");
  app.add_option("--max-results", o.params.max_results, "Number of suggestions kept")
      ->check(CLI::PositiveNumber);
  std::string merge_policy = "union";
  app.add_option("--merge-policy", merge_policy, "Candidate sources")
      ->check(CLI::IsMember({"union", "sound-only", "shape-only"}));

  std::string word;
  auto* encode = app.add_subcommand("encode", "Print the code of a word");
  encode->fallthrough();
  encode->add_option("word", word)->required();
  std::string kind_name = "sound";
  encode->add_option("--kind", kind_name, "sound or shape")->check(CLI::IsMember({"sound", "shape"}));

  std::string out;
  auto* build = app.add_subcommand("build", "Build and save a lexicon index from --words");
  build->fallthrough();
  build->add_option("--out,-o", out, "Index file to write")->required();

  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "Flag misspelled words in UTF-8 files");
  check->fallthrough();
  check->add_option("files", files)->required();

  auto* suggest = app.add_subcommand("suggest", "Rank corrections for a word");
  suggest->fallthrough();
  suggest->add_option("word", word)->required();

  auto* validate = app.add_subcommand("validate-tables", "Check the group tables for coverage");
  validate->fallthrough();

  sindhi::ServiceConfig service_config;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->fallthrough();
  serve->add_option("--host", service_config.host, "Address to bind")->capture_default_str();
  serve->add_option("--port", service_config.port, "Port to listen on")->capture_default_str();
  serve->add_option("--max-text-bytes", service_config.max_text_bytes, "Largest accepted text in /api/check")->capture_default_str();
  serve->add_option("--cors-origin", service_config.cors_origin, "Allowed CORS origin");
  serve->add_option("--static-dir", service_config.static_dir, "Directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  o.params.merge_policy = *sindhi::parse_merge_policy(merge_policy);
  const auto kind = *sindhi::parse_table_kind(kind_name);
  try {
    if (*encode) return run_encode(o, word, kind);
    if (*build) return run_build(o, out);
    if (*check) return run_check(o, files);
    if (*suggest) return run_suggest(o, word);
    if (*validate) return run_validate(o);
    if (*serve) return run_serve(o, service_config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
