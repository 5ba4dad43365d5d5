#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "sindhi/io.hpp"
#include "test_support.hpp"

using testing::CommandResult;
using testing::shell_quote;

namespace {

const std::string kCli = SINDHI_CLI;

CommandResult cli(const std::string& args) { return testing::run_command(shell_quote(kCli) + " " + args); }

std::string fixture(const std::string& name) { return shell_quote(testing::fixture_path(name)); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string words_flag() { return "--words " + fixture("cli/words.txt"); }

}  // namespace

TEST_CASE("encode") {
  auto r = cli("encode اي --kind sound");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x00\n");
  CHECK(cli("encode اسار").out == "x060D\n");
  CHECK(cli("encode ابتث --kind shape").out == "x0111\n");
  CHECK(cli("encode abc --kind sound").out == "x???\n");
  r = cli("encode ''");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("empty") != std::string::npos);
  CHECK(cli("encode اي --kind colour").exit_code == 2);
}

TEST_CASE("build") {
  const auto dir = testing::temp_dir("cli-build");
  const auto index = shell_quote(dir + "/words.idx");

  sindhi::write_file(dir + "/empty.txt", "");
  auto r = cli("build --words " + shell_quote(dir + "/empty.txt") + " --out " + index);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("words: 0") != std::string::npos);

  sindhi::write_file(dir + "/blank.txt", "سنڌ\n\nٻولي\n");
  r = cli("build --words " + shell_quote(dir + "/blank.txt") + " --out " + index);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);

  sindhi::write_file(dir + "/three.txt", "سنڌ\nٻولي\nڪتاب\n");
  r = cli("build --words " + shell_quote(dir + "/three.txt") + " --out " + index);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("words: 3") != std::string::npos);
  CHECK(sindhi::Lexicon::load(sindhi::read_file(dir + "/words.idx")).size() == 3);

  r = cli("build --words " + shell_quote(dir + "/three.txt") + " --out " + index + " --format json");
  CHECK(nlohmann::json::parse(r.out)["words"] == 3);

  // The saved index serves queries; mismatched tables are refused.
  r = cli("check --index " + index + " " + fixture("cli/misspelled.txt"));
  CHECK(r.exit_code == 1);
  sindhi::write_file(dir + "/tiny_sound.txt", "0 ا\n");
  r = cli("check --index " + index + " --sound-table " + shell_quote(dir + "/tiny_sound.txt") + " " +
          fixture("cli/clean.txt"));
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("index was built with tables") != std::string::npos);
  CHECK(cli("check --index " + index + " --words " + fixture("cli/words.txt") + " " + fixture("cli/clean.txt"))
            .exit_code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("check: exit codes and plain output") {
  auto r = cli("check " + words_flag() + " " + fixture("cli/clean.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());

  r = cli("check " + words_flag() + " " + fixture("cli/misspelled.txt"));
  CHECK(r.exit_code == 1);
  CHECK(lines(r.out) == std::vector<std::string>{"2:5:اسئر"});

  r = cli("check " + words_flag() + " " + fixture("cli/invalid_utf8.txt"));
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("byte offset 7") != std::string::npos);

  CHECK(cli("check " + words_flag() + " /nonexistent/file.txt").exit_code == 2);

  r = cli("check " + words_flag() + " " + fixture("cli/clean.txt") + " " + fixture("cli/misspelled.txt"));
  CHECK(r.exit_code == 1);
  CHECK(lines(r.out) == std::vector<std::string>{testing::fixture_path("cli/misspelled.txt") + ":2:5:اسئر"});
}

TEST_CASE("check: json output follows the schema") {
  const auto schema = testing::load_schema("check_report.schema.json");
  const auto r = cli("check --format json " + words_flag() + " " + fixture("cli/misspelled.txt"));
  CHECK(r.exit_code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(testing::schema_errors(schema, doc).empty());
  CHECK(doc["counts"]["misspelled"] == 1);
  CHECK(doc["counts"]["total"] == 5);
  CHECK_FALSE(testing::schema_errors(schema, nlohmann::json{{"tokens", 1}}).empty());
}

TEST_CASE("suggest") {
  const std::string shared = "--words " + fixture("sox_shared_code.txt");
  auto r = cli("suggest اسئر " + shared + " --merge-policy sound-only --max-distance 4 --max-results 20");
  CHECK(r.exit_code == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 15);
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].rfind(std::to_string(i + 1) + "\tSOX ::\t", 0) == 0);
  }

  r = cli("suggest ڪتاب " + shared);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());

  r = cli("suggest اسئر " + shared + " --max-results 1");
  CHECK(lines(r.out).size() == 1);

  r = cli("suggest اسئر " + shared + " --format json --max-results 3");
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(testing::schema_errors(testing::load_schema("suggestions.schema.json"), doc).empty());
  CHECK(doc["suggestions"].size() == 3);

  CHECK(cli("suggest اسئر " + shared + " --max-results 0").exit_code == 2);
  CHECK(cli("suggest اسئر " + shared + " --merge-policy everything").exit_code == 2);
  CHECK(cli("suggest اسئر").exit_code == 2);  // no lexicon
}

TEST_CASE("usage errors and table validation") {
  CHECK(cli("").exit_code == 2);
  CHECK(cli("frobnicate").exit_code == 2);
  CHECK(cli("check --bogus x").exit_code == 2);
  CHECK(cli("--help").exit_code == 0);
  const auto r = cli("validate-tables");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sound groups: 22") != std::string::npos);
}
