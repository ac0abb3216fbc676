#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "retell/cli.h"
#include "test_util.h"

using retell::testing::read_paragraph;
using retell::testing::source_path;
namespace cli = retell::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "retell_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("validate") {
  Run ok = run({"validate", source_path("fixtures/fox_and_grapes.story")});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.find(": ok") != std::string::npos);

  Run bad = run({"validate", source_path("tests/data/unbound_role.story")});
  CHECK(bad.code == cli::kExitValidation);
  CHECK(bad.err.find("error [proposition:p1]: mandatory role Theme unbound") != std::string::npos);

  CHECK(run({"validate", "/nonexistent.story"}).code == cli::kExitIo);
  CHECK(run({"validate"}).code == cli::kExitIo);
  CHECK(run({"frobnicate"}).code == cli::kExitIo);
}

TEST_CASE("generate") {
  const std::string fox = source_path("fixtures/fox_and_grapes.story");
  Run neutral = run({"generate", fox});
  CHECK(neutral.code == cli::kExitOk);
  CHECK(neutral.out == read_paragraph("fixtures/fig1_personage.txt") + "\n");

  Run shy = run({"generate", fox, "--voice", "shy", "--seed", "34", "--trace"});
  CHECK(shy.code == cli::kExitOk);
  CHECK(shy.out.find("tr-tr-trellis") != std::string::npos);
  CHECK(shy.err.find("stuttering") != std::string::npos);
  CHECK(run({"generate", fox, "--voice", "SHY", "--seed", "34"}).out == shy.out);

  Run trees = run({"generate", fox, "--emit-dsynts"});
  CHECK(trees.out.find("<dsynts-document sentences=\"8\">") != std::string::npos);

  auto voice = scratch("gruff.voice");
  {
    std::ofstream f(voice);
    f << "name GRUFF\nexclamation: 1\n";
  }
  Run gruff = run({"generate", fox, "--voice", voice.string()});
  CHECK(gruff.code == cli::kExitOk);
  CHECK(gruff.out.find("trellis!") != std::string::npos);

  auto out_file = scratch("fox.txt");
  CHECK(run({"generate", fox, "-o", out_file.string()}).out.empty());
  std::ifstream in(out_file);
  std::string line;
  std::getline(in, line);
  CHECK(line == read_paragraph("fixtures/fig1_personage.txt"));

  CHECK(run({"generate", fox, "--voice", "grumpy"}).code == cli::kExitIo);
  CHECK(run({"generate", fox, "--seed", "x"}).code == cli::kExitIo);
  CHECK(run({"generate", source_path("tests/data/unbound_role.story")}).code ==
        cli::kExitValidation);
}

TEST_CASE("eval") {
  const std::string c = source_path("fixtures/fig1_personage.txt");
  const std::string r = source_path("fixtures/fig1_scheherazade.txt");
  auto json = scratch("report.json");
  Run ok = run({"eval", "--candidate", c, "--reference", r, "--label", "fox", "--json",
                json.string()});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.find("fox") != std::string::npos);
  CHECK(ok.out.find("35") != std::string::npos);
  std::ifstream in(json);
  auto j = nlohmann::json::parse(in);
  CHECK(j["rows"][0]["levenshtein"] == 35);

  CHECK(run({"eval", "--candidate", c}).code == cli::kExitIo);
  CHECK(run({"eval", "--candidate", c, "--candidate", c, "--reference", r}).code == cli::kExitIo);
  CHECK(run({"eval", "--candidate", c, "--reference", "/nonexistent"}).code == cli::kExitIo);
}

TEST_CASE("pipeline") {
  Run ok = run({"pipeline", source_path("fixtures/lion_and_boar.story"), "--reference",
                source_path("fixtures/fig5_personage.txt")});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.find("lion_and_boar") != std::string::npos);
  CHECK(ok.out.find("1.0000") != std::string::npos);
}
