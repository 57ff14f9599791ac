#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <cstdlib>
#include <string>
#include <vector>

#include "semithue/report_json.hh"
#include "support/corpus.hh"

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(SEMITHUE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string grammar_path(const char* name) {
  return std::string(SEMITHUE_GRAMMAR_DIR) + "/" + name;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("cli: oracle and generate") {
  auto full = run_cli("oracle " + grammar_path("g1.pg") + " --relation full");
  CHECK(full.exit_code == 0);
  CHECK(lines(full.output) == std::vector<std::string>{"w y", "x z"});

  auto leftmost = run_cli("oracle " + grammar_path("g1.pg") + " --relation leftmost");
  CHECK(leftmost.exit_code == 0);
  CHECK(lines(leftmost.output) == std::vector<std::string>{"w y"});

  auto gen = run_cli("generate " + grammar_path("g1.pg") + " --max-len 4 --max-depth 20");
  CHECK(gen.exit_code == 0);
  CHECK(lines(gen.output) == std::vector<std::string>{"w y"});

  auto ext = run_cli("generate " + grammar_path("g1.pg") + " --extended");
  CHECK(ext.exit_code == 0);
  CHECK(lines(ext.output) == std::vector<std::string>{"w y", "x z"});

  SECTION("output is deterministic") {
    CHECK(run_cli("compare " + grammar_path("g1.pg")).output ==
          run_cli("compare " + grammar_path("g1.pg")).output);
  }
}

TEST_CASE("cli: recognize") {
  auto no = run_cli("recognize " + grammar_path("g2.pg") + " x z");
  CHECK(no.exit_code == 1);
  auto no_lines = lines(no.output);
  REQUIRE(no_lines.size() >= 7);
  CHECK(no_lines[0] == "not recognized");
  CHECK(no_lines[2] == "  x z");
  CHECK(no_lines[3] == "  A z");
  CHECK(no_lines[4] == "  A B C");
  CHECK(no_lines[5] == "  E C");
  CHECK(no_lines[6] == "  E F");

  auto yes = run_cli("recognize " + grammar_path("g2.pg") + " x z --extended");
  CHECK(yes.exit_code == 0);
  CHECK(lines(yes.output)[0] == "recognized");

  auto wy = run_cli("recognize " + grammar_path("g1.pg") + " w y");
  CHECK(wy.exit_code == 0);
  CHECK(lines(wy.output)[0] == "recognized");

  SECTION("a non-sentence is a usage error") {
    CHECK(run_cli("recognize " + grammar_path("g1.pg") + " A B").exit_code == 2);
    CHECK(run_cli("recognize " + grammar_path("g1.pg") + " nope").exit_code == 2);
  }
}

TEST_CASE("cli: analysis commands") {
  auto iso = run_cli("isomorphism " + grammar_path("g1.pg") + " --depth 12");
  CHECK(iso.exit_code == 0);
  CHECK(iso.output.find("PASS") != std::string::npos);

  auto cmp = run_cli("compare " + grammar_path("g2.pg"));
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.output.find("recognized:           (empty)") != std::string::npos);

  auto tr = run_cli("trace " + grammar_path("st.pg"));
  CHECK(tr.exit_code == 0);
  CHECK(tr.output.find("move 5 via S -> t") != std::string::npos);
  CHECK(tr.output.find("move 6") != std::string::npos);

  auto trs = run_cli("trace " + grammar_path("g1.pg") + " --sentence w y");
  CHECK(trs.exit_code == 0);
  CHECK(trs.output.find("move 7") != std::string::npos);
}

TEST_CASE("cli: transform") {
  auto emit = run_cli("transform " + grammar_path("g2.pg") + " --emit");
  CHECK(emit.exit_code == 0);
  semithue::Grammar parsed = semithue::parse_grammar(emit.output);
  CHECK(semithue::is_normal(parsed));
  CHECK(semithue::testing::equivalent_up_to_fresh(
      parsed, semithue::prepare(semithue::testing::g2()).grammar));
}

TEST_CASE("cli: error handling") {
  CHECK(run_cli("oracle /no/such/file.pg").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("oracle " + grammar_path("g1.pg") + " --relation sideways").exit_code ==
        2);
  CHECK(run_cli("generate " + grammar_path("g1.pg") + " --max-depth 0").exit_code == 2);

  // an invalid grammar file is a validation error
  std::string bad =
      (std::filesystem::temp_directory_path() / "semithue_bad_test.pg").string();
  FILE* f = fopen(bad.c_str(), "w");
  REQUIRE(f != nullptr);
  fputs("initial: A\nterminal: x\nx -> A\n", f);
  fclose(f);
  CHECK(run_cli("generate " + bad).exit_code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("cli: structured output round-trips") {
  using semithue::json;

  auto iso = run_cli("isomorphism " + grammar_path("g1.pg") + " --format structured");
  CHECK(iso.exit_code == 0);
  json j = json::parse(iso.output);
  auto report = j.get<semithue::IsomorphismReport>();
  json again = report;
  again["command"] = "isomorphism";
  CHECK(again == j);

  auto cmp = run_cli("compare " + grammar_path("g1.pg") + " --format structured");
  json jc = json::parse(cmp.output);
  auto comparison = jc.get<semithue::LanguageComparison>();
  json cagain = comparison;
  cagain["command"] = "compare";
  CHECK(cagain == jc);

  auto gen = run_cli("generate " + grammar_path("g1.pg") + " --format structured");
  json jg = json::parse(gen.output);
  CHECK(jg["sentences"] == json::array({"w y"}));
  CHECK(jg["complete"] == true);
}
