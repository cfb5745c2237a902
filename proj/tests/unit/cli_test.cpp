#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "build.hpp"
#include "commands.hpp"
#include "qpcohom/error.hpp"
#include "qpcohom/report.hpp"

using namespace qpc;
using testing_support::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qpcohom");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return Run{code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return read_file(std::string(QPCOHOM_GOLDEN_DIR) + "/" + name + ".txt"); }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "cli_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("human output matches the golden files") {
  struct Case {
    const char* golden;
    std::vector<std::string> args;
    int code;
  };
  std::vector<Case> cases{
      {"nw_e8", {"nw", fixture("e8_tilted.qp")}, 0},
      {"extend_e8", {"extend", fixture("e8_tilted.qp")}, 0},
      {"theorem_a_e8", {"theorem-a", fixture("e8_tilted.qp")}, 0},
      {"theorem_a_d4", {"theorem-a", fixture("d4_tilted.qp")}, 0},
      {"hh1_star_2", {"hh1", "--oracle", fixture("star_2.qp")}, 0},
      {"hh1_kronecker", {"hh1", "--oracle", fixture("kronecker.qp")}, 0},
      {"geom_separated", {"geom", "--reduce", "--oracle", fixture("separated_punctures.surf")}, 0},
      {"geom_square", {"geom", fixture("punctured_square.surf")}, 0},
      {"cuts_two_folds", {"cuts", fixture("two_folds.surf")}, 0},
      {"cuts_star_3", {"cuts", fixture("star_3.qp")}, 0},
      {"verify_e8", {"verify", fixture("e8_tilted.qp")}, 0},
      {"verify_corrupted", {"verify", fixture("e8_corrupted.qp")}, 1},
      {"verify_twin", {"verify", fixture("twin_binomial.qp")}, 0},
      {"verify_loop", {"verify", fixture("punctured_square_loop.surf")}, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.golden);
    Run r = run(c.args);
    CHECK(r.code == c.code);
    CHECK(r.out == golden(c.golden));
  }
}

TEST_CASE("every fixture verifies except the corrupted one") {
  for (const char* f : {"d4_tilted.qp", "e8_tilted.qp", "e8_with_potential.qp", "kronecker.qp", "star_1.qp",
                        "star_2.qp", "star_3.qp", "star_4.qp", "twin_binomial.qp", "twin_monomial.qp",
                        "digon_boundary.surf", "digon_folded.surf", "digon_internal.surf", "joined_punctures.surf",
                        "punctured_square.surf", "punctured_square_loop.surf", "separated_punctures.surf",
                        "two_folds.surf", "two_loops.surf"}) {
    CAPTURE(f);
    CHECK(run({"verify", fixture(f)}).code == cli::kOk);
  }
  CHECK(run({"verify", fixture("e8_corrupted.qp")}).code == cli::kViolated);
}

TEST_CASE("JSON output round trips and echoes the configuration") {
  Run r = run({"--json", "hh1", "--oracle", "--field", "fp:10007", fixture("star_2.qp")});
  CHECK(r.code == 0);
  Report rep = report_from_json(r.out);
  CHECK(rep.command == "hh1");
  CHECK(rep.field == "fp:10007");
  REQUIRE(rep.hh1.has_value());
  CHECK(rep.hh1->hh1 == 1);
  CHECK(rep.hh1->bar_hh1 == 1);
  CHECK(report_to_json(report_from_json(r.out)) == report_to_json(rep));
  field::use_rationals();
}

TEST_CASE("field selection from the environment") {
  setenv("QP_FIELD", "fp:101", 1);
  auto res = cli::run_command("hh1", fixture("kronecker.qp"), {});
  CHECK(res.report.field == "fp:101");
  CHECK(res.report.hh1->hh1 == 3);
  setenv("QP_FIELD", "bogus", 1);
  CHECK_THROWS_AS(cli::run_command("nw", fixture("kronecker.qp"), {}), InputError);
  unsetenv("QP_FIELD");
  field::use_rationals();
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({"verify", "/nonexistent.qp"}).code == cli::kInputError);
  CHECK(run({"frobnicate", fixture("e8_tilted.qp")}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"nw"}).code == cli::kInputError);
  CHECK(run({"hh1", "--field", "fp:4", fixture("star_1.qp")}).code == cli::kInputError);
  CHECK(run({"theorem-a", fixture("punctured_square.surf")}).code == cli::kInputError);
  std::string bad = write_temp("bad.qp", "[quiver]\nvertices = 1..2\narrow a : 1 -> 3\n");
  Run r = run({"nw", bad});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("resource caps have their own exit code") {
  std::string cyc = write_temp("cycle.qp", R"([quiver]
vertices = 1..3
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow c : 3 -> 1
arrow d : 1 -> 2
arrow e : 2 -> 3
arrow f : 3 -> 1
[potential]
potential W = a.b.c
)");
  CHECK(run({"hh1", "--max-len", "5", cyc}).code == cli::kResourceCap);
}

TEST_CASE("single-token mutations never crash the parser") {
  const std::vector<std::string> replacements{"",  "x",  "->", "-",    ".",   "1/0", "0", "999", "[quiver]",
                                              "=", "b(1,2)", "p", "new", "a.a", "+",   "*", "relation"};
  std::mt19937 rng(99);
  int parsed = 0, rejected = 0;
  for (const char* f : {"e8_tilted.qp", "d4_tilted.qp", "e8_with_potential.qp", "punctured_square.surf",
                        "two_folds.surf", "digon_internal.surf"}) {
    std::string text = read_file(fixture(f));
    std::vector<std::pair<std::size_t, std::size_t>> tokens;
    for (std::size_t i = 0; i < text.size();) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      tokens.emplace_back(i, j - i);
      i = j;
    }
    for (int trial = 0; trial < 150; ++trial) {
      auto [pos, len] = tokens[rng() % tokens.size()];
      std::string mutated = text;
      mutated.replace(pos, len, replacements[rng() % replacements.size()]);
      try {
        InputDocument d = parse_document(mutated);
        ++parsed;
        if (!d.is_geometric()) {
          try {
            (void)d.qp();
          } catch (const Error&) {
          }
        }
      } catch (const InputError&) {
        ++rejected;
      }
    }
  }
  CHECK(parsed > 0);
  CHECK(rejected > 0);
}
