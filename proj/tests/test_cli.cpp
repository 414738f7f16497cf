#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "canon/thinning.hpp"
#include "cli_run.hpp"
#include "doctest.h"

using canon::cli::RunConfig;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = canon::cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Tests run with the build tree as working directory; relative paths are fine.
std::string write_file(const std::string& name, const std::string& content) {
  std::ofstream f(name);
  f << content;
  return name;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("classification record matches the worked example byte for byte") {
  RunConfig cfg;
  cfg.command = "classify";
  cfg.coloring = "interval:2";
  cfg.ground = "2,4,8,16";
  cfg.profile = "alt";
  cfg.k = 2;
  cfg.n = 4;
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "classify profile=alt k=2 n=4 vacuous=false consistent={iii} excluded={i,ii,iv}");
  CHECK(ls[1] ==
        "witness pattern=i a={1,2} b={1,3} color_a=(1) color_b=(2) expect_equal=true "
        "reason=relation_biconditional_violated");
  CHECK(ls[2] ==
        "witness pattern=ii a={1,3} b={2,3} color_a=(2) color_b=(2) expect_equal=false "
        "reason=relation_biconditional_violated");
  CHECK(ls[3] ==
        "witness pattern=iv a={1,2} b={1,3} color_a=(1) color_b=(2) expect_equal=true "
        "reason=relation_biconditional_violated");

  // Determinism: the rerun must be byte-identical.
  const auto again = run_cli(cfg);
  CHECK(again.code == 0);
  CHECK(again.out == r.out);
}

TEST_CASE("ground sets load from a file with @path") {
  const auto path = write_file("cli_ground.txt", "2,4\n8,16\n");
  RunConfig cfg;
  cfg.command = "classify";
  cfg.coloring = "interval:2";
  cfg.ground = "@" + path;
  cfg.profile = "alt";
  cfg.k = 2;
  cfg.n = 4;
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(lines_of(r.out)[0] ==
        "classify profile=alt k=2 n=4 vacuous=false consistent={iii} excluded={i,ii,iv}");
}

TEST_CASE("column partition record matches the worked example") {
  const auto path = write_file("cli_schur.txt", "1 3\n1 1 -1\n");
  RunConfig cfg;
  cfg.command = "rado";
  cfg.matrix = path;
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(r.out == "rado columns=true I0={1,3} I1={2}\n");
}

TEST_CASE("identity check record matches the worked example") {
  const auto path = write_file("cli_blocks.txt", "0\n1\n");
  RunConfig cfg;
  cfg.command = "encode";
  cfg.blocks = path;
  cfg.j = "1,2";
  cfg.parity = "even";
  cfg.verify = true;
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(r.out == "encode blocks=2 J={1,2} parity=even equal=true lhs=2 rhs=2\n");

  cfg.verify = false;
  CHECK(run_cli(cfg).out == "encode blocks=2 J={1,2} parity=even jalt={2}\n");

  RunConfig bare;
  bare.command = "encode";
  bare.blocks = path;
  CHECK(run_cli(bare).out == "encode blocks=2 x={1,3}\n");
}

TEST_CASE("encode validates its flag combinations") {
  const auto path = write_file("cli_blocks.txt", "0\n1\n");
  RunConfig cfg;
  cfg.command = "encode";
  cfg.blocks = path;
  cfg.parity = "even";
  auto r = run_cli(cfg);
  CHECK(r.code == 1);
  CHECK(starts_with(r.err, "error:"));
  CHECK(r.out.empty());

  cfg.parity = "";
  cfg.j = "1,2";
  r = run_cli(cfg);
  CHECK(r.code == 1);
  CHECK(starts_with(r.err, "error:"));
}

TEST_CASE("irrational-slope coloring evaluates the frozen value list") {
  RunConfig cfg;
  cfg.command = "color";
  cfg.coloring = "sqrt2mod5";
  cfg.values = "1,2,3,4,5,6,90,91";
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(lines_of(r.out) == std::vector<std::string>{
                               "color x=1 color=(0)", "color x=2 color=(2)", "color x=3 color=(3)",
                               "color x=4 color=(4)", "color x=5 color=(4)", "color x=6 color=(0)",
                               "color x=90 color=(2)", "color x=91 color=(3)"});
}

TEST_CASE("product colorings concatenate their factors") {
  RunConfig cfg;
  cfg.command = "color";
  cfg.coloring = "product:interval:2+valuation:2";
  cfg.values = "12";
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(r.out == "color x=12 color=(3,2)\n");
}

TEST_CASE("table colorings read entries and an explicit default") {
  const auto path = write_file("cli_table.txt", "# two blocks\n1 1\n2 1\n3 2\n4 2\ndefault 3\n");
  RunConfig cfg;
  cfg.command = "color";
  cfg.coloring = "table:" + path;
  cfg.values = "2,9";
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(lines_of(r.out) == std::vector<std::string>{"color x=2 color=(1)", "color x=9 color=(3)"});

  const auto bad = write_file("cli_table_nodefault.txt", "1 1\n2 1\n");
  cfg.coloring = "table:" + bad;
  const auto rb = run_cli(cfg);
  CHECK(rb.code == 1);
  CHECK(starts_with(rb.err, "error:"));
}

TEST_CASE("thinning records match the worked examples") {
  RunConfig residue;
  residue.command = "thin";
  residue.algorithm = "residue";
  residue.ground = "1,2,3,4,5,6,7,8,9,10,11,12";
  residue.k = 2;
  CHECK(run_cli(residue).out == "thin algorithm=residue k=2 d=1 c=0 kept={1,2,4,5,8,9,10}\n");

  RunConfig interval;
  interval.command = "thin";
  interval.algorithm = "interval";
  interval.ground = "5,6,7";
  interval.base = 2;
  CHECK(run_cli(interval).out == "thin algorithm=interval base=2 kept={5}\n");
}

TEST_CASE("star thinning record agrees with the library call") {
  RunConfig cfg;
  cfg.command = "thin";
  cfg.algorithm = "star";
  cfg.ground = "1,2,5,14,41,122,365,1094";
  cfg.prime = 3;
  cfg.m = 4;
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "thin algorithm=star p=3 m=4 size=8 shortfall=false residue=1 "
        "valuations={0,1,2,3,4,5,6} kept={1,2,5,14,41,122,365,1094}\n");

  // Cross-check the record against a direct library run.
  std::vector<canon::Int> zs;
  for (long long v : {1, 2, 5, 14, 41, 122, 365, 1094}) zs.push_back(canon::to_int(v));
  const auto cert = canon::thinning::star_thin(canon::forms::GroundSet(zs), 3, 4);
  CHECK_FALSE(cert.shortfall);
  CHECK(cert.z.size() == 8);
  CHECK(canon::thinning::verify_star(cert));
}

TEST_CASE("a thinning shortfall keeps its partial result and signals exit 2") {
  RunConfig cfg;
  cfg.command = "thin";
  cfg.algorithm = "split";
  cfg.ground = "3,6,9";
  cfg.prime = 3;
  cfg.m = 3;
  const auto r = run_cli(cfg);
  CHECK(r.code == 2);
  CHECK(r.out == "thin algorithm=split p=3 m=3 case=b shortfall=true kept={3,6}\n");
  CHECK(r.err == "shortfall: split reached 2 of target 3\n");
}

TEST_CASE("single-equation records match the worked examples") {
  RunConfig cfg;
  cfg.command = "rado";
  cfg.coeffs = "1,1,-1";
  CHECK(run_cli(cfg).out ==
        "rado coeffs={1,1,-1} regular=true cond_i=false cond_ii=true cond_iii=false star_base=2\n");
  cfg.coeffs = "2,-1";
  CHECK(run_cli(cfg).out ==
        "rado coeffs={2,-1} regular=false cond_i=false cond_ii=true cond_iii=false star_base=2\n");
}

TEST_CASE("solution verdict and search records") {
  const auto mpath = write_file("cli_schur.txt", "1 3\n1 1 -1\n");
  RunConfig verdict;
  verdict.command = "rado";
  verdict.matrix = mpath;
  verdict.coloring = "interval:2";
  verdict.solution = "1,1,2";
  CHECK(run_cli(verdict).out == "verdict y={1,1,2} pattern=rainbow\n");

  const auto tpath = write_file("cli_table.txt", "1 1\n2 1\n3 2\n4 2\ndefault 3\n");
  RunConfig search;
  search.command = "rado";
  search.matrix = mpath;
  search.coloring = "table:" + tpath;
  search.want = "mono";
  search.search_bound = 4;
  const auto r = run_cli(search);
  CHECK(r.code == 0);
  CHECK(r.out == "solution y={1,1,2}\nsearch bound=4 want=mono count=1\n");

  search.coloring = "interval:2";
  CHECK(run_cli(search).out == "search bound=4 want=mono count=0\n");
}

TEST_CASE("enumeration oracle streams tables then a summary line") {
  RunConfig cfg;
  cfg.command = "oracle";
  cfg.n = 3;
  cfg.k = 2;
  cfg.m = 2;  // canonical search size
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  CHECK(lines_of(r.out) == std::vector<std::string>{
                               "er rgs={0,0,0} x={1,2} i={}", "er rgs={0,0,1} x={1,2} i={}",
                               "er rgs={0,1,0} x={1,2} i={}", "er rgs={0,1,1} x={1,2} i={}",
                               "er rgs={0,1,2} x={1,2} i={}", "oracle n=3 k=2 count=5"});
}

TEST_CASE("enumeration oracle reports blown budgets on the error stream") {
  RunConfig cfg;
  cfg.command = "oracle";
  cfg.n = 6;
  cfg.k = 3;
  const auto r = run_cli(cfg);
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(starts_with(r.err, "budget:"));
}

TEST_CASE("witness report record matches the worked example") {
  RunConfig cfg;
  cfg.command = "witness";
  cfg.coloring = "interval:2";
  cfg.ground = "1,2,4,8,16";
  cfg.profile = "altodd";
  cfg.k = 3;
  cfg.n = 5;
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "witness-report profile=altodd k=3 n=5 vacuous=false consistent={iii}");
  CHECK(ls[1] ==
        "excluded pattern=i a={1,2,3} b={1,2,4} color_a=(1) color_b=(2) expect_equal=true "
        "reason=relation_biconditional_violated");
  CHECK(ls[2] ==
        "excluded pattern=ii a={1,2,4} b={1,3,4} color_a=(2) color_b=(2) expect_equal=false "
        "reason=relation_biconditional_violated");
}

TEST_CASE("unknown commands and malformed flags fail with a diagnostic") {
  RunConfig cfg;
  cfg.command = "bogus";
  auto r = run_cli(cfg);
  CHECK(r.code == 1);
  CHECK(starts_with(r.err, "error:"));
  CHECK(r.out.empty());

  RunConfig color;
  color.command = "color";
  color.coloring = "interval:1";  // base must be >= 2
  color.values = "5";
  r = run_cli(color);
  CHECK(r.code == 1);
  CHECK(starts_with(r.err, "error:"));

  RunConfig ground;
  ground.command = "classify";
  ground.coloring = "interval:2";
  ground.ground = "4,2";  // must be strictly increasing
  ground.profile = "alt";
  ground.k = 2;
  ground.n = 2;
  r = run_cli(ground);
  CHECK(r.code == 1);
  CHECK(starts_with(r.err, "error:"));
}

TEST_CASE("human format renders prose instead of records") {
  RunConfig cfg;
  cfg.command = "color";
  cfg.coloring = "sqrt2mod5";
  cfg.values = "5";
  cfg.format = "human";
  const auto r = run_cli(cfg);
  CHECK(r.code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "coloring sqrt2mod5:");
  CHECK(ls[1] == "  5 -> (4)");

  cfg.format = "sideways";
  CHECK(run_cli(cfg).code == 1);
}
