#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command = std::string(MCRES_CLI_PATH) + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string& scratch_dir() {
  static const std::string dir = [] {
    char pattern[] = "/tmp/mcres_cli_test_XXXXXX";
    const char* made = mkdtemp(pattern);
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path = scratch_dir() + "/" + name;
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
  out.close();
  return path;
}

const std::string& chain_file() {
  static const std::string path =
      write_file("chain.ideal", "vars 4\nx1 x2\nx2 x3\nx3^2\nx3 x4\n");
  return path;
}

const std::string& triangle_file() {
  static const std::string path =
      write_file("triangle.ideal", "vars 3\nx1 x2\nx2 x3\nx1 x3\n");
  return path;
}

const std::string& star_file() {
  static const std::string path =
      write_file("star.ideal", "vars 3\nx1 x2\nx1 x3\n");
  return path;
}

const std::string& projective_plane_file() {
  static const std::string path = write_file(
      "rp2.ideal",
      "vars 6\n"
      "x1 x2 x5\nx1 x2 x6\nx1 x3 x4\nx1 x3 x6\nx1 x4 x5\n"
      "x2 x3 x4\nx2 x3 x5\nx2 x4 x6\nx3 x5 x6\nx4 x5 x6\n");
  return path;
}

const std::string& broom_file() {
  static const std::string path =
      write_file("broom.tree", "tree 4 1\n2 1\n3 2\n4 2\n");
  return path;
}

const std::string& p3_file() {
  static const std::string path =
      write_file("p3.hyper", "hypergraph 3\n1 2\n2 3\n");
  return path;
}

}  // namespace

TEST_CASE("help and version") {
  auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("Usage:") != std::string::npos);
  CHECK(help.output.find("Exit codes:") != std::string::npos);
  CHECK(help.output.find("hypergraph") != std::string::npos);

  auto version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.output == "1.0.0\n");
}

TEST_CASE("betti renders the table in every format") {
  auto diagram = run_cli("betti " + chain_file());
  CHECK(diagram.exit_code == 0);
  CHECK(diagram.output ==
        "       0 1 2 3\n"
        "total: 1 4 4 1\n"
        "    0: 1 . . .\n"
        "    1: . 4 4 1\n");

  auto json = run_cli("--format json betti " + chain_file());
  CHECK(json.exit_code == 0);
  CHECK(json.output == "{\"n\":4,\"entries\":[[0,0,1],[1,2,4],[2,3,4],[3,4,1]]}");

  auto csv = run_cli("--format csv betti " + chain_file());
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "i,j,multiplicity\n0,0,1\n1,2,4\n2,3,4\n3,4,1\n");

  auto oracle = run_cli("--format json oracle " + chain_file());
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output == json.output);
}

TEST_CASE("order reports a certified order or the lack of one") {
  auto found = run_cli("order " + chain_file());
  CHECK(found.exit_code == 0);
  CHECK(found.output ==
        "decreasing-type order (4 generators):\n"
        "  1. x1*x2    (first step)\n"
        "  2. x2*x3    x3 strictly dominates the prefix\n"
        "  3. x3^2    x3 strictly dominates the prefix\n"
        "  4. x3*x4    x4 strictly dominates the prefix\n");

  auto none = run_cli("order " + triangle_file());
  CHECK(none.exit_code == 0);
  CHECK(none.output == "no decreasing-type order\n");
}

TEST_CASE("verify compares engine and oracle") {
  auto agree = run_cli("verify " + star_file());
  CHECK(agree.exit_code == 0);
  CHECK(agree.output == "engine and oracle agree\n");
}

TEST_CASE("oracle multigraded listing") {
  const std::string path = write_file("principal.ideal", "vars 1\nx1\n");
  auto result = run_cli("oracle " + path + " --multigraded");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "i=0  deg=(0)  1\ni=1  deg=(1)  1\n");
}

TEST_CASE("certification policy controls the fallback") {
  auto strict = run_cli("--policy strict betti " + projective_plane_file(), true);
  CHECK(strict.exit_code == 1);
  CHECK(strict.output.find("error: no certified mapping-cone step") !=
        std::string::npos);

  auto fallback = run_cli("betti " + projective_plane_file(), true);
  CHECK(fallback.exit_code == 0);
  CHECK(fallback.output.find("note: some subideals had no certified order") !=
        std::string::npos);

  auto even = run_cli("--format csv betti " + projective_plane_file());
  CHECK(even.exit_code == 0);
  CHECK(even.output.find("4,6,1") != std::string::npos);

  auto odd = run_cli("--field 3 --format csv betti " + projective_plane_file());
  CHECK(odd.exit_code == 0);
  CHECK(odd.output ==
        "i,j,multiplicity\n0,0,1\n1,3,10\n2,4,15\n3,5,6\n");
}

TEST_CASE("malformed input exits with code 2") {
  const std::string bad = write_file("bad.ideal", "vars 2\nx5\n");
  auto parse = run_cli("betti " + bad, true);
  CHECK(parse.exit_code == 2);
  CHECK(parse.output.find("error: line 2, column 1") != std::string::npos);

  auto missing = run_cli("betti " + scratch_dir() + "/nope.ideal", true);
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("cannot open") != std::string::npos);

  auto squares = run_cli("hyper " + p3_file() + " betti --squares 0", true);
  CHECK(squares.exit_code == 2);
  CHECK(squares.output.find("expected a positive vertex") != std::string::npos);

  auto powers = run_cli("hyper " + p3_file() + " betti --powers 2", true);
  CHECK(powers.exit_code == 2);
  CHECK(powers.output.find("expected v:a") != std::string::npos);

  auto no_subcommand = run_cli("", true);
  CHECK(no_subcommand.exit_code == 2);
  CHECK(!no_subcommand.output.empty());

  auto unknown_flag = run_cli("betti --bogus " + bad, true);
  CHECK(unknown_flag.exit_code == 2);
  CHECK(unknown_flag.output.find("--bogus") != std::string::npos);
}

TEST_CASE("dual renders the Alexander dual") {
  auto dual = run_cli("dual " + star_file());
  CHECK(dual.exit_code == 0);
  CHECK(dual.output == "vars 3\nx2 x3\nx1\n");

  auto not_squarefree = run_cli("dual " + chain_file(), true);
  CHECK(not_squarefree.exit_code == 2);
  CHECK(not_squarefree.output.find("squarefree") != std::string::npos);
}

TEST_CASE("tree subcommands") {
  auto invariants = run_cli("tree " + broom_file() + " invariants");
  CHECK(invariants.exit_code == 0);
  CHECK(invariants.output ==
        "leaves: 2\ndim: 3\npd: 2\ndepth: 2\nreg: 2\ncohen-macaulay: no\n");

  auto ideal = run_cli("tree " + broom_file() + " ideal");
  CHECK(ideal.exit_code == 0);
  CHECK(ideal.output == "vars 4\nx1 x2 x4\nx1 x2 x3\n");

  auto order = run_cli("tree " + broom_file() + " order");
  CHECK(order.exit_code == 0);
  CHECK(order.output ==
        "decreasing-type order (2 generators):\n"
        "  1. x1*x2*x3    (first step)\n"
        "  2. x1*x2*x4    x4 strictly dominates the prefix\n");

  auto simplicial = run_cli("tree " + broom_file() + " simplicial-check");
  CHECK(simplicial.exit_code == 0);
  CHECK(simplicial.output == "simplicial tree: yes\n");

  auto dual = run_cli("tree " + broom_file() + " dual");
  CHECK(dual.exit_code == 0);
  CHECK(dual.output == "dual reg: 2\ndual pd: 2\n");
}

TEST_CASE("hyper subcommands") {
  auto all_squares = run_cli("--format json hyper " + p3_file() +
                             " betti --squares all");
  CHECK(all_squares.exit_code == 0);
  CHECK(all_squares.output ==
        "{\"n\":3,\"entries\":[[0,0,1],[1,2,5],[2,3,5],[2,4,1],[3,4,1],"
        "[3,5,1]]}");

  auto mis = run_cli("hyper " + p3_file() + " mis");
  CHECK(mis.exit_code == 0);
  CHECK(mis.output == "2\n1 3\n");

  auto alpha = run_cli("hyper " + p3_file() + " alpha");
  CHECK(alpha.exit_code == 0);
  CHECK(alpha.output == "2\n");

  auto complex_text = run_cli("hyper " + p3_file() + " complex");
  CHECK(complex_text.exit_code == 0);
  CHECK(complex_text.output ==
        "complex on 3 vertices, 2 facets\n  {1 3}\n  {2}\n");

  auto multipartite = run_cli("hyper " + p3_file() + " multipartite-check");
  CHECK(multipartite.exit_code == 0);
  CHECK(multipartite.output ==
        "degree-sum test: pass\n"
        "complement is disjoint cliques: yes\n"
        "parts: 2\n");
}

TEST_CASE("power flags match the oracle on the expanded ideal") {
  auto via_flags = run_cli("--format json hyper " + p3_file() +
                           " betti --squares 1,3");
  CHECK(via_flags.exit_code == 0);

  const std::string expanded =
      write_file("p3_squares.ideal", "vars 3\nx1 x2\nx2 x3\nx1^2\nx3^2\n");
  auto via_oracle = run_cli("--format json oracle " + expanded);
  CHECK(via_oracle.exit_code == 0);
  CHECK(via_flags.output == via_oracle.output);

  auto with_power = run_cli("--format json hyper " + p3_file() +
                            " betti --powers 2:3 --subtables engine");
  CHECK(with_power.exit_code == 0);
  const std::string cubed =
      write_file("p3_cubed.ideal", "vars 3\nx1 x2\nx2 x3\nx2^3\n");
  auto cubed_oracle = run_cli("--format json oracle " + cubed);
  CHECK(with_power.output == cubed_oracle.output);
}
