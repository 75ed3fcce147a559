#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"

#include "bm/enumerate.hpp"
#include "bm/errors.hpp"
#include "bm/level_io.hpp"
#include "bm/square.hpp"

namespace {

using namespace bm;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("bm_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string scratch_file(const std::string& name) {
  return (scratch_dir() / name).string();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string err_path = scratch_file("stderr_" + std::to_string(counter++));
  const std::string cmd =
      std::string(BM_CLI_PATH) + " " + args + " 2>" + err_path;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
    result.out.append(buf, n);
  const int status = ::pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream err_buf;
  err_buf << err.rdbuf();
  result.err = err_buf.str();
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count_lines(const std::string& text) {
  return std::size_t(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("level files round trip through serialize and read") {
  for (auto [alpha, beta] : {std::pair{1, 3}, {2, 2}}) {
    const auto rels = enumerate_relations(alpha, beta);
    const std::string text = serialize_level(alpha, beta, rels);
    std::istringstream in(text);
    const LevelFile level = read_level(in, /*validate=*/true);
    CHECK(level.alpha == alpha);
    CHECK(level.beta == beta);
    CHECK(level.relations == rels);
  }
}

TEST_CASE("level reader rejects count mismatches and bad lines") {
  const auto rels = enumerate_relations(1, 2);
  std::string text = serialize_level(1, 2, rels);

  {  // tampered header count
    std::string bad = text;
    const auto pos = bad.find("count=15");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 8, "count=14");
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_level(in, true), ParseError);
  }
  {  // truncated body
    std::string bad = text.substr(0, text.find('\n', text.find('\n') + 1) + 1);
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_level(in, true), ParseError);
  }
  {  // invalid relation line
    std::string bad = text;
    bad += "a1 b1 a1 b1; a1 b2 A1 B2\n";
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_level(in, true), ParseError);
  }
  {  // garbage header
    std::istringstream in(std::string("#bm alpha=1\n"));
    CHECK_THROWS_AS(read_level(in, true), ParseError);
  }
}

TEST_CASE("digest is deterministic and sensitive") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("bm") != fnv1a64("mb"));
}

TEST_CASE("cli: gs prints the canonical square list") {
  const auto res = run_cli("gs 1 1");
  CHECK(res.code == 0);
  CHECK(count_lines(res.out) == 5);
  CHECK(res.out.find("a1 b1 A1 B1") != std::string::npos);

  std::string expected;
  for (const auto& s : all_squares(2, 1)) expected += to_string(s) + "\n";
  const auto res21 = run_cli("gs 2 1");
  CHECK(res21.out == expected);
}

TEST_CASE("cli: enum count lines are exact") {
  CHECK(run_cli("enum 1 1 --count-only").out == "R(1,1) = 3\n");
  CHECK(run_cli("enum 2 2 --count-only").out == "R(2,2) = 541\n");
}

TEST_CASE("cli: enum writes a level file that matches the library") {
  const std::string path = scratch_file("r12.bm");
  const auto res = run_cli("enum 1 2 --out " + path);
  CHECK(res.code == 0);
  CHECK(slurp(path) == serialize_level(1, 2, enumerate_relations(1, 2)));
  // the stderr report repeats the relation count and the file digest
  CHECK(res.err.find("count=15") != std::string::npos);
  CHECK(res.err.find("digest=" + file_digest_hex(path)) != std::string::npos);

  const auto verify = run_cli("verify " + path);
  CHECK(verify.code == 0);
  CHECK(verify.out.find("VERIFIED") == 0);

  // Tampering flips verification to exit code 1.
  std::ofstream append(path, std::ios::app);
  append << "a1 b1 A1 B1; a1 b2 A1 B2\n";
  append.close();
  const auto tampered = run_cli("verify " + path);
  CHECK(tampered.code == 1);
  CHECK(tampered.out.find("FAIL") == 0);
}

TEST_CASE("cli: psi levels agree with enum byte for byte") {
  const std::string dir = (scratch_dir() / "levels").string();
  std::filesystem::create_directories(dir);
  const auto res = run_cli("psi --from 1 --to 3 --out-dir " + dir);
  CHECK(res.code == 0);
  CHECK(res.out.find("|R(1,2)| = (3+2*1)*|R(1,1)| = 5*3 = 15") !=
        std::string::npos);
  CHECK(res.out.find("|R(1,3)| = (3+2*2)*|R(1,2)| = 7*15 = 105") !=
        std::string::npos);

  const std::string enum_path = scratch_file("r12_enum.bm");
  run_cli("enum 1 2 --out " + enum_path);
  CHECK(slurp(dir + "/r1_2.bm") == slurp(enum_path));
  CHECK(count_lines(slurp(dir + "/r1_3.bm")) == 106);  // header + 105
}

TEST_CASE("cli: psi count-only prints the recurrence through beta = 7") {
  const auto res = run_cli("psi --from 1 --to 7 --count-only");
  CHECK(res.code == 0);
  CHECK(res.out.find("|R(1,7)| = (3+2*6)*|R(1,6)| = 15*135135 = 2027025\n") !=
        std::string::npos);
}

TEST_CASE("cli: psi accepts a level file as input") {
  const std::string path = scratch_file("r13_in.bm");
  run_cli("enum 1 3 --out " + path);
  const std::string dir = (scratch_dir() / "levels_in").string();
  std::filesystem::create_directories(dir);
  const auto res =
      run_cli("psi --from 3 --to 4 --in " + path + " --out-dir " + dir);
  CHECK(res.code == 0);
  CHECK(slurp(dir + "/r1_4.bm") ==
        serialize_level(1, 4, enumerate_relations(1, 4)));

  // An incomplete level is rejected.
  const std::string partial = scratch_file("partial.bm");
  std::ofstream out(partial, std::ios::binary);
  out << level_header(1, 1, 1) << "\n" << "a1 b1 A1 B1\n";
  out.close();
  const auto bad = run_cli("psi --from 1 --to 2 --in " + partial +
                           " --out-dir " + dir);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("incomplete") != std::string::npos);
}

TEST_CASE("cli: nf prints the normal form, empty line for the identity") {
  const auto res = run_cli("nf --preset gamma30 --word \"a1 a1 b1 a1 b2 A1\"");
  CHECK(res.code == 0);
  CHECK(res.out == "\n");
  const auto ca = run_cli("nf --preset gamma5 --word \"b1 a1\"");
  CHECK(ca.out == "A1 b1\n");
}

TEST_CASE("cli: abelianize prints the invariants") {
  const auto res = run_cli("abelianize --preset gamma5");
  CHECK(res.code == 0);
  CHECK(res.out == "Z^1 ⊕ Z/2 ⊕ Z/2 ⊕ Z/2\n");
  CHECK(run_cli("abelianize --preset gamma4").out == "Z^1 ⊕ Z/2 ⊕ Z/4\n");
}

TEST_CASE("cli: check-iso verifies the shipped certificates") {
  const std::string dir = BM_FIXTURE_DIR;
  const auto p1 = run_cli("check-iso " + dir + "/prop1.cert");
  CHECK(p1.code == 0);
  CHECK(p1.out == "VERIFIED\n");
  const auto p2 = run_cli("check-iso " + dir + "/prop2.cert");
  CHECK(p2.code == 0);
  CHECK(p2.out == "VERIFIED\n");
}

TEST_CASE("cli: classify prints the partition with totals") {
  const auto res = run_cli("classify 1 2");
  CHECK(res.code == 0);
  CHECK(res.out.find("classes: ") == 0);
  CHECK(res.out.find("total: 15\n") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli("enum").code == 2);                    // missing arguments
  CHECK(run_cli("gs 0 1").code == 2);                  // non-positive ambient
  CHECK(run_cli("enum 9 9 --count-only").code == 2);   // unsupported ambient
  CHECK(run_cli("nf --preset nope --word a1").code == 2);
  CHECK(run_cli("verify /nonexistent/level.bm").code == 1);
  CHECK(run_cli("enum 2 2 --count-only --max-solutions 10").code == 3);
}
