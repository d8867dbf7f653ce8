#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(TETRA_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("check a TMA") {
  const auto r = run("check M4_DIAMOND TMA");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "VERDICT A7 HOLDS"));
}

TEST_CASE("check reports the meet-preservation counterexample") {
  const auto r = run("check M4_DIAMOND MOISIL_A");
  CHECK(r.status == 1);
  CHECK(contains(r.out, "VERDICT A8 FAILS x=a,y=b"));
}

TEST_CASE("pseudocomplement of the chain") {
  const auto r = run("pc C4_CHAIN");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "pc [1, 0, 0, 0]"));
  CHECK(contains(r.out, "MDMP no-H1-fails x=a"));
}

TEST_CASE("output is byte-for-byte stable") {
  const auto a = run("enum B_SYS --max-n 5 --records");
  const auto b = run("enum B_SYS --max-n 5 --records");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "MODEL "));
  CHECK(contains(a.out, "TOTAL 5 up to n=5"));
}

TEST_CASE("entailment exit codes") {
  CHECK(run("entail TMA 'x = x'").status == 0);
  const auto r = run("entail TMA 'nabla (x & y) = nabla x & nabla y'");
  CHECK(r.status == 1);
  CHECK(contains(r.out, "isomorphic to M4_DIAMOND"));
}

TEST_CASE("independence exits 0 with witnesses") {
  const auto r = run("indep MOISIL_A --max-n 4");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "A8 witness is isomorphic to M4_DIAMOND"));
  CHECK(contains(r.out, "A1 NOT-FOUND up to n=4"));
}

TEST_CASE("decompose and catalog") {
  CHECK(contains(run("decompose T4").out, "FACTORS T2^0 T3^0 T4^1"));
  CHECK(run("decompose C4_CHAIN").status == 1);
  const auto list = run("catalog list");
  CHECK(list.status == 0);
  CHECK(contains(list.out, "VARLET_STONE"));
  const auto show = run("catalog show M4_DIAMOND");
  CHECK(contains(show.out, "# hasse 0<a 0<b a<1 b<1"));
  CHECK(contains(run("catalog show T_SYS").out, "T2: x | sneg x = x | dm x"));
}

TEST_CASE("equiv runs a characterization") {
  const auto r = run("equiv t-identities --max-n 4");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "RESULT PASS"));
  CHECK(run("equiv derived-laws --max-n 4").status == 1);
}

TEST_CASE("files and names") {
  const std::string path = "cli_test_algebra.txt";
  {
    std::ofstream f(path);
    f << "size 2\nbottom 0 top 1\njoin\n0 1\n1 1\nmeet\n0 0\n0 1\nunary dm\n1 0\nunary nabla\n0 1\n";
  }
  CHECK(run("check ./" + path + " MOISIL_A").status == 0);
  const std::string sentences = "cli_test_sentences.txt";
  {
    std::ofstream f(sentences);
    f << "# comment\nZ1: dm x = x\nnabla x <= x\n";
  }
  const auto r = run("check ./" + path + " ./" + sentences + " --full");
  CHECK(r.status == 1);
  CHECK(contains(r.out, "VERDICT Z1 FAILS x=0"));
  CHECK(contains(r.out, "VERDICT S2 HOLDS"));
  CHECK(contains(run("eval ./" + path + " 'dm x | nabla x' x=0").out, "1"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("check").status == 2);
  CHECK(run("check M4_DIAMOND MISSING_SYSTEM").status == 2);
  const auto r = run("eval M4_DIAMOND 'dm (x |'");
  CHECK(r.status == 2);
  CHECK(contains(r.out, "position"));
  CHECK(run("enum TMA --max-n 0").status == 2);
  CHECK(run("enum TMA --max-n 9").status == 2);
  CHECK(run("catalog show NOPE").status == 2);
}
