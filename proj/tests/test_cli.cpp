#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "braid/cli.hpp"

using braid::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("act") {
  auto r = invoke({"act", "--n", "2", "1", "--", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("planar verdicts and exit codes") {
  auto yes = invoke({"planar", "--n", "2", "1 2 -1"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "PLANAR\n");
  auto no = invoke({"planar", "--n", "2", "1 -2"});
  CHECK(no.code == 1);
  CHECK(no.out == "NOT PLANAR\n");
}

TEST_CASE("compare handles negative tokens and empty words") {
  auto r = invoke({"compare", "--n", "2", "-1", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "LT\n");
  auto g = invoke({"compare", "--n", "2", "1", "e"});
  CHECK(g.out == "GT\n");
}

TEST_CASE("classify and neg-form") {
  CHECK(invoke({"classify", "--n", "3", "2"}).out == "NEUTRAL\n");
  CHECK(invoke({"classify", "--n", "2", "-1"}).out == "NEGATIVE\n");
  CHECK(invoke({"classify", "--n", "2", "1"}).out == "POSITIVE\n");
  auto nf = invoke({"neg-form", "--n", "2", "-1"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "-1\n");
  CHECK(invoke({"neg-form", "--n", "2", "1"}).code == 2);
}

TEST_CASE("recover round trip") {
  auto r = invoke({"recover", "--n", "2", "2", "-2 1 2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("ends verbs") {
  CHECK(invoke({"ends", "compare", "--n", "2", "e | 1", "e | 2"}).out == "LT\n");
  auto act = invoke({"ends", "act", "--n", "2", "-1", "--", "e | 1"});
  CHECK(act.out == "1 | 2\n");
  CHECK(invoke({"ends", "squarefree", "--n", "2", "e | 1 2"}).code == 0);
  CHECK(invoke({"ends", "squarefree", "--n", "2", "e | 1"}).code == 1);
  CHECK(invoke({"ends", "thurston-compare", "--n", "2", "-1", "e"}).out == "LT\n");
}

TEST_CASE("cm verbs") {
  auto act = invoke({"cm", "act", "--n", "2", "--m", "2", "1", "--", "1^1"});
  CHECK(act.out == "2^1\n");
  auto rec = invoke({"cm", "recover", "--n", "2", "--m", "2", "2^1", "2^1 1^1 2^1"});
  CHECK(rec.code == 0);
  CHECK(rec.out == "1\n");
}

TEST_CASE("wada and surface-check") {
  auto w = invoke({"wada", "--n", "3", "--variant", "2", "1", "--", "1"});
  CHECK(w.out == "2\n");
  auto s = invoke({"surface-check", "--g", "1"});
  CHECK(s.code == 0);
}

TEST_CASE("orbit verbs") {
  auto o = invoke({"orbit", "--n", "2", "1 2 -1"});
  CHECK(o.code == 0);
  CHECK(o.out.find("k 1") != std::string::npos);
  CHECK(invoke({"orbit", "--n", "2", "1 -2"}).code == 1);
  auto t = invoke({"orbit-tuple", "--n", "3", "1", "2"});
  CHECK(t.code == 0);
  CHECK(t.out == "witness e\n");
  CHECK(invoke({"orbit-tuple", "--n", "2", "2", "1"}).code == 1);
}

TEST_CASE("verify suites run") {
  auto r = invoke({"verify", "relations", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS relations") != std::string::npos);
  CHECK(invoke({"verify", "nonsense"}).code == 2);
  // every suite passes at desk scale
  for (const char* suite :
       {"relations", "magnus", "lemma52", "trichotomy", "order", "ends-order",
        "squarefree", "planar-closure", "humphries", "wada-faithful"}) {
    auto s = invoke({"verify", suite, "--n", "3", "--m", "3", "--trials", "30",
                     "--seed", "11", "--max-len", "7"});
    CAPTURE(suite);
    CHECK(s.code == 0);
  }
}

TEST_CASE("diagram writes a deterministic file") {
  std::string path = "cli_diagram_test.svg";
  auto a = invoke({"diagram", "--n", "2", "--out", path, "1 2 -1"});
  CHECK(a.code == 0);
  std::ifstream in(path, std::ios::binary);
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents.find("<svg") == 0);
  CHECK(invoke({"diagram", "--n", "2", "--out", path, "1 -2"}).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("determinism and json records") {
  std::vector<std::string> args{"verify", "order", "--n",     "3",
                                "--trials", "20",  "--seed", "9"};
  auto a = invoke(args);
  auto b = invoke(args);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);

  auto j = invoke({"act", "--json", "--n", "2", "1", "--", "1"});
  CHECK(j.code == 0);
  CHECK(j.out == "{\"result\":\"2\",\"verb\":\"act\"}\n");
}

TEST_CASE("input errors exit 2") {
  CHECK(invoke({"act", "--n", "2", "5", "--", "1"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"act", "--n"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"act", "--n", "2", "1"}).code == 2);  // missing word payload
}
