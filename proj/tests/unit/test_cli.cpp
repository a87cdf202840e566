#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = namecalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("namecalc_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("decide reports an empty-name countermodel") {
    Result r = run({"decide", "i(S,S)", "--class", "all"});
    CHECK(r.code == 1);
    CHECK(r.out == "{\"universe\":[],\"denotation\":{\"S\":[]}}\n");
  }

  TEST_CASE("decide reports validity") {
    Result r = run({"decide", "a(S,S)", "--class", "all"});
    CHECK(r.code == 0);
    CHECK(r.out == "VALID\n");
    CHECK(run({"decide", "a(S,P) -> i(S,P)", "--class", "trad"}).code == 0);
    CHECK(run({"decide", "a(S,P) -> i(S,P)", "--class", "all", "--oracle", "3"}).code == 1);
  }

  TEST_CASE("decide JSON is versioned and stable") {
    Result x = run({"decide", "a(S,P) -> i(S,P)", "--json"});
    Result y = run({"decide", "a(S,P) -> i(S,P)", "--json"});
    CHECK(x.out == y.out);
    auto j = parse_json(x.out);
    CHECK(j["version"] == 1);
    CHECK(j["command"] == "decide");
    CHECK(j["valid"] == false);
    CHECK(j.contains("countermodel"));
    CHECK(x.code == 1);
  }

  TEST_CASE("errors exit with 2") {
    CHECK(run({"decide", "a(S,"}).code == 2);
    CHECK(run({"decide", "a(S,S)", "--class", "everything"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    Result guard = run({"decide", "a(S,S)", "--oracle", "40"});
    CHECK(guard.code == 2);
    CHECK(guard.err.find("guard oracle-size") != std::string::npos);
    Result cap = run({"decide", "a(A,B) & a(C,D) -> a(E,G)"});
    CHECK(cap.code == 2);
    CHECK(cap.err.find("guard letter-cap") != std::string::npos);
  }

  TEST_CASE("formulas from files") {
    Scratch s;
    std::string f = s.write("barbara.txt", "(a(M,P) & a(S,M)) -> a(S,P)\n");
    CHECK(run({"decide", "@" + f}).code == 0);
    CHECK(run({"decide", "@" + f + ".missing"}).code == 2);
  }

  TEST_CASE("eval") {
    Scratch s;
    std::string m = s.write("m.json", R"({"universe":["u"],"denotation":{"S":[],"P":["u"]}})");
    Result t = run({"eval", "--model", m, "a(S,P)"});
    CHECK(t.code == 0);
    CHECK(t.out == "true\n");
    Result f = run({"eval", "--model", m, "i(S,S)"});
    CHECK(f.code == 1);
    CHECK(f.out == "false\n");
    std::string bad = s.write("bad.json", R"({"universe":["u"],"denotation":{"S":["v"]}})");
    CHECK(run({"eval", "--model", bad, "a(S,P)"}).code == 2);
  }

  TEST_CASE("check") {
    Scratch s;
    std::string ok = s.write("ci.proof",
                             "1: (a(P,P) & i(P,S)) -> i(S,P) ; ax Datisi [M:=P]\n"
                             "2: a(P,P) ; ax Ia [S:=P]\n"
                             "3: ((a(P,P) & i(P,S)) -> i(S,P)) -> a(P,P) -> i(P,S) -> i(S,P) ; cpl\n"
                             "4: a(P,P) -> i(P,S) -> i(S,P) ; mp 1 3\n"
                             "5: i(P,S) -> i(S,P) ; mp 2 4\n");
    Result r = run({"check", "--system", "luk", ok});
    CHECK(r.code == 0);
    CHECK(r.out == "ACCEPTED\n");
    Result sh = run({"check", "--system", "onto", ok});
    CHECK(sh.code == 1);
    CHECK(sh.out.rfind("REJECTED line 1:", 0) == 0);
    std::string sub = s.write("sub.proof", "1: a(S,S) ; ax Ia\n2: a(P,P) ; sub 1 [S:=P]\n");
    CHECK(run({"check", "--system", "luk", sub}).code == 0);
    CHECK(run({"check", "--system", "luk", "--no-substitution", sub}).code == 1);
    CHECK(run({"check", "--system", "nope", sub}).code == 2);
    auto j = parse_json(run({"check", "--system", "luk", "--json", sub}).out);
    CHECK(j["command"] == "check");
    CHECK(j["accepted"] == true);
  }

  TEST_CASE("sequent-check and smiley-check") {
    Scratch s;
    std::string seq = s.write("cut.seq",
                              "1: ==> i(S,S) ; luk Ii\n"
                              "2: a(S,P), i(S,S) ==> i(S,P) ; luk Datisi [M:=S]\n"
                              "3: a(S,P) ==> i(S,P) ; cut 1 2\n");
    CHECK(run({"sequent-check", seq}).code == 0);
    std::string rule = s.write("rule.seq",
                               "1: a(S,P), i(S,S) ==> i(S,P) ; luk Datisi [M:=S]\n"
                               "2: ==> (a(S,P) & i(S,S)) -> i(S,P) ; rule bridge-to-implication 1\n");
    Result r = run({"sequent-check", "--expansions", rule});
    CHECK(r.code == 0);
    CHECK(r.out.find("# expansion of line 2") != std::string::npos);
    std::string ded = s.write("barbara.ded",
                              "1: a(S,M) |- a(S,M) ; trivial\n"
                              "2: a(M,P) |- a(M,P) ; trivial\n"
                              "3: a(S,M), a(M,P) |- a(S,P) ; cut R1 1 2\n");
    CHECK(run({"smiley-check", ded}).code == 0);
    std::string bad = s.write("bad.ded", "1: a(S,M) |- a(S,P) ; trivial\n");
    CHECK(run({"smiley-check", bad}).code == 1);
  }

  TEST_CASE("canonical") {
    Scratch s;
    std::string m = s.write("m.json", R"({"universe":["u","v"],"denotation":{"S":["u"],"P":["u","v"]}})");
    for (const char* sys : {"sh", "luk", "shis"})
      for (const char* method : {"filters", "pairs"}) {
        Result r = run({"canonical", "--system", sys, "--method", method, "--model", m});
        CHECK_MESSAGE(r.code == 0, sys << " " << method << " " << r.err);
      }
    auto j = parse_json(run({"canonical", "--system", "sh", "--method", "pairs", "--model", m, "--json"}).out);
    CHECK(j["agrees"] == true);
    Result nm = run({"canonical", "--system", "sh", "--method", "pairs", "--model", m, "--nonmono"});
    CHECK(nm.code == 0);
    CHECK(run({"canonical", "--system", "shis", "--method", "pairs", "--model", m, "--nonmono"}).code == 2);
  }

  TEST_CASE("represent") {
    Scratch s;
    std::string ok = s.write("one.json", R"({"carrier":["x"],"A":[["x","x"]],"I":[["x","x"]]})");
    Result r = run({"represent", "--kind", "b3", "--structure", ok});
    CHECK(r.code == 0);
    CHECK(r.out == "e(x) = {x}\nREPRESENTED\n");
    std::string bad = s.write("bad.json", R"({"carrier":["x"],"A":[["x","x"]],"I":[]})");
    Result v = run({"represent", "--kind", "b3", "--structure", bad});
    CHECK(v.code == 1);
    CHECK(v.out.find("violates Iaa") != std::string::npos);
  }

  TEST_CASE("translate") {
    Result r = run({"translate", "--to", "kai", "a(S,P)"});
    CHECK(r.code == 0);
    CHECK(r.out == "~ka(S,S) | ka(S,P)\n");
    CHECK(run({"translate", "--to", "ai", "e(S,P)"}).out == "~i(S,P)\n");
  }

  TEST_CASE("corpus run") {
    Result r = run({"corpus", "run"});
    CHECK(r.code == 0);
    CHECK(r.out.find("mismatches 0") != std::string::npos);
    Result g = run({"corpus", "run", "--section", "smiley", "--json"});
    CHECK(g.code == 0);
    auto j = parse_json(g.out);
    CHECK(j["entries"] == 3);
    CHECK(j["mismatches"].empty());
    CHECK(run({"corpus", "run", "--section", "nope"}).code == 2);
    Result bad = run({"corpus", "run", "--dir", std::string(NAMECALC_FIXTURE_DIR) + "/corrupted_corpus"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("mismatches 1") != std::string::npos);
  }
}
