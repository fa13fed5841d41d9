#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "liedual/cli.hpp"

using namespace liedual;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "liedual");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--format=json");
  const auto r = run(args);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("dim") {
  CHECK(run({"dim", "C4", "1,1,1,1"}).out == "42\n");
  CHECK(run({"dim", "A1", "5"}).out == "6\n");
  CHECK(run({"dim", "C2", "0,0"}).out == "1\n");
  CHECK(run({"dim", "C2xA1", "(1,1)x4"}).out == "25\n");
  const auto j = run_json({"dim", "C4", "1,1,1,1"});
  CHECK(j["result"]["dimension"] == 42);
  CHECK(j["command"] == "dim");
  CHECK(j["checks"].empty());
}

TEST_CASE("branch") {
  const auto r = run({"branch", "sp4_to_sp2sp2", "1", "--generic"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MATCH") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  const auto j = run_json({"branch", "sp4_to_sp2sp2", "1", "--generic"});
  CHECK(j["result"]["terms"].size() == 3);
  CHECK(j["result"]["match"] == true);

  const auto c = run_json({"branch", "su6_omega3", "1", "--charge", "1"});
  CHECK(c["result"]["text"] == "V(1,0)xV0");

  const auto t = run_json({"branch", "so5_to_so3so2", "0", "0"});
  CHECK(t["result"]["text"] == "V0[0]");
  CHECK(t["result"]["source_dimension"] == 1);

  const auto e = run_json({"branch", "sp3_in_su6", "1,1,1,0,0"});
  CHECK(e["result"]["text"] == "V(1,0,0) + V(1,1,1)");

  const auto s = run_json({"branch", "su6_omega3_to_sp3", "2"});
  CHECK(s["result"]["terms"][0]["sign"].is_number());
}

TEST_CASE("verify") {
  const auto t = run({"verify", "tables"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("PASS 36/36") != std::string::npos);
  CHECK(run({"verify", "infchar", "--max-n", "10"}).code == kExitOk);
  CHECK(run({"verify", "rules", "--max-level", "2"}).code == kExitOk);
  const auto j = run_json({"verify", "signs", "--max-level", "3"});
  CHECK(j["result"]["summary"].get<std::string>().rfind("PASS", 0) == 0);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "PASS");
  // missing fixtures are an input error
  CHECK(run({"--fixtures", "/nonexistent", "verify", "tables"}).code == kExitInputError);
}

TEST_CASE("verify output does not depend on the worker count") {
  const auto one = run({"--format=json", "--jobs", "1", "verify", "quasisplit-mult", "--max-level", "8"});
  const auto four = run({"--format=json", "--jobs", "4", "verify", "quasisplit-mult", "--max-level", "8"});
  CHECK(one.code == kExitOk);
  CHECK(one.out == four.out);
}

TEST_CASE("minrep") {
  const auto s = run_json({"minrep", "splitJ-splitE", "--type", "0,0,0,0", "--max-level", "5"});
  CHECK(s["result"]["series"] == json::array({1, 2, 3, 4, 5, 6}));
  CHECK(s["result"]["growth"]["accepted"] == true);

  const auto m = run_json({"minrep", "splitJ-mixedE", "--type", "(2,0)x0", "--charge", "0"});
  CHECK(m["result"]["first_level"] == 2);
  CHECK(m["result"]["sign"]["tag"] == "epsilon");

  const auto h = run_json({"minrep", "hermJ-mixedE", "--type", "(0,0)x4", "--max-level", "6"});
  CHECK(h["result"]["first_level"] == 1);
  CHECK(h["result"]["sign"]["tag"] == "epsilon");

  const auto nc = run_json({"minrep", "hermJ-mixedE", "--type", "(1,1)x2", "--max-level", "4"});
  CHECK(nc["result"]["sign"]["tag"] == "not-covered");

  const auto lv = run_json({"minrep", "split-E6", "--max-level", "2"});
  CHECK(lv["result"]["levels"][1]["dimension"] == 42);

  const auto tsv = run({"--format=tsv", "minrep", "e62-compact", "--type", "1/2,1/2,1/2,1/2,1/2", "--max-level", "3"});
  CHECK(tsv.out.rfind("n\tmultiplicity\n0\t0\n1\t1\n2\t0\n", 0) == 0);
}

TEST_CASE("json output is canonical") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"branch", "sp2_to_su2su2", "3", "1", "--generic"},
                                                                {"minrep", "e62-spin8", "--max-level", "2"},
                                                                {"verify", "tables"}}) {
    std::vector<std::string> a = args;
    a.insert(a.begin(), "--format=json");
    const auto r = run(a);
    CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"dim", "C2", "0,1"}).code == kExitInputError);
  CHECK(run({"dim", "E8", "1"}).code == kExitInputError);
  CHECK(run({"branch", "nope", "1"}).code == kExitInputError);
  CHECK(run({"minrep", "splitJ-splitE", "--type", "1,0,0"}).code == kExitInputError);
  CHECK(run({"minrep", "hermJ-mixedE", "--type", "(0,1)x0"}).code == kExitInputError);
  CHECK(run({"verify", "bogus"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"--budget", "10", "branch", "sp4_to_sp2sp2", "2", "--generic"}).code == kExitBudgetExceeded);
  const auto j = run({"--format=json", "--budget", "10", "branch", "sp2xsp2_in_sp4", "2,2,2,2"});
  CHECK(json::parse(j.out)["error"]["kind"] == "budget-exceeded");
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("Exit codes") != std::string::npos);
}
