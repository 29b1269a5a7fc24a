#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "grpd/cli.hpp"
#include "helpers.hpp"

using testing::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = grpd::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "grpd_cli_test") {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen then validate") {
  TempDir dir;
  const std::string p2 = dir / "p2.grpd";
  CHECK(run({"gen", "pair", "--size", "2", "-o", p2}).code == grpd::kExitPass);
  const Run v = run({"validate", p2});
  CHECK(v.code == grpd::kExitPass);
  CHECK(contains(v.out, "status: pass"));

  for (const char* kind : {"group", "affine_cyclic", "complex_pair"}) {
    CAPTURE(kind);
    const std::string file = dir / (std::string(kind) + ".grpd");
    REQUIRE(run({"gen", kind, "--size", "3", "-o", file}).code == grpd::kExitPass);
    CHECK(run({"validate", file}).code == grpd::kExitPass);
  }
}

TEST_CASE("P2 congruence profile fails completeness") {
  const Run r = run({"congruence", fixture("p2.grpd"), "--hom", fixture("theta.hom"), "--profile"});
  CHECK(r.code == grpd::kExitCheckFailed);
  CHECK(contains(r.out, "complete: false, witness: (a, object 1)"));
  CHECK(contains(r.out, "[pass] simple: true"));

  const Run axioms = run({"congruence", fixture("p2.grpd"), "--hom", fixture("theta.hom")});
  CHECK(axioms.code == grpd::kExitPass);
}

TEST_CASE("sip check on P2") {
  const Run r = run({"sip", "check", fixture("p2.grpd"), "--thetas", fixture("theta.hom")});
  CHECK(r.code == grpd::kExitPass);
  CHECK(contains(r.out, "[pass] conjugate_symmetric"));
  CHECK(contains(r.out, "[pass] positive_definite"));
  CHECK(contains(r.out, "[pass] cauchy_schwarz"));
}

TEST_CASE("norm and polarize commands") {
  TempDir dir;
  CHECK(run({"norm", "check", fixture("p5.grpd"), "--sq", fixture("p5.sq")}).code == grpd::kExitPass);
  CHECK(run({"norm", "check", fixture("p5.grpd"), "--from-sip", fixture("p5.sip")}).code == grpd::kExitPass);

  const std::string lambda = dir / "rows.hom";
  std::filesystem::copy_file(fixture("p5_theta.hom"), lambda);
  const std::string out = dir / "b.sip";
  const Run p = run({"polarize", fixture("p5.grpd"), "--sq", fixture("p5.sq"), "--lambda", lambda, "-o", out});
  CHECK(p.code == grpd::kExitPass);
  CHECK(contains(p.out, "defined: 485/625"));
  CHECK(std::filesystem::exists(out));
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == grpd::kExitUsage);
  CHECK(run({"bogus"}).code == grpd::kExitUsage);
  CHECK(run({"gen", "pair"}).code == grpd::kExitUsage);
  CHECK(run({"gen", "pair", "--size", "0"}).code == grpd::kExitUsage);
  CHECK(run({"validate", fixture("missing.grpd")}).code == grpd::kExitUsage);
  CHECK(run({"validate", fixture("theta.hom")}).code == grpd::kExitUsage);
  CHECK(run({"congruence", fixture("p2.grpd")}).code == grpd::kExitUsage);
  const Run r = run({"--format", "yaml", "validate", fixture("p2.grpd")});
  CHECK(r.code == grpd::kExitUsage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("semantic failures become failing checks") {
  TempDir dir;
  const std::string bad = dir / "bad.hom";
  std::ofstream(bad) << R"({"target": ["Z"], "values": {"e0": 0, "e1": 0, "a": 1, "b": 1}})";
  const Run r = run({"--format", "json", "congruence", fixture("p2.grpd"), "--hom", bad});
  CHECK(r.code == grpd::kExitCheckFailed);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "fail");
  bool named = false;
  for (const auto& c : j["checks"]) named = named || c["name"].get<std::string>().find("NotAdditive") != std::string::npos;
  CHECK(named);
}

TEST_CASE("exit code is 0 exactly when the JSON status is pass") {
  const std::vector<std::vector<std::string>> commands{
      {"validate", fixture("p2.grpd")},
      {"congruence", fixture("p2.grpd"), "--hom", fixture("theta.hom"), "--profile"},
      {"congruence", fixture("a3.grpd"), "--hom", fixture("a3_theta.hom"), "--profile"},
      {"sip", "check", fixture("c4.grpd"), "--thetas", fixture("c4_theta.hom")},
      {"sip", "relate", fixture("p5.grpd"), "--table", fixture("p5.sip"), "--g", "(0,1)", "--h", "(1,2)"},
      {"sip", "scalar-set", fixture("c4.grpd"), "--table", fixture("c4.sip"), "--c", "0,1", "--g", "((1,0),(0,0))"},
      {"norm", "check", fixture("p2.grpd"), "--from-sip", fixture("p5.sip")},
      {"report", "--all", fixture("p5.grpd"), "--thetas", fixture("p5_theta.hom")},
      {"report", "--all", fixture("p2.grpd"), "--thetas", fixture("theta.hom")},
      {"report", "--all", fixture("a3.grpd"), "--thetas", fixture("a3_theta.hom")},
  };
  for (auto args : commands) {
    args.insert(args.begin(), {"--format", "json"});
    CAPTURE(args[2]);
    const Run r = run(args);
    if (r.code == grpd::kExitUsage) continue;
    const auto j = nlohmann::json::parse(r.out);
    CHECK((r.code == grpd::kExitPass) == (j["status"] == "pass"));
  }
}

TEST_CASE("report --all is deterministic") {
  const std::vector<std::string> args{"report", "--all", fixture("p5.grpd"), "--thetas", fixture("p5_theta.hom")};
  const Run first = run(args);
  CHECK(first.code == grpd::kExitPass);
  for (int i = 0; i < 2; ++i) CHECK(run(args).out == first.out);
  CHECK(contains(first.out, "pairs_holding: 485"));

  const Run c4 = run({"report", "--all", fixture("c4.grpd"), "--thetas", fixture("c4_theta.hom")});
  CHECK(c4.code == grpd::kExitPass);
  CHECK(contains(c4.out, "[not_applicable] scalar_set.i_empty_when_real"));
  CHECK(contains(c4.out, "[vacuous] norm.doubling"));
}
