#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run thick(const std::string& args) {
  std::string cmd = std::string(THICK_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string("--in ") + THICK_FIXTURES_DIR + "/" + name; }

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("verify-bpair on pi = x y") {
  Run r = thick("verify-bpair " + fixture("logsmsec_bpair.json"));
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["witness"]["d"] == nlohmann::json{{"1", 1}});
  CHECK(j["witness"]["eps"] == "y");
}

TEST_CASE("verify-bpair on a non-monomial quotient") {
  CHECK(thick("verify-bpair " + fixture("bpair_not_monomial.json")).code == 2);
}

TEST_CASE("logblow draws root and two charts") {
  Run r = thick("logblow --format dot " + fixture("redsec_n2.json"));
  CHECK(r.code == 0);
  CHECK(count(r.out, "[label=") == 5);
  CHECK(count(r.out, "\" -> \"") == 2);
}

TEST_CASE("verify-ptm verdicts") {
  CHECK(thick("verify-ptm " + fixture("ptm_hypersurface.json")).code == 0);
  CHECK(thick("verify-ptm " + fixture("not_ptm_hypersurface.json")).code == 2);
}

TEST_CASE("every pipeline subcommand succeeds on its fixture") {
  for (const char* c : {"blowup blowup_origin", "principalize principalize_xy", "monomialize sncrem",
                        "factor factor_two_blowups", "factor factor_non_monomial", "retract-extend retract_two_rounds",
                        "resolve resolve_eps_x", "resolve resolve_eps_x2_eps2", "resolve resolve_center_x",
                        "embed embed_eps_x", "embed resolve_eps_x2_eps2"}) {
    std::string s = c;
    auto sp = s.find(' ');
    CAPTURE(s);
    Run r = thick(s.substr(0, sp) + " " + fixture(s.substr(sp + 1) + ".json"));
    CHECK(r.code == 0);
    CHECK(nlohmann::json::accept(r.out));
  }
}

TEST_CASE("resolve report lists distinguished leaves") {
  auto j = nlohmann::json::parse(thick("resolve " + fixture("resolve_eps_x2_eps2.json")).out);
  CHECK(j["ok"] == true);
  REQUIRE(j["leaves"].size() >= 1);
  for (const auto& leaf : j["leaves"]) CHECK(leaf["witness"]["d"] == nlohmann::json{{"1", 4}});
}

TEST_CASE("input errors exit 3") {
  Run r = thick("verify-bpair --in /nonexistent.json");
  CHECK(r.code == 3);
  CHECK(thick("resolve " + fixture("logsmsec_bpair.json")).code == 3);
  CHECK(thick("blowup --fuel 0 " + fixture("blowup_origin.json")).code == 3);
  CHECK(thick("blowup --oracle other " + fixture("blowup_origin.json")).code == 3);
}

TEST_CASE("malformed json names the position") {
  std::string cmd = std::string("printf '{\"chart\": [1,' | ") + THICK_CLI + " verify-bpair 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string err;
  std::array<char, 512> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) err.append(buf.data(), n);
  int status = pclose(p);
  CHECK(WEXITSTATUS(status) == 3);
  CHECK(err.find("parse error at line 1, column 14") != std::string::npos);
}

TEST_CASE("fuel exhaustion exits 4") {
  CHECK(thick("principalize --fuel 1 " + fixture("principalize_x2_y3.json")).code == 4);
  CHECK(thick("principalize " + fixture("principalize_x2_y3.json")).code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* args : {"embed", "resolve"}) {
    std::string in = fixture("resolve_eps_x2_eps2.json");
    CHECK(thick(std::string(args) + " " + in).out == thick(std::string(args) + " " + in).out);
  }
  std::string dot = "factor --format dot " + fixture("factor_two_blowups.json");
  CHECK(thick(dot).out == thick(dot).out);
}
