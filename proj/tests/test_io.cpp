#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "thick/io.hpp"

using namespace thick;
using namespace thick::io;
using testing_support::boundary;
using testing_support::P;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(THICK_FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("chart round trip") {
  Chart c = Chart::model("root", {"x", "y", "eps"}, "eps", 3, boundary({"x", "", "y"}), P("eps*x^2 - 1/2*eps^2"));
  json j = to_json(c);
  CHECK(chart_from_json(j) == c);
  CHECK(to_json(chart_from_json(j)) == j);
  CHECK(j["boundary"][1]["var"].is_null());
  CHECK(j["relation"] == json{{"eps", 3}});
}

TEST_CASE("chart parse errors") {
  CHECK_THROWS_AS(chart_from_json(json{{"vars", {"x"}}}), Error);
  CHECK_THROWS_AS(chart_from_json(json{{"vars", "x"}, {"nilpotent", "x"}, {"thickness", 2}}), Error);
  CHECK_THROWS_AS(chart_from_json(json{{"vars", {"x"}}, {"nilpotent", "eps"}, {"thickness", 2}}), Error);
}

TEST_CASE("tree round trip") {
  Chart c = Chart::model("root", {"x", "y", "eps"}, "eps", 2, boundary({"x"}), P("eps*x*y"));
  Atlas a;
  a.charts.push_back(c);
  BlowupTree t(a);
  run_sequence(t, {{std::nullopt, Center::regular({"x", "y"})}});
  t.apply(log_blowup_reduced_divisor(t.chart(t.leaves()[0]), "x"));
  json j = to_json(t);
  BlowupTree back = tree_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.leaves() == t.leaves());
  CHECK(back.composite_map(t.leaves()[0]) == t.composite_map(t.leaves()[0]));
}

TEST_CASE("retract and divisor round trip") {
  Retract r;
  r.charts["root"] = {{"x", {{1, parse_rational_function("1/x")}, {2, parse_rational_function("y/(x^2*y + 1)")}}}};
  json j = to_json(r);
  Retract back = retract_from_json(j);
  CHECK(back.charts.at("root").at("x").at(2) == r.charts.at("root").at("x").at(2));
  CHECK(to_json(back) == j);
  MonomialDivisor d{{1, 2}, {3, 1}};
  CHECK(divisor_from_json(to_json(d)) == d);
  CHECK_THROWS_AS(divisor_from_json(json{{"0", 1}}), Error);
}

TEST_CASE("every fixture round trips") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(THICK_FIXTURES_DIR)) {
    std::string name = entry.path().filename().string();
    CAPTURE(name);
    json j = load(name);
    ++seen;
    if (j.contains("chart")) {
      Chart c = chart_from_json(j["chart"]);
      CHECK(chart_from_json(to_json(c)) == c);
    }
    if (j.contains("atlas")) {
      Atlas a = atlas_from_json(j["atlas"]);
      CHECK(to_json(atlas_from_json(to_json(a))) == to_json(a));
    }
    for (const char* k : {"x", "y"})
      if (j.contains(k)) {
        Chart c = chart_from_json(j[k]);
        CHECK(chart_from_json(to_json(c)) == c);
      }
    if (j.contains("ideal")) {
      Subscheme z = subscheme_from_json(j["ideal"]);
      CHECK(subscheme_from_json(to_json(z)) == z);
    }
    if (j.contains("retract")) {
      Retract r = retract_from_json(j["retract"]);
      CHECK(to_json(retract_from_json(to_json(r))) == to_json(r));
    }
    if (j.contains("selectors"))
      for (const auto& s : j["selectors"]) CHECK(to_json(selector_from_json(to_json(selector_from_json(s)))) == s);
  }
  CHECK(seen >= 10);
}

TEST_CASE("dot output of the two-chart log blowup") {
  json j = load("redsec_n2.json");
  Chart c = chart_from_json(j["chart"]);
  Atlas a;
  a.charts.push_back(c);
  BlowupTree t(a);
  t.apply(log_blowup_reduced_divisor(c, "t"));
  std::string dot = to_dot(t);
  CHECK(count(dot, "[label=") == 5);  // 3 nodes, 2 edges
  CHECK(count(dot, "->") >= 2);
  CHECK(dot == to_dot(tree_from_json(to_json(t))));
}

TEST_CASE("json oracle adapter") {
  auto oracle = oracle_from_json([](const json& atlas, const json& bnd, const json& ideal) {
    CHECK(atlas["charts"].size() == 1);
    CHECK(bnd.contains("root"));
    CHECK(ideal["root"] == json{"x", "y"});
    return json::array({{{"chart", "root"}, {"vars", {"x", "y"}}}});
  });
  Chart c = Chart::model("root", {"x", "y", "eps"}, "eps", 2);
  Atlas a;
  a.charts.push_back(reduction(c));
  auto sel = oracle(a, {{"root", {P("x"), P("y")}}});
  REQUIRE(sel.size() == 1);
  CHECK(sel[0].chart == "root");
  CHECK(sel[0].center.vars == std::vector<std::string>{"x", "y"});
}
