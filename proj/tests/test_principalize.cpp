#include "doctest.h"
#include "support.hpp"
#include "thick/principalize.hpp"

using namespace thick;
using testing_support::boundary;
using testing_support::P;

namespace {

Atlas single(const Chart& c) {
  Atlas a;
  a.charts.push_back(c);
  return a;
}

Chart reduced_xy() { return Chart::model("root", {"eps", "x", "y"}, "eps", 1); }

// Replays oracle centers on the reduced atlas and returns the tree.
BlowupTree replay(const Atlas& reduced, const std::vector<Selector>& centers) {
  BlowupTree tree(reduced);
  run_sequence(tree, centers);
  return tree;
}

// Total transform of the generators on a leaf is a single monomial.
bool principal_on_leaf(const BlowupTree& tree, const std::string& leaf, const Ideal& z) {
  RingMap m = tree.composite_map(leaf);
  Ideal pulled;
  for (const auto& g : z) pulled.push_back(apply_map(m, g).poly());
  const Chart& c = tree.chart(leaf);
  std::set<Monomial> gens;
  for (const auto& g : monomial_ideal(pulled, c.ring))
    if (g.degree(c.eps) == 0) gens.insert(g);
  return gens.size() == 1;
}

}  // namespace

TEST_CASE("monomial oracle: principal input needs no centers") {
  CHECK(monomial_oracle(single(reduced_xy()), {{"root", {P("x^2*y^3")}}}).empty());
}

TEST_CASE("monomial oracle: (x, y)") {
  Atlas a = single(reduced_xy());
  auto centers = monomial_oracle(a, {{"root", {P("x"), P("y")}}});
  REQUIRE(centers.size() == 1);
  CHECK(centers[0].chart == "root");
  CHECK(centers[0].center.vars == std::vector<std::string>{"x", "y"});
  BlowupTree t = replay(a, centers);
  CHECK(t.leaves().size() == 2);
  for (const auto& leaf : t.leaves()) CHECK(principal_on_leaf(t, leaf, {P("x"), P("y")}));
}

TEST_CASE("monomial oracle: (x^2, y^3)") {
  Atlas a = single(reduced_xy());
  Ideal z{P("x^2"), P("y^3")};
  auto centers = monomial_oracle(a, {{"root", z}});
  CHECK(!centers.empty());
  BlowupTree t = replay(a, centers);
  for (const auto& leaf : t.leaves()) CHECK(principal_on_leaf(t, leaf, z));
}

TEST_CASE("least pair rule cycles where the builtin rule terminates") {
  Atlas a = single(Chart::model("root", {"eps", "a", "b", "c"}, "eps", 1));
  Ideal z{P("b^3"), P("a^2*c^3")};
  CHECK_THROWS_AS(least_pair_oracle(a, {{"root", z}}, 50), FuelExhaustedError);
  auto centers = monomial_oracle(a, {{"root", z}});
  BlowupTree t = replay(a, centers);
  for (const auto& leaf : t.leaves()) CHECK(principal_on_leaf(t, leaf, z));
}

TEST_CASE("monomial oracle errors") {
  Atlas a = single(reduced_xy());
  CHECK_THROWS_AS(monomial_oracle(a, {{"root", {P("x + y")}}}), Error);
  try {
    monomial_oracle(a, {{"root", {P("x"), P("y")}}}, 0);
    FAIL("expected fuel exhaustion");
  } catch (const FuelExhaustedError& e) {
    CHECK(e.code() == ErrorCode::FuelExhausted);
    CHECK(e.partial().empty());
  }
}

TEST_CASE("pushforward principalization") {
  Chart x = Chart::model("root", {"eps", "x", "y"}, "eps", 2);
  auto [t0, r0] = pushforward_principalization(single(x), {{"root", {P("1")}}}, builtin_oracle());
  CHECK(t0.steps().empty());

  auto [tree, r] = pushforward_principalization(single(x), {{"root", {P("x"), P("y")}}}, builtin_oracle());
  REQUIRE(tree.steps().size() == 1);
  CHECK(tree.steps()[0].center.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(tree.leaves().size() == 2);
  for (const auto& leaf : tree.leaves()) {
    CHECK(is_unit_ideal(r.residual.at(leaf), tree.chart(leaf).ring));
    CHECK(tree.chart(leaf).boundary.size() == 1);
    CHECK(tree.chart(leaf).boundary.var(1));
  }
  CHECK(tree.chart("root.x").boundary == boundary({"x"}));

  CHECK_THROWS_AS(pushforward_principalization(single(x), {{"root", {P("eps")}}}, builtin_oracle()), Error);
}

TEST_CASE("ptm and reduced boundary transforms agree") {
  Chart x = Chart::model("root", {"eps", "x", "y", "z"}, "eps", 3, boundary({"z"}));
  Ideal z{P("x^2*z"), P("y^3"), P("x*y*z^2")};
  auto [tree, r] = pushforward_principalization(single(x), {{"root", z}}, builtin_oracle());
  BlowupTree red = replay(single(reduction(x)), r.centers);
  REQUIRE(red.leaves() == tree.leaves());
  for (const auto& leaf : tree.leaves()) CHECK(reduction(tree.chart(leaf)).boundary == red.chart(leaf).boundary);
}

TEST_CASE("dropping a chart drops exactly its centers") {
  Chart a = Chart::model("a", {"eps", "x", "y"}, "eps", 2);
  Chart b = Chart::model("b", {"eps", "u", "v"}, "eps", 2);
  Atlas both;
  both.charts = {a, b};
  Subscheme z{{"a", {P("x^2"), P("y")}}, {"b", {P("u"), P("v^2")}}};
  auto [t2, r2] = pushforward_principalization(both, z, builtin_oracle());
  auto [tb, rb] = pushforward_principalization(single(b), {{"b", z.at("b")}}, builtin_oracle());
  std::vector<std::string> on_b;
  for (const auto& s : r2.centers)
    if (s.chart->rfind("b", 0) == 0) on_b.push_back(*s.chart + ":" + s.center.str());
  std::vector<std::string> only_b;
  for (const auto& s : rb.centers) only_b.push_back(*s.chart + ":" + s.center.str());
  CHECK(on_b == only_b);
  CHECK(on_b.size() < r2.centers.size());
}

TEST_CASE("boundary bootstrap shares labels by root variable") {
  Chart x = Chart::model("root", {"eps", "x", "y"}, "eps", 2);
  BlowupTree tree(single(x));
  tree.apply(blowup_regular(x, {"x", "y"}));
  bootstrap_boundary(tree, {{"root.x", Monomial::var("y'")}, {"root.y", Monomial({{"y", 1}, {"x'", 2}})}});
  // Label 1 is the exceptional divisor; y' and x' descend from y and x.
  CHECK(tree.chart("root.x").boundary == boundary({"x", "", "y'"}));
  CHECK(tree.chart("root.y").boundary == boundary({"y", "x'"}));
}

TEST_CASE("monomialize y^2 + eps") {
  Chart x = Chart::model("root", {"x", "y", "eps"}, "eps", 2, boundary({"y"}));
  auto [tree, r] = monomialize_divisor(single(x), {{"root", P("y^2 + eps")}});
  REQUIRE(tree.steps().size() == 2);
  for (const auto& s : tree.steps()) CHECK(s.center.f == P("y"));
  REQUIRE(tree.leaves().size() == 1);
  const Chart& leaf = tree.chart(tree.leaves()[0]);
  CHECK(leaf.ring == MonomialQuotientRing({"x", "y", "eps''"}, Monomial::var("eps''", 2)));
  CHECK(tree.composite_map(leaf.id).image("eps") == P("y^2*eps''"));
  CHECK(r.divisor.at(leaf.id) == P("y^2 + y^2*eps''"));
  CHECK(r.multiplicities.at(leaf.id) == MonomialDivisor{{1, 2}});
  auto d = unit_monomial_decompose(leaf.elem(r.divisor.at(leaf.id)));
  REQUIRE(d);
  CHECK(d->monomial == Monomial::var("y", 2));
}

TEST_CASE("monomialize an already monomial divisor and the empty divisor") {
  Chart x = Chart::model("root", {"eps", "x"}, "eps", 3, boundary({"x"}));
  auto [tree, r] = monomialize_divisor(single(x), {{"root", P("x^2")}});
  CHECK(tree.steps().size() == 2);
  CHECK(r.multiplicities.begin()->second == MonomialDivisor{{1, 2}});
  // Only trivial-reduction steps: t-variables map identically.
  for (const auto& leaf : tree.leaves()) CHECK(tree.composite_map(leaf).image("x") == P("x"));

  auto [t1, r1] = monomialize_divisor(single(x), {{"root", P("1")}});
  CHECK(t1.steps().empty());
  CHECK(r1.multiplicities.at("root").empty());

  CHECK_THROWS_AS(monomialize_divisor(single(x), {{"root", P("x + 1")}}), Error);
}
