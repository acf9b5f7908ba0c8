#include "thick/principalize.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace thick {

Ideal strip_monomial_content(const Ideal& ideal, const Chart& chart) {
  auto tv = chart.t_vars();
  std::set<std::string> vars(tv.begin(), tv.end());
  Ideal gens;
  for (const auto& g : ideal) {
    Poly p = normal_form(g, chart.ring).poly();
    if (!p.is_zero()) gens.push_back(p);
  }
  if (gens.empty()) return gens;
  Monomial content = gens[0].monomial_content(vars);
  for (const auto& g : gens) content = Monomial::gcd(content, g.monomial_content(vars));
  for (auto& g : gens) g = normal_form(*g.divide(content), chart.ring).poly();
  return gens;
}

namespace {

// Minimal monomial generators of a residual on a reduced chart.
std::vector<Monomial> minimal_generators(const Ideal& ideal, const Chart& chart) {
  std::vector<Monomial> out;
  for (const auto& m : monomial_ideal(ideal, chart.ring))
    if (m.degree(chart.eps) == 0) out.push_back(m);
  return out;
}

std::optional<std::pair<std::string, std::string>> separating_pair(const std::vector<Monomial>& gens,
                                                                   const std::vector<std::string>& vars) {
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      for (const auto& a : gens)
        for (const auto& b : gens) {
          const auto &u = sorted[i], &v = sorted[j];
          if (a.degree(u) > b.degree(u) && a.degree(v) < b.degree(v)) return std::make_pair(u, v);
        }
  return std::nullopt;
}

Ideal pull_back(const Ideal& ideal, const RingMap& map) {
  Ideal out;
  for (const auto& g : ideal) out.push_back(apply_map(map, g).poly());
  return out;
}

}  // namespace

namespace {

using PairRule = std::function<std::optional<std::pair<std::string, std::string>>(const Ideal&, const Chart&)>;

std::optional<std::pair<std::string, std::string>> least_pair(const Ideal& gens, const Chart& c) {
  return separating_pair(minimal_generators(gens, c), c.t_vars());
}

// The first incomparable pair of generators, in input order, with exponent
// difference v. Pairs a coordinate of maximal |v| with one of opposite sign.
std::optional<std::pair<std::string, std::string>> dominant_pair(const Ideal& gens, const Chart& c) {
  std::vector<std::string> vars = c.t_vars();
  std::sort(vars.begin(), vars.end());
  for (std::size_t p = 0; p < gens.size(); ++p)
    for (std::size_t q = p + 1; q < gens.size(); ++q) {
      Monomial a = gens[p].as_term()->second, b = gens[q].as_term()->second;
      if (a.divides(b) || b.divides(a)) continue;
      std::map<std::string, int> v;
      int top = 0;
      for (const auto& x : vars) {
        v[x] = a.degree(x) - b.degree(x);
        top = std::max(top, std::abs(v[x]));
      }
      std::string k;
      for (const auto& x : vars)
        if (std::abs(v[x]) == top) {
          k = x;
          break;
        }
      std::optional<std::string> l;
      for (const auto& x : vars)
        if (v[x] * v[k] < 0 && (!l || (std::abs(v[x]) == top && std::abs(v[*l]) < top))) l = x;
      return std::minmax(k, *l);
    }
  return std::nullopt;
}

std::vector<Selector> run_pair_rule(const Atlas& reduced, const Subscheme& ideal, int fuel, const PairRule& rule) {
  BlowupTree tree(reduced);
  std::map<std::string, Ideal> residual;
  for (const auto& c : reduced.charts) {
    auto it = ideal.find(c.id);
    if (it == ideal.end()) continue;
    Ideal red = reduce_ideal(it->second, c);
    for (const auto& g : red)
      if (!g.as_term()) throw Error(ErrorCode::NonMonomialInput, g.str() + " is not a monomial on " + c.id);
    if (red.empty()) throw Error(ErrorCode::NotNowhereDense, "ideal vanishes identically on " + c.id);
    residual[c.id] = strip_monomial_content(red, c);
  }

  std::vector<Selector> centers;
  for (;;) {
    std::optional<std::string> target;
    for (const auto& [id, gens] : residual)
      if (!is_unit_ideal(gens, tree.chart(id).ring)) {
        target = id;
        break;
      }
    if (!target) break;
    if (static_cast<int>(centers.size()) >= fuel)
      throw FuelExhaustedError("monomial oracle exceeded " + std::to_string(fuel) + " centers", centers);

    const Chart& c = tree.chart(*target);
    auto pair = rule(residual[*target], c);
    if (!pair) throw Error(ErrorCode::OracleFailure, "no separating pair on " + c.id);
    Selector sel{*target, Center::regular({pair->first, pair->second})};
    BlowupStep step = blowup_regular(c, sel.center.vars);
    Ideal gens = residual[*target];
    residual.erase(*target);
    for (const auto& ch : step.children) residual[ch.chart.id] = strip_monomial_content(pull_back(gens, ch.map), ch.chart);
    tree.apply(step);
    centers.push_back(sel);
  }
  return centers;
}

}  // namespace

std::vector<Selector> monomial_oracle(const Atlas& reduced, const Subscheme& ideal, int fuel) {
  return run_pair_rule(reduced, ideal, fuel, dominant_pair);
}

std::vector<Selector> least_pair_oracle(const Atlas& reduced, const Subscheme& ideal, int fuel) {
  return run_pair_rule(reduced, ideal, fuel, least_pair);
}

ReductionOracle builtin_oracle(int fuel) {
  return [fuel](const Atlas& a, const Subscheme& z) { return monomial_oracle(a, z, fuel); };
}

PrincipalizationResult pushforward_principalization(BlowupTree& tree, const Subscheme& z,
                                                    const ReductionOracle& oracle) {
  Atlas reduced;
  Subscheme reduced_z;
  std::map<std::string, Ideal> residual;
  for (const auto& id : tree.leaves()) {
    const Chart& c = tree.chart(id);
    reduced.charts.push_back(reduction(c));
    auto it = z.find(id);
    if (it == z.end()) continue;
    Ideal red = reduce_ideal(it->second, c);
    if (red.empty()) throw Error(ErrorCode::NotNowhereDense, "reduction of the ideal is zero on " + id);
    reduced_z[id] = red;
    residual[id] = strip_monomial_content(it->second, c);
  }

  PrincipalizationResult result;
  result.centers = oracle(reduced, reduced_z);
  for (const auto& sel : result.centers) {
    if (!sel.chart || !tree.is_leaf(*sel.chart))
      throw Error(ErrorCode::OracleFailure, "oracle center does not name a current leaf");
    const Chart& c = tree.chart(*sel.chart);
    if (sel.center.kind != CenterKind::Regular || sel.center.vars.empty())
      throw Error(ErrorCode::OracleFailure, "oracle centers must be coordinate centers");
    for (const auto& v : sel.center.vars)
      if (v == c.eps || !c.ring.has_var(v))
        throw Error(ErrorCode::OracleFailure, v + " is not a coordinate of " + c.id);
    BlowupStep step = blowup_regular(c, sel.center.vars);
    auto it = residual.find(c.id);
    if (it != residual.end()) {
      Ideal gens = it->second;
      residual.erase(it);
      for (const auto& ch : step.children)
        residual[ch.chart.id] = strip_monomial_content(pull_back(gens, ch.map), ch.chart);
    }
    tree.apply(step);
  }

  for (const auto& [id, gens] : residual)
    if (!is_unit_ideal(gens, tree.chart(id).ring))
      throw Error(ErrorCode::OracleFailure, "transform is not the unit ideal on " + id);
  result.residual = residual;
  return result;
}

std::pair<BlowupTree, PrincipalizationResult> pushforward_principalization(const Atlas& x, const Subscheme& z,
                                                                           const ReductionOracle& oracle) {
  BlowupTree tree(x);
  auto r = pushforward_principalization(tree, z, oracle);
  return {std::move(tree), std::move(r)};
}

void bootstrap_boundary(BlowupTree& tree, const std::map<std::string, Monomial>& monomials) {
  int next = 0;
  for (const auto& id : tree.leaves()) next = std::max(next, tree.chart(id).boundary.size());
  std::map<std::string, int> label_of_root;
  for (const auto& [id, m] : monomials)
    for (const auto& v : m.support())
      if (!tree.chart(id).boundary.contains(v)) label_of_root[tree.root_variable(id, v)] = 0;
  for (auto& [root_var, label] : label_of_root) label = ++next;

  for (const auto& [id, m] : monomials) {
    Chart c = tree.chart(id);
    bool changed = false;
    for (const auto& v : m.support())
      if (!c.boundary.contains(v)) {
        c.boundary.set(label_of_root.at(tree.root_variable(id, v)), v);
        changed = true;
      }
    if (changed) tree.update_leaf(c);
  }
}

MonomializeResult monomialize_divisor(BlowupTree& tree, const std::map<std::string, Poly>& d) {
  struct Track {
    std::string leaf;
    Poly f;
    MonomialDivisor n;
  };
  std::vector<Track> tracks;
  std::set<int> labels;
  for (const auto& [id, f] : d) {
    if (!tree.is_leaf(id)) throw Error(ErrorCode::InvalidInput, id + " is not a leaf");
    const Chart& c = tree.chart(id);
    Poly red = normal_form(f, c.ring).poly().at_zero(c.eps);
    auto n = is_monomial(red, reduction(c));
    if (!n) throw Error(ErrorCode::ReductionNotMonomial, "reduction " + red.str() + " is not boundary-monomial on " + id);
    for (const auto& [label, e] : *n)
      if (e > 0) labels.insert(label);
    tracks.push_back({id, normal_form(f, c.ring).poly(), *n});
  }

  for (int label : labels) {
    int top = 0;
    for (const auto& t : tracks)
      if (t.n.count(label)) top = std::max(top, t.n.at(label));
    for (int j = 1; j <= top; ++j)
      for (auto& t : tracks) {
        const Chart& c = tree.chart(t.leaf);
        if (c.h < 2 || !t.n.count(label) || t.n.at(label) < j) continue;
        BlowupStep step = blowup_reduced_divisor(c, Poly::var(*c.boundary.var(label)));
        const StepChild& ch = step.children[0];
        t.f = apply_map(ch.map, t.f).poly();
        t.leaf = ch.chart.id;
        tree.apply(step);
      }
  }

  MonomializeResult out;
  for (const auto& t : tracks) {
    auto n = is_monomial(t.f, tree.chart(t.leaf));
    if (!n || *n != t.n) throw std::logic_error("monomialization left a non-monomial divisor on " + t.leaf);
    out.multiplicities[t.leaf] = t.n;
    out.divisor[t.leaf] = t.f;
  }
  return out;
}

std::pair<BlowupTree, MonomializeResult> monomialize_divisor(const Atlas& x, const std::map<std::string, Poly>& d) {
  BlowupTree tree(x);
  auto r = monomialize_divisor(tree, d);
  return {std::move(tree), std::move(r)};
}

}  // namespace thick
