#include "thick/bpipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace thick {

std::string to_string(DistinguishedFailure f) {
  switch (f) {
    case DistinguishedFailure::NotInNilradical: return "NotInNilradical";
    case DistinguishedFailure::QuotientNotMonomial: return "QuotientNotMonomial";
    case DistinguishedFailure::NonBoundaryVariable: return "NonBoundaryVariable";
  }
  return "?";
}

DistinguishedVerdict verify_distinguished(const Chart& chart) {
  if (!chart.pi) throw Error(ErrorCode::MissingPi, chart.id + " has no pi");
  DistinguishedVerdict v;
  auto q = chart.pi->divide(Monomial::var(chart.eps));
  if (!q) {
    v.reason = DistinguishedFailure::NotInNilradical;
    v.detail = "pi = " + chart.pi->str() + " is not a multiple of " + chart.eps;
    return v;
  }
  auto um = unit_monomial_decompose(chart.elem(*q));
  if (!um) {
    v.reason = DistinguishedFailure::QuotientNotMonomial;
    v.detail = q->str() + " is not a unit times a monomial on " + chart.id;
    return v;
  }
  BPairWitness w{chart.eps, {}, um->unit.poly()};
  for (const auto& [var, e] : um->monomial.exponents()) {
    auto label = chart.boundary.label_of(var);
    if (!label) {
      v.reason = DistinguishedFailure::NonBoundaryVariable;
      v.detail = var + " is not a boundary variable of " + chart.id;
      return v;
    }
    w.d[*label] = e;
  }
  v.witness = w;
  return v;
}

bool ResolveResult::ok() const {
  return std::all_of(leaves.begin(), leaves.end(), [](const LeafReport& l) { return l.verdict.witness.has_value(); });
}

bool LogSmoothEmbedding::ok() const {
  return std::all_of(leaves.begin(), leaves.end(), [](const EmbeddedLeaf& l) { return l.problems.empty(); });
}

namespace {

Poly g_of(const Chart& c) { return normal_form(*c.pi->divide(Monomial::var(c.eps)), c.ring).poly(); }

std::set<std::string> t_var_set(const Chart& c) {
  auto tv = c.t_vars();
  return {tv.begin(), tv.end()};
}

Ideal pulled(const BlowupTree& tree, const std::string& leaf, const Ideal& gens) {
  RingMap m = tree.composite_map(leaf);
  Ideal out;
  for (const auto& g : gens) {
    Poly p = apply_map(m, g).poly();
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

Monomial common_monomial(const Ideal& gens, const Chart& c) {
  auto vars = t_var_set(c);
  if (gens.empty()) return {};
  Monomial m = gens[0].monomial_content(vars);
  for (const auto& g : gens) m = Monomial::gcd(m, g.monomial_content(vars));
  return m;
}

std::optional<MonomialDivisor> z_divisor(const BlowupTree& tree, const std::string& leaf, const Ideal& gens) {
  const Chart& c = tree.chart(leaf);
  Ideal p = pulled(tree, leaf, gens);
  Monomial m = common_monomial(p, c);
  for (const auto& g : p) {
    auto q = g.divide(m);
    if (q && is_unit(c.elem(*q))) return is_monomial(g, c);
  }
  return std::nullopt;
}

// Principalizes the reduction of pi / eps on every leaf and labels its variables.
void principalize_g(BlowupTree& tree, const ReductionOracle& oracle) {
  Subscheme gz;
  for (const auto& id : tree.leaves()) {
    const Chart& c = tree.chart(id);
    gz[id] = {g_of(c).at_zero(c.eps)};
  }
  pushforward_principalization(tree, gz, oracle);
  std::map<std::string, Monomial> mons;
  for (const auto& id : tree.leaves()) {
    const Chart& c = tree.chart(id);
    auto term = g_of(c).at_zero(c.eps).as_term();
    if (!term) throw Error(ErrorCode::OracleFailure, "reduction of pi/eps is not monomial on " + id);
    mons[id] = term->second;
  }
  bootstrap_boundary(tree, mons);
}

}  // namespace

void check_base_input(const Atlas& x, const BaseSpec& base) {
  if (base.n < 1) throw Error(ErrorCode::InvalidInput, "base exponent must be positive");
  for (const auto& c : x.charts) {
    if (!c.is_ptm()) throw Error(ErrorCode::NotPtm, c.id + " is not a ptm chart");
    if (!c.pi) throw Error(ErrorCode::MissingPi, c.id + " has no pi");
    if (!c.elem(*c.pi).pow(base.n).is_zero())
      throw Error(ErrorCode::InvalidInput, "pi^" + std::to_string(base.n) + " is not zero on " + c.id);
    if (!c.pi->divisible_by(Monomial::var(c.eps)) || g_of(c).at_zero(c.eps).is_zero())
      throw Error(ErrorCode::NotGenericallySmooth, "pi does not generically generate the nilradical on " + c.id);
  }
}

ResolveResult resolve_over_B(const Atlas& x, const Subscheme& z, const BaseSpec& base,
                             const ReductionOracle& oracle) {
  check_base_input(x, base);
  Subscheme zz;
  for (const auto& [id, gens] : z) {
    if (!x.find(id)) throw Error(ErrorCode::InvalidInput, "ideal given on unknown chart " + id);
    if (!gens.empty()) zz[id] = gens;
  }

  ResolveResult res{BlowupTree(x), {}, {}};
  BlowupTree& tree = res.tree;
  auto stage = [&](const std::string& name, std::size_t first) {
    res.stages.push_back({name, first, tree.steps().size()});
  };
  stage("normalize", 0);

  std::size_t s0 = tree.steps().size();
  if (!zz.empty()) {
    pushforward_principalization(tree, zz, oracle);
    std::map<std::string, Monomial> mons;
    for (const auto& id : tree.leaves()) {
      auto it = zz.find(tree.root_of(id));
      if (it != zz.end()) mons[id] = common_monomial(pulled(tree, id, it->second), tree.chart(id));
    }
    bootstrap_boundary(tree, mons);
  }
  stage("principalize-z", s0);

  s0 = tree.steps().size();
  principalize_g(tree, oracle);
  stage("principalize-g", s0);

  s0 = tree.steps().size();
  std::map<std::string, Poly> d;
  for (const auto& id : tree.leaves()) {
    const Chart& c = tree.chart(id);
    if (!is_monomial(g_of(c), c)) d[id] = g_of(c);
  }
  if (!d.empty()) monomialize_divisor(tree, d);
  stage("monomialize", s0);

  for (const auto& id : tree.leaves()) {
    LeafReport r{id, verify_distinguished(tree.chart(id)), std::nullopt};
    auto it = zz.find(tree.root_of(id));
    if (it != zz.end()) r.z_divisor = z_divisor(tree, id, it->second);
    res.leaves.push_back(r);
  }
  return res;
}

SmoothAwayResult smooth_away_from_snc(const Atlas& x, const BaseSpec& base, const ReductionOracle& oracle) {
  check_base_input(x, base);
  SmoothAwayResult res{BlowupTree(x), {}};
  principalize_g(res.tree, oracle);
  for (const auto& id : res.tree.leaves()) {
    const Chart& c = res.tree.chart(id);
    Monomial m = g_of(c).at_zero(c.eps).as_term()->second;
    bool inside = true;
    for (const auto& v : m.support()) inside = inside && c.boundary.contains(v);
    if (!inside) throw Error(ErrorCode::OracleFailure, "non-smooth locus leaves the boundary on " + id);
    res.leaves.push_back({id, m, inside});
  }
  return res;
}

bool has_c_shape(const Chart& chart, int n) {
  if (!chart.pi) return false;
  auto term = chart.pi->as_term();
  if (!term || term->first != 1) return false;
  const Monomial& m = term->second;
  if (!(chart.ring.relation() == m.pow(n))) return false;
  for (const auto& [v, e] : m.exponents())
    if (e == 1) return true;
  return false;
}

bool has_log_smooth_shape(const Chart& chart, int n) {
  if (!chart.pi) return false;
  auto term = chart.pi->as_term();
  if (!term || term->first != 1) return false;
  if (!(chart.ring.relation() == term->second.pow(n))) return false;
  int g = 0;
  for (const auto& [v, e] : term->second.exponents()) g = std::gcd(g, e);
  return g == 1;
}

LogSmoothEmbedding embed_log_smooth(const BlowupTree& resolved, const Retract& retract, const BaseSpec& base) {
  LogSmoothEmbedding out;
  for (const auto& id : resolved.leaves()) {
    const Chart& leaf = resolved.chart(id);
    auto verdict = verify_distinguished(leaf);
    if (!verdict.witness) throw Error(ErrorCode::InvalidInput, id + " is not a distinguished B-pair");
    if (leaf.h != base.n)
      throw Error(ErrorCode::InvalidInput, "thickness of " + id + " differs from the base exponent");
    Sections sections;
    auto rit = retract.charts.find(id);
    if (rit != retract.charts.end()) sections = rit->second;

    std::string p = base.pi_name;
    while (leaf.ring.has_var(p)) p += "'";
    std::vector<std::string> vars = leaf.t_vars();
    vars.push_back(p);
    Chart yp = Chart::model("Y(" + id + ")", vars, p, base.n, leaf.boundary, Poly::var(p));

    std::map<std::string, Poly> images{{p, *leaf.pi}};
    for (const auto& t : leaf.t_vars()) images[t] = section_image(leaf, sections, t);
    RingMap phi(yp.ring, leaf.ring, images);
    Factorization fac = factor_trivial_modification(yp, leaf, phi);

    Atlas ya;
    ya.charts.push_back(yp);
    EmbeddedLeaf e{id, yp, fac.path, BlowupTree(ya), yp.id, {}};
    for (const auto& s : fac.path) {
      const Chart& cur = e.y.chart(e.strict);
      auto var = cur.boundary.var(s.label);
      if (!var) throw Error(ErrorCode::SplitMismatch, "label " + std::to_string(s.label) + " empty on " + cur.id);
      BlowupStep step = log_blowup_reduced_divisor(cur, *var);
      e.strict = step.children[0].chart.id;
      e.y.apply(step);
    }

    for (const auto& cid : e.y.leaves()) {
      const Chart& c = e.y.chart(cid);
      bool shaped = (cid == e.strict || c.is_ptm()) ? has_c_shape(c, base.n) : has_log_smooth_shape(c, base.n);
      if (!shaped) e.problems.push_back(cid + ": relation is not pi^n");
      const StepChild* made = e.y.creator(cid);
      if (made && made->role == ChildRole::LogEps && c.is_ptm() && !verify_distinguished(c).witness)
        e.problems.push_back(cid + ": eps-chart is not distinguished");
    }
    const Chart& st = e.y.chart(e.strict);
    auto ts = st.t_vars(), tl = leaf.t_vars();
    std::sort(ts.begin(), ts.end());
    std::sort(tl.begin(), tl.end());
    Monomial component = st.component ? *st.component : st.ring.relation();
    if (ts != tl || !(component == Monomial::var(st.eps, leaf.h)))
      e.problems.push_back(e.strict + ": component quotient differs from " + id);
    out.leaves.push_back(std::move(e));
  }
  return out;
}

}  // namespace thick
