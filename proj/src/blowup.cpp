#include "thick/blowup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "thick/error.hpp"

namespace thick {

std::string Center::str() const {
  switch (kind) {
    case CenterKind::Regular: {
      std::string s = "regular(";
      for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
      return s + ")";
    }
    case CenterKind::ReducedDivisor:
      return "divisor(" + f.str() + ")";
    case CenterKind::LogReducedDivisor:
      return "log(" + vars.at(0) + ")";
  }
  return "?";
}

std::string to_string(ChildRole role) {
  switch (role) {
    case ChildRole::Regular: return "regular";
    case ChildRole::Trivial: return "trivial";
    case ChildRole::LogT: return "t-chart";
    case ChildRole::LogEps: return "eps-chart";
  }
  return "?";
}

namespace {

class FreshNames {
 public:
  explicit FreshNames(const MonomialQuotientRing& ring) : ring_(ring) {}
  std::string operator()(const std::string& base) {
    std::string name = base + "'";
    while (ring_.has_var(name) || used_.count(name)) name += "'";
    used_.insert(name);
    return name;
  }

 private:
  const MonomialQuotientRing& ring_;
  std::set<std::string> used_;
};

std::vector<std::string> renamed_vars(const std::vector<std::string>& vars,
                                      const std::map<std::string, std::string>& names) {
  std::vector<std::string> out;
  for (const auto& v : vars) {
    auto it = names.find(v);
    out.push_back(it == names.end() ? v : it->second);
  }
  return out;
}

std::map<std::string, std::string> inverse(const std::map<std::string, std::string>& names) {
  std::map<std::string, std::string> out;
  for (const auto& [a, b] : names) out[b] = a;
  return out;
}

std::optional<Poly> pulled_pi(const Chart& chart, const RingMap& map) {
  if (!chart.pi) return std::nullopt;
  return apply_map(map, *chart.pi).poly();
}

void require_ptm(const Chart& chart) {
  if (!chart.is_ptm()) throw Error(ErrorCode::NotPtm, chart.id + " is not a ptm chart");
}

}  // namespace

BlowupStep blowup_regular(const Chart& chart, const std::vector<std::string>& s) {
  if (s.empty()) throw Error(ErrorCode::BadCenter, "empty regular center");
  std::set<std::string> sset(s.begin(), s.end());
  if (sset.size() != s.size()) throw Error(ErrorCode::BadCenter, "repeated center variable");
  for (const auto& v : s) {
    if (v == chart.eps) throw Error(ErrorCode::BadCenter, "center variables must differ from " + chart.eps);
    if (!chart.ring.has_var(v)) throw Error(ErrorCode::BadCenter, v + " is not a variable of " + chart.id);
  }
  require_ptm(chart);

  BlowupStep step{chart.id, Center::regular(s), {}};
  for (const auto& ti : s) {
    FreshNames fresh(chart.ring);
    std::map<std::string, std::string> names{{chart.eps, fresh(chart.eps)}};
    for (const auto& tj : s)
      if (tj != ti) names[tj] = fresh(tj);

    MonomialQuotientRing ring(renamed_vars(chart.ring.vars(), names), Monomial::var(names[chart.eps], chart.h));
    std::map<std::string, Poly> images;
    for (const auto& [old, now] : names) images[old] = Poly::var(ti) * Poly::var(now);
    RingMap map(chart.ring, ring, images);

    Boundary b;
    for (int label = 1; label <= chart.boundary.size(); ++label) {
      auto v = chart.boundary.var(label);
      if (!v || *v == ti)
        b.set(label, std::nullopt);
      else
        b.set(label, names.count(*v) ? names[*v] : *v);
    }
    b.append(ti);

    Chart child(chart.id + "." + ti, ring, names[chart.eps], chart.h, b, pulled_pi(chart, map));
    step.children.push_back({child, map, Monomial::var(ti), ChildRole::Regular, inverse(names)});
  }
  return step;
}

BlowupStep blowup_reduced_divisor(const Chart& chart, const Poly& f) {
  require_ptm(chart);
  if (chart.h < 2) throw Error(ErrorCode::NotPtm, chart.id + " is reduced");
  auto term = normal_form(f, chart.ring).poly().at_zero(chart.eps).as_term();
  if (!term || term->second.is_one())
    throw Error(ErrorCode::NonMonomialDivisor, "reduction of " + f.str() + " is not a nonconstant monomial");
  const Monomial& m = term->second;

  FreshNames fresh(chart.ring);
  std::map<std::string, std::string> names{{chart.eps, fresh(chart.eps)}};
  const std::string& e2 = names[chart.eps];
  MonomialQuotientRing ring(renamed_vars(chart.ring.vars(), names), Monomial::var(e2, chart.h));
  RingMap map(chart.ring, ring, {{chart.eps, Poly(m) * Poly::var(e2)}});
  Chart child(chart.id + "." + m.str(), ring, e2, chart.h, chart.boundary, pulled_pi(chart, map));
  BlowupStep step{chart.id, Center::reduced_divisor(Poly(m)), {}};
  step.children.push_back({child, map, m, ChildRole::Trivial, inverse(names)});
  return step;
}

BlowupStep log_blowup_reduced_divisor(const Chart& chart, const std::string& t) {
  if (!chart.boundary.contains(t)) throw Error(ErrorCode::NotBoundaryVariable, t + " is not a boundary variable");
  if (chart.h < 2) throw Error(ErrorCode::NotPtm, chart.id + " is reduced");
  const std::string& eps = chart.eps;
  const Monomial& rel = chart.ring.relation();
  if (rel.degree(eps) == 0) throw Error(ErrorCode::NotPtm, "nilpotent parameter absent from relation");
  BlowupStep step{chart.id, Center::log_divisor(t), {}};

  {
    FreshNames fresh(chart.ring);
    std::map<std::string, std::string> names{{eps, fresh(eps)}};
    const std::string& e2 = names[eps];
    auto pull = [&](const Monomial& m) {
      int a = m.degree(eps);
      return m.without(eps) * Monomial::var(e2, a) * Monomial::var(t, a);
    };
    MonomialQuotientRing ring(renamed_vars(chart.ring.vars(), names), pull(rel));
    RingMap map(chart.ring, ring, {{eps, Poly::var(t) * Poly::var(e2)}});
    Chart child(chart.id + "." + t, ring, e2, chart.h, chart.boundary, pulled_pi(chart, map));
    child.component = pull(chart.component ? *chart.component : rel).without(t);
    step.children.push_back({child, map, Monomial::var(t), ChildRole::LogT, inverse(names)});
  }
  {
    FreshNames fresh(chart.ring);
    std::map<std::string, std::string> names{{t, fresh(t)}};
    const std::string& t2 = names[t];
    int b = rel.degree(t);
    MonomialQuotientRing ring(renamed_vars(chart.ring.vars(), names),
                              rel.without(t) * Monomial::var(t2, b) * Monomial::var(eps, b));
    RingMap map(chart.ring, ring, {{t, Poly::var(t2) * Poly::var(eps)}});
    Boundary bd = chart.boundary;
    bd.set(*chart.boundary.label_of(t), t2);
    Chart child(chart.id + "." + eps, ring, eps, chart.h, bd, pulled_pi(chart, map));
    step.children.push_back({child, map, Monomial::var(eps), ChildRole::LogEps, inverse(names)});
  }
  return step;
}

BlowupStep apply_center(const Chart& chart, const Center& center) {
  switch (center.kind) {
    case CenterKind::Regular: return blowup_regular(chart, center.vars);
    case CenterKind::ReducedDivisor: return blowup_reduced_divisor(chart, center.f);
    case CenterKind::LogReducedDivisor:
      if (center.vars.size() != 1)
        throw Error(ErrorCode::BadCenter, "log blowups take a single boundary variable");
      return log_blowup_reduced_divisor(chart, center.vars[0]);
  }
  throw std::logic_error("unknown center kind");
}

// ---------------------------------------------------------------- tree

BlowupTree::BlowupTree(Atlas root) : root_(std::move(root)) {
  for (const auto& c : root_.charts) {
    if (nodes_.count(c.id)) throw Error(ErrorCode::InvalidInput, "duplicate chart id " + c.id);
    nodes_.emplace(c.id, Node{c, std::nullopt, std::nullopt, 0});
    leaves_.push_back(c.id);
    order_.push_back(c.id);
  }
}

bool BlowupTree::is_leaf(const std::string& id) const {
  return std::find(leaves_.begin(), leaves_.end(), id) != leaves_.end();
}

const Chart& BlowupTree::chart(const std::string& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw Error(ErrorCode::InvalidInput, "no chart " + id);
  return it->second.chart;
}

std::vector<Chart> BlowupTree::leaf_charts() const {
  std::vector<Chart> out;
  for (const auto& id : leaves_) out.push_back(chart(id));
  return out;
}

std::optional<std::string> BlowupTree::parent(const std::string& id) const {
  chart(id);
  return nodes_.at(id).parent;
}

std::string BlowupTree::root_of(const std::string& id) const {
  std::string cur = id;
  while (auto p = parent(cur)) cur = *p;
  return cur;
}

const StepChild* BlowupTree::creator(const std::string& id) const {
  chart(id);
  const Node& n = nodes_.at(id);
  if (!n.step) return nullptr;
  return &steps_[*n.step].children[n.child];
}

std::string BlowupTree::root_variable(const std::string& id, const std::string& var) const {
  std::string cur = id, v = var;
  while (const StepChild* c = creator(cur)) {
    auto it = c->renamed.find(v);
    if (it != c->renamed.end()) v = it->second;
    cur = *nodes_.at(cur).parent;
  }
  return v;
}

RingMap BlowupTree::composite_map(const std::string& id) const {
  std::vector<const StepChild*> path;
  std::string cur = id;
  while (const StepChild* c = creator(cur)) {
    path.push_back(c);
    cur = *nodes_.at(cur).parent;
  }
  RingMap m = RingMap::identity(chart(cur).ring);
  for (auto it = path.rbegin(); it != path.rend(); ++it) m = m.then((*it)->map);
  return m;
}

void BlowupTree::apply(BlowupStep step) {
  auto pos = std::find(leaves_.begin(), leaves_.end(), step.parent);
  if (pos == leaves_.end()) throw Error(ErrorCode::InvalidInput, step.parent + " is not a leaf");
  std::vector<std::string> ids;
  for (const auto& c : step.children) {
    if (nodes_.count(c.chart.id)) throw Error(ErrorCode::InvalidInput, "duplicate chart id " + c.chart.id);
    ids.push_back(c.chart.id);
  }
  std::size_t index = steps_.size();
  for (std::size_t i = 0; i < step.children.size(); ++i) {
    nodes_.emplace(ids[i], Node{step.children[i].chart, step.parent, index, i});
    order_.push_back(ids[i]);
  }
  pos = leaves_.erase(pos);
  leaves_.insert(pos, ids.begin(), ids.end());
  steps_.push_back(std::move(step));
}

void BlowupTree::update_leaf(const Chart& c) {
  if (!is_leaf(c.id)) throw Error(ErrorCode::InvalidInput, c.id + " is not a leaf");
  Node& n = nodes_.at(c.id);
  if (!(n.chart.ring == c.ring)) throw std::logic_error("update_leaf may not change the ring");
  n.chart = c;
  if (n.step) {
    steps_[*n.step].children[n.child].chart = c;
  } else {
    for (auto& rc : root_.charts)
      if (rc.id == c.id) rc = c;
  }
}

Atlas BlowupTree::atlas() const {
  Atlas a;
  a.base_exponent = root_.base_exponent;
  for (const auto& id : order_) a.charts.push_back(nodes_.at(id).chart);
  a.maps = root_.maps;
  for (const auto& s : steps_)
    for (const auto& c : s.children) a.maps.push_back({s.parent, c.chart.id, c.map});
  return a;
}

namespace {

bool center_meets(const Chart& chart, const Center& center) {
  switch (center.kind) {
    case CenterKind::Regular:
    case CenterKind::LogReducedDivisor:
      for (const auto& v : center.vars)
        if (!chart.ring.has_var(v)) return false;
      return true;
    case CenterKind::ReducedDivisor: {
      for (const auto& v : center.f.variables())
        if (!chart.ring.has_var(v)) return false;
      Poly red = normal_form(center.f, chart.ring).poly().at_zero(chart.eps);
      return !red.is_constant();
    }
  }
  return false;
}

}  // namespace

void run_sequence(BlowupTree& tree, const std::vector<Selector>& selectors) {
  for (const auto& sel : selectors) {
    if (sel.chart) {
      if (!tree.is_leaf(*sel.chart)) throw Error(ErrorCode::BadCenter, *sel.chart + " is not a current leaf");
      tree.apply(apply_center(tree.chart(*sel.chart), sel.center));
      continue;
    }
    std::vector<std::string> targets = tree.leaves();
    for (const auto& id : targets) {
      const Chart& c = tree.chart(id);
      if (!center_meets(c, sel.center)) {
        tree.add_skipped(1);
        continue;
      }
      tree.apply(apply_center(c, sel.center));
    }
  }
}

}  // namespace thick
