#include "thick/io.hpp"

#include <sstream>

namespace thick::io {

const json& field(const json& j, const std::string& key) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "expected an object holding \"" + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::InvalidInput, "missing field \"" + key + "\"");
  return *it;
}

namespace {

std::string str_of(const json& j, const std::string& what) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidInput, what + " must be a string");
  return j.get<std::string>();
}

int int_of(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::InvalidInput, what + " must be an integer");
  return j.get<int>();
}

int label_key(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidInput, "\"" + s + "\" is not a boundary label");
}

json opt_poly(const std::optional<Poly>& p) { return p ? json(p->str()) : json(nullptr); }

}  // namespace

json to_json(const Monomial& m) {
  json j = json::object();
  for (const auto& [v, e] : m.exponents()) j[v] = e;
  return j;
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "a monomial is an object {var: exponent}");
  std::map<std::string, int> e;
  for (const auto& [v, x] : j.items()) e[v] = int_of(x, "exponent of " + v);
  return Monomial(e);
}

json to_json(const Boundary& b) {
  json j = json::array();
  for (int label = 1; label <= b.size(); ++label) {
    auto v = b.var(label);
    j.push_back({{"label", label}, {"var", v ? json(*v) : json(nullptr)}});
  }
  return j;
}

Boundary boundary_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "boundary must be an array");
  Boundary b;
  for (const auto& e : j) {
    int label = int_of(field(e, "label"), "label");
    if (label < 1) throw Error(ErrorCode::InvalidInput, "labels start at 1");
    const json& v = field(e, "var");
    b.set(label, v.is_null() ? std::nullopt : std::optional<std::string>(str_of(v, "boundary var")));
  }
  return b;
}

json to_json(const Chart& c) {
  json j{{"id", c.id},
         {"vars", c.ring.vars()},
         {"relation", to_json(c.ring.relation())},
         {"nilpotent", c.eps},
         {"thickness", c.h},
         {"boundary", to_json(c.boundary)},
         {"pi", opt_poly(c.pi)}};
  if (c.component) j["component"] = to_json(*c.component);
  return j;
}

Chart chart_from_json(const json& j) {
  std::vector<std::string> vars;
  const json& jv = field(j, "vars");
  if (!jv.is_array()) throw Error(ErrorCode::InvalidInput, "vars must be an array");
  for (const auto& v : jv) vars.push_back(str_of(v, "variable"));
  std::string eps = str_of(field(j, "nilpotent"), "nilpotent");
  int h = int_of(field(j, "thickness"), "thickness");
  Monomial rel = j.contains("relation") ? monomial_from_json(j["relation"]) : Monomial::var(eps, h);
  Boundary b = j.contains("boundary") ? boundary_from_json(j["boundary"]) : Boundary();
  std::optional<Poly> pi;
  if (j.contains("pi") && !j["pi"].is_null()) pi = parse_poly(str_of(j["pi"], "pi"));
  std::string id = j.contains("id") ? str_of(j["id"], "id") : "root";
  Chart c(id, MonomialQuotientRing(vars, rel), eps, h, b, pi);
  if (j.contains("component") && !j["component"].is_null()) c.component = monomial_from_json(j["component"]);
  return c;
}

json to_json(const RingMap& m) {
  json j = json::object();
  for (const auto& [v, p] : m.images()) j[v] = p.str();
  return j;
}

RingMap ring_map_from_json(const json& j, const MonomialQuotientRing& source, const MonomialQuotientRing& target) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "a map is an object {var: image}");
  std::map<std::string, Poly> images;
  for (const auto& [v, p] : j.items()) images[v] = parse_poly(str_of(p, "image of " + v));
  return RingMap(source, target, images);
}

json to_json(const Atlas& a) {
  json charts = json::array(), maps = json::array();
  for (const auto& c : a.charts) charts.push_back(to_json(c));
  for (const auto& m : a.maps) maps.push_back({{"source", m.source}, {"target", m.target}, {"images", to_json(m.map)}});
  return {{"charts", charts},
          {"maps", maps},
          {"base_exponent", a.base_exponent ? json(*a.base_exponent) : json(nullptr)}};
}

Atlas atlas_from_json(const json& j) {
  Atlas a;
  if (j.is_object() && !j.contains("charts")) {
    a.charts.push_back(chart_from_json(j));
    return a;
  }
  const json& charts = field(j, "charts");
  if (!charts.is_array() || charts.empty()) throw Error(ErrorCode::InvalidInput, "charts must be a nonempty array");
  for (const auto& c : charts) a.charts.push_back(chart_from_json(c));
  if (j.contains("maps"))
    for (const auto& m : j["maps"]) {
      std::string s = str_of(field(m, "source"), "source"), t = str_of(field(m, "target"), "target");
      const Chart* cs = a.find(s);
      const Chart* ct = a.find(t);
      if (!cs || !ct) throw Error(ErrorCode::InvalidInput, "map between unknown charts " + s + " -> " + t);
      a.maps.push_back({s, t, ring_map_from_json(field(m, "images"), cs->ring, ct->ring)});
    }
  if (j.contains("base_exponent") && !j["base_exponent"].is_null())
    a.base_exponent = int_of(j["base_exponent"], "base_exponent");
  return a;
}

json to_json(const Center& c) {
  switch (c.kind) {
    case CenterKind::Regular: return {{"kind", "regular"}, {"vars", c.vars}};
    case CenterKind::ReducedDivisor: return {{"kind", "reduced_divisor"}, {"f", c.f.str()}};
    case CenterKind::LogReducedDivisor: return {{"kind", "log"}, {"var", c.vars.at(0)}};
  }
  return {};
}

Center center_from_json(const json& j) {
  std::string kind = str_of(field(j, "kind"), "kind");
  if (kind == "regular") {
    std::vector<std::string> vars;
    for (const auto& v : field(j, "vars")) vars.push_back(str_of(v, "center variable"));
    return Center::regular(vars);
  }
  if (kind == "reduced_divisor") return Center::reduced_divisor(parse_poly(str_of(field(j, "f"), "f")));
  if (kind == "log") return Center::log_divisor(str_of(field(j, "var"), "var"));
  throw Error(ErrorCode::InvalidInput, "unknown center kind " + kind);
}

json to_json(const Selector& s) {
  return {{"chart", s.chart ? json(*s.chart) : json(nullptr)}, {"center", to_json(s.center)}};
}

Selector selector_from_json(const json& j) {
  Selector s;
  if (j.contains("chart") && !j["chart"].is_null()) s.chart = str_of(j["chart"], "chart");
  if (j.contains("center")) {
    s.center = center_from_json(j["center"]);
  } else {
    std::vector<std::string> vars;
    for (const auto& v : field(j, "vars")) vars.push_back(str_of(v, "center variable"));
    s.center = Center::regular(vars);
  }
  return s;
}

json to_json(const BlowupStep& s) {
  json children = json::array();
  for (const auto& c : s.children) {
    json renamed = json::object();
    for (const auto& [a, b] : c.renamed) renamed[a] = b;
    children.push_back({{"chart", to_json(c.chart)},
                        {"role", to_string(c.role)},
                        {"map", to_json(c.map)},
                        {"exceptional", to_json(c.exceptional)},
                        {"renamed", renamed}});
  }
  return {{"parent", s.parent}, {"center", to_json(s.center)}, {"children", children}};
}

json to_json(const BlowupTree& t) {
  json steps = json::array();
  for (const auto& s : t.steps()) steps.push_back(to_json(s));
  return {{"root", to_json(t.root())}, {"steps", steps}, {"leaves", t.leaves()}, {"skipped", t.skipped()}};
}

namespace {

ChildRole role_from_string(const std::string& s) {
  for (ChildRole r : {ChildRole::Regular, ChildRole::Trivial, ChildRole::LogT, ChildRole::LogEps})
    if (to_string(r) == s) return r;
  throw Error(ErrorCode::InvalidInput, "unknown child role " + s);
}

}  // namespace

BlowupTree tree_from_json(const json& j) {
  BlowupTree t(atlas_from_json(field(j, "root")));
  for (const auto& js : field(j, "steps")) {
    BlowupStep s;
    s.parent = str_of(field(js, "parent"), "parent");
    if (!t.is_leaf(s.parent)) throw Error(ErrorCode::InvalidInput, "step parent " + s.parent + " is not a leaf");
    s.center = center_from_json(field(js, "center"));
    const MonomialQuotientRing& pring = t.chart(s.parent).ring;
    for (const auto& jc : field(js, "children")) {
      Chart c = chart_from_json(field(jc, "chart"));
      RingMap m = ring_map_from_json(field(jc, "map"), pring, c.ring);
      std::map<std::string, std::string> renamed;
      if (jc.contains("renamed"))
        for (const auto& [a, b] : jc["renamed"].items()) renamed[a] = str_of(b, "renamed");
      s.children.push_back({c, m, monomial_from_json(field(jc, "exceptional")),
                            role_from_string(str_of(field(jc, "role"), "role")), renamed});
    }
    t.apply(std::move(s));
  }
  if (j.contains("skipped")) t.add_skipped(int_of(j["skipped"], "skipped"));
  return t;
}

json to_json(const Subscheme& z) {
  json j = json::object();
  for (const auto& [id, gens] : z) {
    json g = json::array();
    for (const auto& p : gens) g.push_back(p.str());
    j[id] = g;
  }
  return j;
}

Subscheme subscheme_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "an ideal is an object {chart: [generator]}");
  Subscheme z;
  for (const auto& [id, gens] : j.items()) {
    if (!gens.is_array()) throw Error(ErrorCode::InvalidInput, "generators of " + id + " must be an array");
    Ideal& ideal = z[id];
    for (const auto& g : gens) ideal.push_back(parse_poly(str_of(g, "generator")));
  }
  return z;
}

json to_json(const MonomialDivisor& d) {
  json j = json::object();
  for (const auto& [label, m] : d) j[std::to_string(label)] = m;
  return j;
}

MonomialDivisor divisor_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "a monomial divisor is an object {label: mult}");
  MonomialDivisor d;
  for (const auto& [k, v] : j.items()) d[label_key(k)] = int_of(v, "multiplicity");
  return d;
}

json to_json(const Sections& s) {
  json j = json::object();
  for (const auto& [var, coeffs] : s) {
    json c = json::object();
    for (const auto& [e, a] : coeffs) c[std::to_string(e)] = a.str();
    j[var] = c;
  }
  return j;
}

Sections sections_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "sections must be an object");
  Sections s;
  for (const auto& [var, coeffs] : j.items()) {
    auto& out = s[var];
    for (const auto& [e, a] : coeffs.items()) {
      int k = label_key(e);
      out[k] = parse_rational_function(str_of(a, "section coefficient"));
    }
  }
  return s;
}

json to_json(const Retract& r) {
  json j = json::array();
  for (const auto& [id, s] : r.charts) j.push_back({{"chart", id}, {"sections", to_json(s)}});
  return j;
}

Retract retract_from_json(const json& j) {
  Retract r;
  const json& list = j.is_object() ? json::array({j}) : j;
  if (!list.is_array()) throw Error(ErrorCode::InvalidInput, "a retract is a list of chart sections");
  for (const auto& e : list) r.charts[str_of(field(e, "chart"), "chart")] = sections_from_json(field(e, "sections"));
  return r;
}

json to_json(const PtmVerdict& v) {
  json j{{"ok", v.ok}, {"reason", v.reason}};
  if (v.witness) j["witness"] = {{"nilpotent", v.witness->first}, {"thickness", v.witness->second}};
  return j;
}

json to_json(const DistinguishedVerdict& v) {
  json j{{"ok", v.witness.has_value()}};
  if (v.witness) j["witness"] = {{"eps", v.witness->eps}, {"d", to_json(v.witness->d)}, {"unit", v.witness->unit.str()}};
  if (v.reason) j["reason"] = to_string(*v.reason);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

json to_json(const PrincipalizationResult& r) {
  json centers = json::array();
  for (const auto& s : r.centers) centers.push_back(to_json(s));
  return {{"centers", centers}, {"residual", to_json(r.residual)}};
}

json to_json(const MonomializeResult& r) {
  json mult = json::object(), div = json::object();
  for (const auto& [id, d] : r.multiplicities) mult[id] = to_json(d);
  for (const auto& [id, p] : r.divisor) div[id] = p.str();
  return {{"multiplicities", mult}, {"divisor", div}};
}

json to_json(const Factorization& f) {
  json path = json::array();
  for (const auto& s : f.path) path.push_back({{"label", s.label}, {"var", s.var}});
  return {{"pre", to_json(f.pre)},
          {"y_prime", f.y_prime},
          {"path", path},
          {"replay", to_json(f.replay)},
          {"x_m", f.x_m},
          {"split", to_json(f.split)},
          {"even_multiplicities", f.even_multiplicities}};
}

json to_json(const RetractExtension& r) {
  json maxima = json::array();
  for (const auto& [n, label] : r.maxima) maxima.push_back({{"n", n}, {"label", label}});
  return {{"retract", to_json(r.retract)}, {"maxima", maxima}};
}

json to_json(const ResolveResult& r, const Atlas& input) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    json steps = json::array();
    for (std::size_t i = s.first_step; i < s.end_step; ++i) steps.push_back(to_json(r.tree.steps()[i]));
    stages.push_back({{"name", s.name}, {"steps", steps}});
  }
  json leaves = json::array();
  for (const auto& l : r.leaves) {
    json v = to_json(l.verdict);
    json e{{"chart", to_json(r.tree.chart(l.chart))}, {"ok", v["ok"]}};
    for (const char* k : {"witness", "reason", "detail"})
      if (v.contains(k)) e[k] = v[k];
    if (l.z_divisor) e["z_divisor"] = to_json(*l.z_divisor);
    leaves.push_back(e);
  }
  return {{"input", to_json(input)}, {"stages", stages}, {"tree", to_json(r.tree)}, {"leaves", leaves}, {"ok", r.ok()}};
}

json to_json(const SmoothAwayResult& r) {
  json leaves = json::array();
  for (const auto& l : r.leaves)
    leaves.push_back({{"chart", l.chart}, {"locus", to_json(l.locus)}, {"in_boundary", l.in_boundary}});
  return {{"tree", to_json(r.tree)}, {"leaves", leaves}};
}

json to_json(const LogSmoothEmbedding& e) {
  json leaves = json::array();
  for (const auto& l : e.leaves) {
    json path = json::array();
    for (const auto& s : l.path) path.push_back({{"label", s.label}, {"var", s.var}});
    leaves.push_back({{"leaf", l.leaf},
                      {"y_prime", to_json(l.y_prime)},
                      {"path", path},
                      {"y", to_json(l.y)},
                      {"strict", l.strict},
                      {"problems", l.problems}});
  }
  return {{"leaves", leaves}, {"ok", e.ok()}};
}

ReductionOracle oracle_from_json(JsonOracle f) {
  return [f](const Atlas& atlas, const Subscheme& ideal) {
    json boundary = json::object();
    for (const auto& c : atlas.charts) boundary[c.id] = to_json(c.boundary);
    json answer = f(to_json(atlas), boundary, to_json(ideal));
    if (!answer.is_array()) throw Error(ErrorCode::OracleFailure, "oracle must answer with a list of selectors");
    std::vector<Selector> out;
    for (const auto& s : answer) out.push_back(selector_from_json(s));
    return out;
  };
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const BlowupTree& t) {
  std::ostringstream os;
  os << "digraph blowups {\n  node [shape=box];\n";
  Atlas a = t.atlas();
  for (const auto& c : a.charts) {
    std::string label = c.id + "\\n" + dot_escape(c.ring.str());
    if (c.pi) label += "\\npi = " + dot_escape(c.pi->str());
    os << "  \"" << dot_escape(c.id) << "\" [label=\"" << label << "\"];\n";
  }
  for (const auto& s : t.steps())
    for (const auto& c : s.children) {
      std::string label = dot_escape(s.center.str());
      for (const auto& [v, p] : c.map.images())
        if (!(p == Poly::var(v))) label += "\\n" + dot_escape(v + " -> " + p.str());
      os << "  \"" << dot_escape(s.parent) << "\" -> \"" << dot_escape(c.chart.id) << "\" [label=\"" << label
         << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace thick::io
