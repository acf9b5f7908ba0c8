#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "thick/io.hpp"

using namespace thick;
using thick::io::json;

namespace {

enum Exit { kOk = 0, kNegative = 2, kInput = 3, kFuel = 4 };

struct Config {
  std::string subcommand;
  std::string in = "-";
  std::string out = "-";
  std::string format = "json";
  int fuel = kDefaultFuel;
  unsigned seed = 20240611;
  std::string oracle = "builtin";
};

// What a subcommand hands back: a document, or DOT text, and a verdict.
struct Report {
  json doc;
  std::optional<BlowupTree> tree;
  bool positive = true;
};

json read_input(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return json::parse(in);
}

const json& get(const json& j, const std::string& key) { return io::field(j, key); }

BaseSpec base_of(const json& j) {
  BaseSpec b;
  b.n = get(j, "n").get<int>();
  if (j.contains("pi_name")) b.pi_name = j["pi_name"].get<std::string>();
  return b;
}

Subscheme ideal_of(const json& j) { return j.contains("ideal") ? io::subscheme_from_json(j["ideal"]) : Subscheme{}; }

Report verify_ptm_cmd(const json& j) {
  HypersurfacePresentation p;
  p.ambient_vars = get(j, "vars").get<std::vector<std::string>>();
  p.f = parse_poly(get(j, "f").get<std::string>());
  if (j.contains("nilpotent") && !j["nilpotent"].is_null()) p.declared_nilpotent = j["nilpotent"].get<std::string>();
  PtmVerdict v = verify_ptm(p);
  return {io::to_json(v), std::nullopt, v.ok};
}

Report verify_bpair_cmd(const json& j) {
  DistinguishedVerdict v = verify_distinguished(io::chart_from_json(get(j, "chart")));
  return {io::to_json(v), std::nullopt, v.witness.has_value()};
}

Report blowup_cmd(const json& j) {
  BlowupTree tree(io::atlas_from_json(get(j, "atlas")));
  std::vector<Selector> sel;
  for (const auto& s : get(j, "selectors")) sel.push_back(io::selector_from_json(s));
  run_sequence(tree, sel);
  return {io::to_json(tree), tree, true};
}

Report logblow_cmd(const json& j) {
  Chart c = io::chart_from_json(get(j, "chart"));
  Atlas a;
  a.charts.push_back(c);
  BlowupTree tree(a);
  tree.apply(log_blowup_reduced_divisor(c, get(j, "var").get<std::string>()));
  return {io::to_json(tree), tree, true};
}

Report principalize_cmd(const json& j, const ReductionOracle& oracle) {
  auto [tree, r] = pushforward_principalization(io::atlas_from_json(get(j, "atlas")), ideal_of(j), oracle);
  json doc = io::to_json(r);
  doc["tree"] = io::to_json(tree);
  return {doc, tree, true};
}

Report monomialize_cmd(const json& j) {
  std::map<std::string, Poly> d;
  for (const auto& [id, f] : get(j, "divisor").items()) d[id] = parse_poly(f.get<std::string>());
  auto [tree, r] = monomialize_divisor(io::atlas_from_json(get(j, "atlas")), d);
  json doc = io::to_json(r);
  doc["tree"] = io::to_json(tree);
  return {doc, tree, true};
}

Report factor_cmd(const json& j) {
  Chart x = io::chart_from_json(get(j, "x"));
  Chart y = io::chart_from_json(get(j, "y"));
  RingMap phi = io::ring_map_from_json(get(j, "map"), x.ring, y.ring);
  Factorization f = factor_trivial_modification(x, y, phi);
  return {io::to_json(f), f.replay, true};
}

Report retract_cmd(const json& j) {
  Atlas a = io::atlas_from_json(get(j, "atlas"));
  Retract r = j.contains("retract") ? io::retract_from_json(j["retract"]) : trivial_generic_retract(a);
  auto [tree, ext] = extend_retract(a, r);
  json doc = io::to_json(ext);
  doc["tree"] = io::to_json(tree);
  return {doc, tree, true};
}

Report resolve_cmd(const json& j, const ReductionOracle& oracle) {
  Atlas a = io::atlas_from_json(get(j, "atlas"));
  ResolveResult r = resolve_over_B(a, ideal_of(j), base_of(j), oracle);
  return {io::to_json(r, a), r.tree, r.ok()};
}

Report embed_cmd(const json& j, const ReductionOracle& oracle) {
  Atlas a = io::atlas_from_json(get(j, "atlas"));
  BaseSpec base = base_of(j);
  ResolveResult r = resolve_over_B(a, ideal_of(j), base, oracle);
  if (!r.ok()) return {io::to_json(r, a), r.tree, false};
  // A given retract is keyed by leaves of the resolution; absent means trivial sections.
  Retract retract;
  if (j.contains("retract")) retract = extend_retract(r.tree, io::retract_from_json(j["retract"])).retract;
  LogSmoothEmbedding e = embed_log_smooth(r.tree, retract, base);
  json doc = io::to_json(e);
  doc["resolution"] = io::to_json(r, a);
  return {doc, r.tree, e.ok()};
}

Report dispatch(const Config& cfg, const json& j) {
  ReductionOracle oracle = builtin_oracle(cfg.fuel);
  const std::string& s = cfg.subcommand;
  if (s == "verify-ptm") return verify_ptm_cmd(j);
  if (s == "verify-bpair") return verify_bpair_cmd(j);
  if (s == "blowup") return blowup_cmd(j);
  if (s == "logblow") return logblow_cmd(j);
  if (s == "principalize") return principalize_cmd(j, oracle);
  if (s == "monomialize") return monomialize_cmd(j);
  if (s == "factor") return factor_cmd(j);
  if (s == "retract-extend") return retract_cmd(j);
  if (s == "resolve") return resolve_cmd(j, oracle);
  if (s == "embed") return embed_cmd(j, oracle);
  throw Error(ErrorCode::InvalidInput, "unknown subcommand " + s);
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

int run(const Config& cfg) {
  try {
    if (cfg.subcommand == "selftest") {
      std::ostringstream out;
      bool ok = acceptance::report(acceptance::run_all({cfg.seed, cfg.fuel}), out);
      write_output(cfg.out, out.str());
      return ok ? kOk : kNegative;
    }
    Report r = dispatch(cfg, read_input(cfg.in));
    if (cfg.format == "dot") {
      if (!r.tree) throw Error(ErrorCode::InvalidInput, cfg.subcommand + " has no tree to draw");
      write_output(cfg.out, io::to_dot(*r.tree));
    } else {
      write_output(cfg.out, r.doc.dump(2) + "\n");
    }
    return r.positive ? kOk : kNegative;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const FuelExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFuel;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::FuelExhausted ? kFuel : kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chart-level blowups and resolution over a thick point"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  for (const char* name : {"verify-ptm", "verify-bpair", "blowup", "logblow", "principalize", "monomialize", "factor",
                           "retract-extend", "resolve", "embed", "selftest"}) {
    auto* sub = app.add_subcommand(name);
    sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
  }
  app.add_option("--in", cfg.in, "input JSON, - for stdin");
  app.add_option("--out", cfg.out, "output path, - for stdout");
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--fuel", cfg.fuel)->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed);
  app.add_option("--oracle", cfg.oracle)->check(CLI::IsMember({"builtin"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInput;
  }
  return run(cfg);
}
