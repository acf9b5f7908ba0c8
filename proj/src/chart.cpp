#include "thick/chart.hpp"

#include <algorithm>
#include <stdexcept>

#include "thick/error.hpp"

namespace thick {

Boundary::Boundary(std::vector<std::optional<std::string>> slots) : slots_(std::move(slots)) {
  std::set<std::string> seen;
  for (const auto& s : slots_)
    if (s && !seen.insert(*s).second) throw Error(ErrorCode::InvalidInput, "boundary variable " + *s + " repeated");
}

std::optional<std::string> Boundary::var(int label) const {
  if (label < 1 || label > size()) return std::nullopt;
  return slots_[label - 1];
}

std::optional<int> Boundary::label_of(const std::string& v) const {
  for (int i = 0; i < size(); ++i)
    if (slots_[i] == v) return i + 1;
  return std::nullopt;
}

std::set<std::string> Boundary::vars() const {
  std::set<std::string> out;
  for (const auto& s : slots_)
    if (s) out.insert(*s);
  return out;
}

void Boundary::set(int label, std::optional<std::string> v) {
  if (label < 1) throw Error(ErrorCode::InvalidInput, "boundary labels start at 1");
  if (v) {
    auto existing = label_of(*v);
    if (existing && *existing != label)
      throw Error(ErrorCode::InvalidInput, "boundary variable " + *v + " already labelled");
  }
  if (label > size()) slots_.resize(label);
  slots_[label - 1] = std::move(v);
}

int Boundary::append(std::optional<std::string> v) {
  set(size() + 1, std::move(v));
  return size();
}

Chart::Chart(std::string id_, MonomialQuotientRing ring_, std::string eps_, int h_, Boundary boundary_,
             std::optional<Poly> pi_)
    : id(std::move(id_)), ring(std::move(ring_)), eps(std::move(eps_)), h(h_), boundary(std::move(boundary_)) {
  if (!ring.has_var(eps)) throw Error(ErrorCode::UnknownVariable, "nilpotent " + eps + " not in " + ring.str());
  if (h < 1) throw Error(ErrorCode::InvalidInput, "thickness must be positive");
  for (const auto& v : boundary.vars()) {
    if (v == eps) throw Error(ErrorCode::InvalidInput, "nilpotent parameter cannot be a boundary variable");
    if (!ring.has_var(v)) throw Error(ErrorCode::UnknownVariable, "boundary variable " + v + " not in chart");
  }
  if (pi_) pi = normal_form(*pi_, ring).poly();
}

Chart Chart::model(std::string id, std::vector<std::string> vars, const std::string& eps, int h,
                   Boundary boundary, std::optional<Poly> pi) {
  if (h < 1) throw Error(ErrorCode::InvalidInput, "thickness must be positive");
  MonomialQuotientRing ring(std::move(vars), Monomial::var(eps, h));
  return Chart(std::move(id), std::move(ring), eps, h, std::move(boundary), std::move(pi));
}

std::vector<std::string> Chart::t_vars() const {
  std::vector<std::string> out;
  for (const auto& v : ring.vars())
    if (v != eps) out.push_back(v);
  return out;
}

const Chart* Atlas::find(const std::string& id) const {
  for (const auto& c : charts)
    if (c.id == id) return &c;
  return nullptr;
}

int thickness(const Chart& chart) {
  if (!chart.is_ptm()) throw Error(ErrorCode::NotPtmRing, chart.ring.str() + " is not a ptm chart");
  RingElem e = chart.elem(Poly::var(chart.eps));
  if (e.pow(chart.h - 1).is_zero() || !e.pow(chart.h).is_zero())
    throw std::logic_error("inconsistent thickness on chart " + chart.id);
  return chart.h;
}

PtmVerdict verify_ptm(const HypersurfacePresentation& p) {
  PtmVerdict v;
  for (const auto& x : p.f.variables())
    if (std::find(p.ambient_vars.begin(), p.ambient_vars.end(), x) == p.ambient_vars.end()) {
      v.reason = "variable " + x + " is not ambient";
      return v;
    }
  if (p.f.is_zero()) {
    v.reason = "f is zero";
    return v;
  }
  auto term = p.f.as_term();
  if (!term) {
    v.reason = "f is not a unit times a monomial on the whole chart";
    return v;
  }
  const auto& exps = term->second.exponents();
  if (exps.size() != 1) {
    v.reason = exps.empty() ? "f is a unit" : "monomial " + term->second.str() + " is not a pure power";
    return v;
  }
  const auto& [var, n] = *exps.begin();
  if (p.declared_nilpotent && *p.declared_nilpotent != var) {
    v.reason = "declared nilpotent " + *p.declared_nilpotent + " does not match " + var;
    return v;
  }
  v.ok = true;
  v.witness = std::make_pair(var, n);
  return v;
}

Chart chart_from_presentation(const HypersurfacePresentation& p, const std::string& id) {
  auto v = verify_ptm(p);
  if (!v.ok) throw Error(ErrorCode::InvalidInput, "not a ptm: " + v.reason);
  return Chart::model(id, p.ambient_vars, v.witness->first, v.witness->second);
}

Chart reduction(const Chart& chart) {
  if (!chart.is_ptm()) throw Error(ErrorCode::NotPtmRing, chart.ring.str() + " is not a ptm chart");
  Chart r = Chart::model(chart.id, chart.ring.vars(), chart.eps, 1, chart.boundary, chart.pi);
  return r;
}

std::vector<std::string> check_atlas(const Atlas& atlas) {
  std::vector<std::string> out;
  for (const auto& m : atlas.maps) {
    const Chart* s = atlas.find(m.source);
    const Chart* t = atlas.find(m.target);
    std::string name = m.source + " -> " + m.target;
    if (!s || !t) {
      out.push_back(name + ": unknown chart");
      continue;
    }
    if (!(m.map.source() == s->ring) || !(m.map.target() == t->ring)) {
      out.push_back(name + ": map rings differ from chart rings");
      continue;
    }
    if (!m.map.well_defined()) out.push_back(name + ": relation not sent to zero");
    if (s->pi && t->pi && !(apply_map(m.map, *s->pi).poly() == *t->pi))
      out.push_back(name + ": pi not preserved");
    for (int label = 1; label <= std::max(s->boundary.size(), t->boundary.size()); ++label) {
      auto a = s->boundary.var(label), b = t->boundary.var(label);
      if (!a || !b) continue;
      if (!m.map.image(*a).divisible_by(Monomial::var(*b)))
        out.push_back(name + ": boundary label " + std::to_string(label) + " not compatible");
    }
  }
  return out;
}

bool same_up_to_nilpotent_rename(const Chart& a, const Chart& b) {
  if (!a.is_ptm() || !b.is_ptm() || a.h != b.h) return false;
  auto ta = a.t_vars(), tb = b.t_vars();
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  return ta == tb;
}

}  // namespace thick
