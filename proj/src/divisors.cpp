#include "thick/divisors.hpp"

#include "thick/error.hpp"

namespace thick {

namespace {

// Coefficient of eps^k, as a polynomial free of eps.
Poly eps_coefficient(const Poly& p, const std::string& eps, int k) {
  Poly out;
  for (const auto& [m, c] : p.terms())
    if (m.degree(eps) == k) out += Poly(m.without(eps), c);
  return out;
}

}  // namespace

std::optional<SncFactorization> is_snc(const Poly& f_in, const Chart& chart) {
  if (!chart.is_ptm()) return std::nullopt;
  const std::string& eps = chart.eps;
  Poly f = normal_form(f_in, chart.ring).poly();
  auto lead = f.at_zero(eps).as_term();
  if (!lead) return std::nullopt;
  const auto& [c, M] = *lead;
  for (const auto& v : M.support())
    if (!chart.boundary.contains(v)) return std::nullopt;

  std::vector<std::string> vars;
  for (const auto& [v, e] : M.exponents()) vars.push_back(v);
  Poly u(c);
  std::map<std::string, Poly> a;

  auto product = [&] {
    Poly F = u;
    for (const auto& v : vars)
      F = normal_form(F * (Poly::var(v) + Poly::var(eps) * a[v]).pow(M.degree(v)), chart.ring).poly();
    return F;
  };

  for (int k = 1; k < chart.h; ++k) {
    Poly r = normal_form(f - product(), chart.ring).poly();
    for (int j = 0; j < k; ++j)
      if (!eps_coefficient(r, eps, j).is_zero()) return std::nullopt;
    Poly ek = Poly::var(eps).pow(k);
    Poly rk = eps_coefficient(r, eps, k);
    for (const auto& [m, coef] : rk.terms()) {
      if (M.divides(m)) {
        u += Poly(m / M, coef) * ek;
        continue;
      }
      bool placed = false;
      for (const auto& v : vars) {
        Monomial rest = M / Monomial::var(v);
        if (!rest.divides(m)) continue;
        Rational scale = coef / (c * M.degree(v));
        a[v] += Poly(m / rest, scale) * Poly::var(eps).pow(k - 1);
        placed = true;
        break;
      }
      if (!placed) return std::nullopt;
    }
  }
  if (!(product() == f) || !is_unit(chart.elem(u))) return std::nullopt;

  SncFactorization out{normal_form(u, chart.ring).poly(), {}};
  for (const auto& v : vars)
    out.factors.push_back({v, normal_form(Poly::var(v) + Poly::var(eps) * a[v], chart.ring).poly(), M.degree(v)});
  return out;
}

std::optional<MonomialDivisor> is_monomial(const Poly& f, const Chart& chart) {
  auto d = unit_monomial_decompose(chart.elem(f));
  if (!d) return std::nullopt;
  MonomialDivisor out;
  for (const auto& [v, e] : d->monomial.exponents()) {
    auto label = chart.boundary.label_of(v);
    if (!label) return std::nullopt;
    out[*label] = e;
  }
  return out;
}

std::optional<Monomial> divisor_monomial(const MonomialDivisor& d, const Chart& chart) {
  Monomial m;
  for (const auto& [label, n] : d) {
    if (n == 0) continue;
    auto v = chart.boundary.var(label);
    if (!v) return std::nullopt;
    m = m * Monomial::var(*v, n);
  }
  return m;
}

bool is_unit_ideal(const Ideal& ideal, const MonomialQuotientRing& ring) {
  for (const auto& g : ideal)
    if (is_unit(RingElem(ring, g))) return true;
  return false;
}

Ideal principal_transform(const Ideal& ideal, const StepChild& child) {
  if (is_unit_ideal(ideal, child.map.source())) return {Poly(1)};
  Ideal out;
  for (const auto& g : ideal) {
    Poly p = apply_map(child.map, g).poly();
    auto q = p.divide(child.exceptional);
    if (!q)
      throw Error(ErrorCode::NotAdmissible,
                  "pullback " + p.str() + " not divisible by " + child.exceptional.str() + " on " + child.chart.id);
    out.push_back(normal_form(*q, child.chart.ring).poly());
  }
  return out;
}

Boundary total_transform_boundary(const Boundary& parent, const StepChild& child) {
  std::map<std::string, std::string> forward;
  for (const auto& [now, old] : child.renamed) forward[old] = now;
  Boundary out;
  for (int label = 1; label <= parent.size(); ++label) {
    auto v = parent.var(label);
    if (!v || (child.role == ChildRole::Regular && Monomial::var(*v) == child.exceptional)) {
      out.set(label, std::nullopt);
      continue;
    }
    auto it = forward.find(*v);
    out.set(label, it == forward.end() ? *v : it->second);
  }
  if (child.role == ChildRole::Regular) out.append(child.exceptional.exponents().begin()->first);
  return out;
}

std::set<Monomial> monomial_ideal(const Ideal& ideal, const MonomialQuotientRing& ring) {
  std::set<Monomial> gens{ring.relation()};
  for (const auto& g : ideal) {
    Poly p = normal_form(g, ring).poly();
    if (p.is_zero()) continue;
    auto t = p.as_term();
    if (!t) throw Error(ErrorCode::NonMonomialInput, p.str() + " is not a monomial");
    gens.insert(t->second);
  }
  std::set<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& n : gens)
      if (n != m && n.divides(m)) redundant = true;
    if (!redundant) out.insert(m);
  }
  return out;
}

Ideal reduce_ideal(const Ideal& ideal, const Chart& chart) {
  Ideal out;
  for (const auto& g : ideal) {
    Poly r = normal_form(g, chart.ring).poly().at_zero(chart.eps);
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

}  // namespace thick
