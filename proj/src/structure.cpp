#include "thick/structure.hpp"

#include <algorithm>
#include <set>

namespace thick {

namespace {

void require_same_reduction(const Chart& y, const Chart& x, const RingMap& phi) {
  if (!x.is_ptm() || !y.is_ptm()) throw Error(ErrorCode::NotTrivialReduction, "charts must be ptm charts");
  if (x.h != y.h) throw Error(ErrorCode::NotTrivialReduction, "thickness differs");
  auto tx = x.t_vars(), ty = y.t_vars();
  std::sort(tx.begin(), tx.end());
  std::sort(ty.begin(), ty.end());
  if (tx != ty) throw Error(ErrorCode::NotTrivialReduction, "reductions have different coordinates");
  if (!(phi.source() == x.ring) || !(phi.target() == y.ring))
    throw Error(ErrorCode::NotTrivialReduction, "map does not go from X to Y");
  for (const auto& t : tx)
    if (!(phi.image(t).at_zero(y.eps) == Poly::var(t)))
      throw Error(ErrorCode::NotTrivialReduction, t + " is not fixed modulo the nilradical");
}

}  // namespace

Poly nil_ratio(const Chart& y, const Chart& x, const RingMap& phi) {
  require_same_reduction(y, x, phi);
  auto a = phi.image(x.eps).divide(Monomial::var(y.eps));
  if (!a) throw Error(ErrorCode::NotTrivialReduction, "image of " + x.eps + " is not a multiple of " + y.eps);
  Poly r = normal_form(*a, y.ring).poly();
  if (r.at_zero(y.eps).is_zero()) throw Error(ErrorCode::NotTrivialReduction, "ratio vanishes on the reduction");
  return r;
}

MonomialDivisor nil_ratio_divisor(const Chart& y, const Chart& x, const RingMap& phi) {
  Poly red = nil_ratio(y, x, phi).at_zero(y.eps);
  auto term = red.as_term();
  if (!term) throw Error(ErrorCode::NotBoundaryMonomial, "reduced ratio " + red.str() + " is not a monomial");
  MonomialDivisor d;
  for (const auto& [v, e] : term->second.exponents()) {
    auto label = x.boundary.label_of(v);
    if (!label) throw Error(ErrorCode::NotBoundaryMonomial, v + " is not a boundary variable");
    d[*label] = e;
  }
  return d;
}

Factorization factor_trivial_modification(const Chart& x, const Chart& y_in, const RingMap& phi) {
  Chart y = y_in;
  if (y.boundary.size() == 0) y.boundary = x.boundary;
  nil_ratio_divisor(y, x, phi);  // validates the input
  Poly a = nil_ratio(y, x, phi);

  Atlas ya;
  ya.charts.push_back(y);
  BlowupTree pre(ya);
  RingMap phi2 = phi;
  if (!unit_monomial_decompose(y.elem(a))) {
    monomialize_divisor(pre, {{y.id, a}});
    phi2 = RingMap(phi.source(), y.ring, phi.images()).then(pre.composite_map(pre.leaves()[0]));
  }
  const std::string y_prime = pre.leaves()[0];
  const Chart& yp = pre.chart(y_prime);
  auto um = unit_monomial_decompose(yp.elem(nil_ratio(yp, x, phi2)));
  if (!um) throw Error(ErrorCode::SplitMismatch, "ratio is not monomial after monomialization");
  const Monomial& m = um->monomial;

  Factorization out{pre, y_prime, {}, BlowupTree(Atlas{{x}, {}, std::nullopt}), x.id, phi2, true};
  for (const auto& [v, e] : m.exponents())
    if (e % 2) out.even_multiplicities = false;
  for (int label = 1; label <= x.boundary.size(); ++label) {
    auto v = x.boundary.var(label);
    if (v)
      for (int k = 0; k < m.degree(*v); ++k) out.path.push_back({label, *v});
  }
  for (const auto& v : m.support())
    if (!x.boundary.contains(v)) throw Error(ErrorCode::NotBoundaryMonomial, v + " is not a boundary variable");

  for (const auto& s : out.path) {
    const Chart& cur = out.replay.chart(out.replay.leaves()[0]);
    out.replay.apply(blowup_reduced_divisor(cur, Poly::var(s.var)));
  }
  out.x_m = out.replay.leaves()[0];
  const Chart& xm = out.replay.chart(out.x_m);
  if (!same_up_to_nilpotent_rename(xm, yp)) throw Error(ErrorCode::SplitMismatch, "replayed ring differs from Y'");

  auto theta_eps = phi2.image(x.eps).divide(m);
  if (!theta_eps) throw Error(ErrorCode::SplitMismatch, "image of " + x.eps + " not divisible by " + m.str());
  auto unit = theta_eps->divide(Monomial::var(yp.eps));
  if (!unit || !is_unit(yp.elem(*unit)))
    throw Error(ErrorCode::SplitMismatch, "split map does not send the nilpotent parameter to a generator");
  std::map<std::string, Poly> images{{xm.eps, *theta_eps}};
  for (const auto& t : xm.t_vars()) images[t] = phi2.image(t);
  out.split = RingMap(xm.ring, yp.ring, images);
  if (!out.split.well_defined() || !(out.replay.composite_map(out.x_m).then(out.split) == phi2))
    throw Error(ErrorCode::SplitMismatch, "replay does not factor the map");
  return out;
}

// ---------------------------------------------------------------- retracts

namespace {

void check_denominators(const Chart& chart, const Sections& s) {
  for (const auto& [var, coeffs] : s)
    for (const auto& [e, a] : coeffs) {
      if (a.is_zero()) continue;
      auto den = a.denominator().as_term();
      if (!den) throw Error(ErrorCode::NonMonomialDenominator, a.str() + " has a non-monomial denominator");
      for (const auto& v : den->second.support())
        if (!chart.boundary.contains(v))
          throw Error(ErrorCode::NonMonomialDenominator, v + " in a denominator is not a boundary variable");
    }
}

}  // namespace

int retract_invariant(const Chart& chart, const Sections& s, const std::string& t) {
  check_denominators(chart, s);
  int n = 0;
  for (const auto& [var, coeffs] : s)
    for (const auto& [e, a] : coeffs) {
      if (a.is_zero()) continue;
      int val = valuation(a, t);
      if (val < 0) n = std::max(n, (-val + e - 1) / e);
    }
  return n;
}

Retract trivial_generic_retract(const Atlas& x) {
  Retract r;
  for (const auto& c : x.charts) {
    Sections s;
    for (const auto& t : c.t_vars()) s[t] = {};
    r.charts[c.id] = s;
  }
  return r;
}

Ideal denominator_ideal(const Sections& s) {
  Ideal out;
  for (const auto& [var, coeffs] : s)
    for (const auto& [e, a] : coeffs)
      if (!a.is_zero() && !a.denominator().is_constant()) out.push_back(a.denominator());
  return out;
}

Poly section_image(const Chart& chart, const Sections& s, const std::string& var) {
  Poly img = Poly::var(var);
  auto it = s.find(var);
  if (it == s.end()) return img;
  for (const auto& [e, a] : it->second) {
    if (a.is_zero()) continue;
    if (!a.is_polynomial()) throw Error(ErrorCode::RetractNotRegular, "section of " + var + " is not regular on " + chart.id);
    img += a.as_poly() * Poly::var(chart.eps).pow(e);
  }
  return normal_form(img, chart.ring).poly();
}

RetractExtension extend_retract(BlowupTree& tree, const Retract& r) {
  RetractExtension out;
  std::map<std::string, Sections> live;
  for (const auto& [id, s] : r.charts) {
    if (!tree.is_leaf(id)) throw Error(ErrorCode::InvalidInput, "retract given on " + id + ", which is not a leaf");
    live[id] = s;
  }

  std::optional<std::pair<int, int>> previous;
  for (;;) {
    std::optional<std::pair<int, int>> best;
    std::map<std::string, std::pair<int, int>> key;
    for (const auto& [id, s] : live) {
      const Chart& c = tree.chart(id);
      for (int label = 1; label <= c.boundary.size(); ++label) {
        auto t = c.boundary.var(label);
        if (!t) continue;
        int n = retract_invariant(c, s, *t);
        if (n == 0) continue;
        std::pair<int, int> k{n, label};
        if (!key.count(id) || key[id] < k) key[id] = k;
        if (!best || *best < k) best = k;
      }
    }
    for (const auto& [id, s] : live) check_denominators(tree.chart(id), s);
    if (!best) break;
    if (previous && !(*best < *previous))
      throw Error(ErrorCode::InvariantNotDropping, "maximal invariant did not drop");
    previous = best;
    out.maxima.push_back(*best);

    std::map<std::string, Sections> next;
    for (auto& [id, s] : live) {
      if (!key.count(id) || key[id] != *best) {
        next[id] = s;
        continue;
      }
      const Chart& c = tree.chart(id);
      std::string t = *c.boundary.var(best->second);
      BlowupStep step = blowup_reduced_divisor(c, Poly::var(t));
      std::string child = step.children[0].chart.id;
      tree.apply(step);
      Sections moved;
      for (const auto& [var, coeffs] : s)
        for (const auto& [e, a] : coeffs) moved[var][e] = a * RationalFunction(Poly(Monomial::var(t, e)));
      for (const auto& [var, coeffs] : s)
        if (coeffs.empty()) moved[var];
      next[child] = moved;
    }
    live = next;
  }

  for (const auto& [id, s] : live)
    for (const auto& [var, coeffs] : s)
      for (const auto& [e, a] : coeffs)
        if (!a.is_polynomial()) throw Error(ErrorCode::RetractNotRegular, "coefficient " + a.str() + " on " + id);
  out.retract.charts = live;
  return out;
}

std::pair<BlowupTree, RetractExtension> extend_retract(const Atlas& x, const Retract& r) {
  BlowupTree tree(x);
  auto e = extend_retract(tree, r);
  return {std::move(tree), std::move(e)};
}

}  // namespace thick
