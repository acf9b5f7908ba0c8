#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thick/principalize.hpp"

namespace thick {

/// phi(eps_X) / eps_Y for a chart map phi from X's ring to Y's ring that
/// induces the identity on reductions. NotTrivialReduction otherwise.
Poly nil_ratio(const Chart& y, const Chart& x, const RingMap& phi);

/// Divisor of the reduction of nil_ratio, over the boundary of X.
MonomialDivisor nil_ratio_divisor(const Chart& y, const Chart& x, const RingMap& phi);

struct PathStep {
  int label;
  std::string var;
  bool operator==(const PathStep&) const = default;
};

struct Factorization {
  BlowupTree pre;        // monomialization of the ratio on Y; empty when not needed
  std::string y_prime;   // leaf of `pre`
  std::vector<PathStep> path;
  BlowupTree replay;     // the path replayed from X
  std::string x_m;       // leaf of `replay`
  RingMap split;         // ring of x_m -> ring of y_prime, an isomorphism
  bool even_multiplicities = true;  // of the ratio after monomialization; diagnostic only
};

/// Splits Y -> X into reduced-divisor blowups of boundary components of X,
/// after monomializing the ratio on Y when it is not already monomial.
/// SplitMismatch when the replay does not reproduce Y'.
Factorization factor_trivial_modification(const Chart& x, const Chart& y, const RingMap& phi);

/// var -> (e -> a_e) encoding s(var) = var + sum_e a_e eps^e.
using Sections = std::map<std::string, std::map<int, RationalFunction>>;

struct Retract {
  std::map<std::string, Sections> charts;  // by chart id
};

/// max over coefficients of ceil(max(0, -val_t(a_e)) / e).
/// NonMonomialDenominator unless every denominator is a boundary monomial.
int retract_invariant(const Chart& chart, const Sections& s, const std::string& t);

/// Coordinate retract s(t) = t on every chart.
Retract trivial_generic_retract(const Atlas& x);

/// Nonconstant denominators of the sections, for principalizing first.
Ideal denominator_ideal(const Sections& s);

/// s(var) as a polynomial; RetractNotRegular when a coefficient has a denominator.
Poly section_image(const Chart& chart, const Sections& s, const std::string& var);

struct RetractExtension {
  Retract retract;                              // on the leaves, all polynomial
  std::vector<std::pair<int, int>> maxima;      // (n, label) blown up each round
};

/// Blows up every component attaining the largest (n, label) until n = 0
/// everywhere; coefficients follow eps = t eps' as a_e -> a_e t^e.
RetractExtension extend_retract(BlowupTree& tree, const Retract& r);
std::pair<BlowupTree, RetractExtension> extend_retract(const Atlas& x, const Retract& r);

}  // namespace thick
