#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "thick/divisors.hpp"
#include "thick/error.hpp"

namespace thick {

/// Centers for the reduction: (reduced atlas, ideal per chart) -> ordered selectors.
/// Selectors name the chart they apply to; chart ids follow the blowup naming.
using ReductionOracle = std::function<std::vector<Selector>(const Atlas&, const Subscheme&)>;

constexpr int kDefaultFuel = 200;

/// FuelExhausted, with the centers chosen before the budget ran out.
class FuelExhaustedError : public Error {
 public:
  FuelExhaustedError(const std::string& msg, std::vector<Selector> partial)
      : Error(ErrorCode::FuelExhausted, msg), partial_(std::move(partial)) {}
  const std::vector<Selector>& partial() const { return partial_; }

 private:
  std::vector<Selector> partial_;
};

/// Combinatorial principalization of monomial ideals on reduced charts.
/// On the first chart (by id) whose residual is not the unit ideal, take the
/// first pair of generators (in input order) where neither divides the other,
/// with exponent difference v, and blow up V(t_k, t_l) for the least t_k with
/// |v_k| maximal and the least t_l of opposite sign (preferring |v_l| maximal).
/// Each chart lowers (max |v|, #coordinates at the max, #coordinates on the
/// other side), and comparable pairs stay comparable, so this terminates.
/// The residual is the transform with its monomial gcd removed.
std::vector<Selector> monomial_oracle(const Atlas& reduced, const Subscheme& ideal, int fuel = kDefaultFuel);

/// V(a, b) for the least variable pair separating two minimal generators.
/// Loops on some inputs, e.g. (b^3, a^2 c^3) recurs after (a, b), (a, c).
std::vector<Selector> least_pair_oracle(const Atlas& reduced, const Subscheme& ideal, int fuel = kDefaultFuel);
ReductionOracle builtin_oracle(int fuel = kDefaultFuel);

/// Generators with the common monomial factor (free of eps) removed.
Ideal strip_monomial_content(const Ideal& ideal, const Chart& chart);

struct PrincipalizationResult {
  std::vector<Selector> centers;
  Subscheme residual;  // per final leaf carrying the ideal; always the unit ideal
};

/// Runs the oracle on the reduction of the current leaves and lifts every
/// center V(t_S) to V(eps, t_S). `z` is keyed by leaf id; leaves without an
/// entry are left alone by the oracle.
PrincipalizationResult pushforward_principalization(BlowupTree& tree, const Subscheme& z,
                                                    const ReductionOracle& oracle);
std::pair<BlowupTree, PrincipalizationResult> pushforward_principalization(const Atlas& x, const Subscheme& z,
                                                                           const ReductionOracle& oracle);

/// Gives every variable of the leaf monomials that is not yet a boundary
/// variable a new label. Variables descending from the same root variable
/// share a label; labels are numbered after the largest existing one.
void bootstrap_boundary(BlowupTree& tree, const std::map<std::string, Monomial>& monomials);

struct MonomializeResult {
  std::map<std::string, MonomialDivisor> multiplicities;  // per final leaf
  std::map<std::string, Poly> divisor;                     // transformed equation per final leaf
};

/// Blows up the label-i boundary components j = 1..n_i times, labels
/// ascending, where n_i are the multiplicities of the reduction of D.
MonomializeResult monomialize_divisor(BlowupTree& tree, const std::map<std::string, Poly>& d);
std::pair<BlowupTree, MonomializeResult> monomialize_divisor(const Atlas& x, const std::map<std::string, Poly>& d);

}  // namespace thick
