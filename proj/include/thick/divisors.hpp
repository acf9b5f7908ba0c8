#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thick/blowup.hpp"

namespace thick {

/// Ideal generators on one chart.
using Ideal = std::vector<Poly>;
/// Ideal generators per chart id.
using Subscheme = std::map<std::string, Ideal>;
/// Boundary label -> multiplicity.
using MonomialDivisor = std::map<int, int>;

struct SncFactor {
  std::string var;  // the coordinate the factor reduces to
  Poly factor;      // var + eps * a
  int mult = 1;
};

struct SncFactorization {
  Poly unit;
  std::vector<SncFactor> factors;
};

/// f = u * prod (t_i + eps a_i)^m_i with distinct boundary variables t_i,
/// found by lifting the reduction order by order in eps. Conservative: a
/// nullopt means no such factorization was found.
std::optional<SncFactorization> is_snc(const Poly& f, const Chart& chart);

/// Multiplicities when f = unit * prod t_i^n_i with all t_i boundary variables.
std::optional<MonomialDivisor> is_monomial(const Poly& f, const Chart& chart);

/// prod t_i^n_i on the chart; nullopt when some label with n_i > 0 is empty there.
std::optional<Monomial> divisor_monomial(const MonomialDivisor& d, const Chart& chart);

/// True when some generator is a unit of the chart ring.
bool is_unit_ideal(const Ideal& ideal, const MonomialQuotientRing& ring);

/// Pullback of each generator divided exactly by the exceptional equation.
/// A unit ideal stays the unit ideal. NotAdmissible when a division fails.
Ideal principal_transform(const Ideal& ideal, const StepChild& child);

/// Boundary of the child chart, i.e. the total transform of the parent boundary.
Boundary total_transform_boundary(const Boundary& parent, const StepChild& child);

/// Minimal monomial generators of (ideal) + (relation), for monomial ideals.
/// Coefficients are dropped; zero generators are ignored.
std::set<Monomial> monomial_ideal(const Ideal& ideal, const MonomialQuotientRing& ring);

/// Ideal generators reduced mod eps, zero generators dropped.
Ideal reduce_ideal(const Ideal& ideal, const Chart& chart);

}  // namespace thick
