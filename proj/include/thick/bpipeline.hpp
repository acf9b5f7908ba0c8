#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thick/structure.hpp"

namespace thick {

/// B = Spec k[pi]/(pi^n).
struct BaseSpec {
  int n = 1;
  std::string pi_name = "pi";
};

struct BPairWitness {
  std::string eps;
  MonomialDivisor d;
  Poly unit;
};

enum class DistinguishedFailure { NotInNilradical, QuotientNotMonomial, NonBoundaryVariable };
std::string to_string(DistinguishedFailure f);

struct DistinguishedVerdict {
  std::optional<BPairWitness> witness;
  std::optional<DistinguishedFailure> reason;
  std::string detail;
};

/// pi = unit * eps * prod t_i^d_i with boundary t_i. MissingPi without a pi.
DistinguishedVerdict verify_distinguished(const Chart& chart);

struct Stage {
  std::string name;
  std::size_t first_step = 0;  // steps [first_step, end_step) of the tree
  std::size_t end_step = 0;
};

struct LeafReport {
  std::string chart;
  DistinguishedVerdict verdict;
  std::optional<MonomialDivisor> z_divisor;
};

struct ResolveResult {
  BlowupTree tree;
  std::vector<Stage> stages;
  std::vector<LeafReport> leaves;
  bool ok() const;
};

/// Checks pi^n = 0 and pi = eps * g with g nonzero modulo eps on every chart.
void check_base_input(const Atlas& x, const BaseSpec& base);

/// Principalize Z, principalize the reduction of g = pi / eps, monomialize
/// V(g) where it is not yet boundary-monomial, then certify every leaf.
ResolveResult resolve_over_B(const Atlas& x, const Subscheme& z, const BaseSpec& base,
                             const ReductionOracle& oracle = builtin_oracle());

struct LocusReport {
  std::string chart;
  Monomial locus;  // the non-smooth locus is V(locus)
  bool in_boundary = false;
};

struct SmoothAwayResult {
  BlowupTree tree;
  std::vector<LocusReport> leaves;
};

SmoothAwayResult smooth_away_from_snc(const Atlas& x, const BaseSpec& base,
                                      const ReductionOracle& oracle = builtin_oracle());

struct EmbeddedLeaf {
  std::string leaf;
  Chart y_prime;                 // k[t..., pi]/(pi^n)
  std::vector<PathStep> path;
  BlowupTree y;                  // log blowups of Y' along the path
  std::string strict;            // t-chart carrying the strict transform
  std::vector<std::string> problems;
};

struct LogSmoothEmbedding {
  std::vector<EmbeddedLeaf> leaves;
  bool ok() const;
};

/// pi is a coefficient-one monomial with relation pi^n and a variable of
/// exponent one in pi.
bool has_c_shape(const Chart& chart, int n);

/// pi is a coefficient-one monomial with relation pi^n whose exponents have gcd one.
bool has_log_smooth_shape(const Chart& chart, int n);

/// Per leaf: map Y' -> leaf by t -> s(t), pi -> pi, factor it, and replay the
/// path with log blowups, following the t-charts.
LogSmoothEmbedding embed_log_smooth(const BlowupTree& resolved, const Retract& retract, const BaseSpec& base);

}  // namespace thick
