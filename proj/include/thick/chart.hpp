#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thick/ring.hpp"

namespace thick {

/// Ordered boundary: label i (1-based) maps to at most one chart variable.
/// A label may be empty on a chart; labels stay stable across a blowup tree.
class Boundary {
 public:
  Boundary() = default;
  explicit Boundary(std::vector<std::optional<std::string>> slots);

  int size() const { return static_cast<int>(slots_.size()); }
  std::optional<std::string> var(int label) const;
  std::optional<int> label_of(const std::string& var) const;
  bool contains(const std::string& var) const { return label_of(var).has_value(); }
  std::set<std::string> vars() const;

  /// Grows the boundary with empty labels as needed.
  void set(int label, std::optional<std::string> var);
  int append(std::optional<std::string> var);

  const std::vector<std::optional<std::string>>& slots() const { return slots_; }
  bool operator==(const Boundary&) const = default;

 private:
  std::vector<std::optional<std::string>> slots_;
};

struct Chart {
  std::string id;
  MonomialQuotientRing ring;
  std::string eps;
  int h = 1;
  Boundary boundary;
  std::optional<Poly> pi;  // normal form in `ring`
  // Monomial ideal of the strict-transform component on log t-charts.
  std::optional<Monomial> component;

  Chart(std::string id, MonomialQuotientRing ring, std::string eps, int h, Boundary boundary = {},
        std::optional<Poly> pi = std::nullopt);

  /// k[vars]/(eps^h) with the given boundary.
  static Chart model(std::string id, std::vector<std::string> vars, const std::string& eps, int h,
                     Boundary boundary = {}, std::optional<Poly> pi = std::nullopt);

  bool is_ptm() const { return ring.relation() == Monomial::var(eps, h); }
  /// Chart variables other than the nilpotent parameter, in ring order.
  std::vector<std::string> t_vars() const;
  RingElem elem(const Poly& p) const { return RingElem(ring, p); }

  bool operator==(const Chart&) const = default;
};

struct AtlasMap {
  std::string source;
  std::string target;
  RingMap map;
};

struct Atlas {
  std::vector<Chart> charts;
  std::vector<AtlasMap> maps;
  std::optional<int> base_exponent;

  const Chart* find(const std::string& id) const;
};

struct HypersurfacePresentation {
  std::vector<std::string> ambient_vars;
  Poly f;
  std::optional<std::string> declared_nilpotent;
};

struct PtmVerdict {
  bool ok = false;
  std::optional<std::pair<std::string, int>> witness;  // (nilpotent variable, thickness)
  std::string reason;
};

/// h, after checking eps^(h-1) != 0 and eps^h = 0. NotPtmRing on non-ptm charts.
int thickness(const Chart& chart);

/// f = c * v^n with c a nonzero constant; units are taken globally on the chart.
PtmVerdict verify_ptm(const HypersurfacePresentation& p);

/// The chart k[ambient]/(v^n) certified by verify_ptm. InvalidInput when not a ptm.
Chart chart_from_presentation(const HypersurfacePresentation& p, const std::string& id = "root");

/// Same chart with relation eps^1 and pi reduced mod eps.
Chart reduction(const Chart& chart);

/// Empty iff every map is well defined, sends pi to pi, and respects boundary labels.
std::vector<std::string> check_atlas(const Atlas& atlas);

/// Equality of ptm rings after renaming the nilpotent parameter.
bool same_up_to_nilpotent_rename(const Chart& a, const Chart& b);

}  // namespace thick
