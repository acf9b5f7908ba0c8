#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thick/chart.hpp"

namespace thick {

enum class CenterKind { Regular, ReducedDivisor, LogReducedDivisor };

struct Center {
  CenterKind kind = CenterKind::Regular;
  std::vector<std::string> vars;  // Regular: S; LogReducedDivisor: {t}
  Poly f;                         // ReducedDivisor

  static Center regular(std::vector<std::string> s) { return {CenterKind::Regular, std::move(s), {}}; }
  static Center reduced_divisor(Poly f) { return {CenterKind::ReducedDivisor, {}, std::move(f)}; }
  static Center log_divisor(std::string t) { return {CenterKind::LogReducedDivisor, {std::move(t)}, {}}; }

  std::string str() const;
};

enum class ChildRole { Regular, Trivial, LogT, LogEps };
std::string to_string(ChildRole role);

struct StepChild {
  Chart chart;
  RingMap map;  // parent ring -> child ring
  Monomial exceptional;
  ChildRole role;
  std::map<std::string, std::string> renamed;  // child variable -> parent variable
};

struct BlowupStep {
  std::string parent;
  Center center;
  std::vector<StepChild> children;
};

/// Charts t_i for t_i in S of Bl_{V(eps, t_S)}; the eps-chart is empty and omitted.
BlowupStep blowup_regular(const Chart& chart, const std::vector<std::string>& s);

/// The single f-chart eps -> f~ eps' with f~ the eps-free part of f.
BlowupStep blowup_reduced_divisor(const Chart& chart, const Poly& f);

/// The t-chart (eps -> t eps', carrying the strict-transform component) and the
/// eps-chart (t -> t' eps). Also accepted on log t-charts produced earlier.
BlowupStep log_blowup_reduced_divisor(const Chart& chart, const std::string& t);

BlowupStep apply_center(const Chart& chart, const Center& center);

/// Where a selector applies: one named chart, or every current leaf.
struct Selector {
  std::optional<std::string> chart;
  Center center;
};

class BlowupTree {
 public:
  explicit BlowupTree(Atlas root);

  const Atlas& root() const { return root_; }
  const std::vector<BlowupStep>& steps() const { return steps_; }
  const std::vector<std::string>& leaves() const { return leaves_; }
  bool is_leaf(const std::string& id) const;
  bool has_chart(const std::string& id) const { return nodes_.count(id) > 0; }
  const Chart& chart(const std::string& id) const;
  std::vector<Chart> leaf_charts() const;

  std::optional<std::string> parent(const std::string& id) const;
  /// The root chart from which `id` descends.
  std::string root_of(const std::string& id) const;
  /// Root-chart variable that `var` on chart `id` descends from.
  std::string root_variable(const std::string& id, const std::string& var) const;
  /// Composite ring map from the root ancestor of `id` to `id`.
  RingMap composite_map(const std::string& id) const;
  /// The step child record that created `id`; null for root charts.
  const StepChild* creator(const std::string& id) const;

  /// Replaces the parent leaf by the children, in order.
  void apply(BlowupStep step);
  /// Replaces the stored data of a leaf (boundary bootstrap); ring and id must match.
  void update_leaf(const Chart& chart);

  int skipped() const { return skipped_; }
  void add_skipped(int n) { skipped_ += n; }

  /// Every chart of the tree with parent-to-child maps.
  Atlas atlas() const;

 private:
  struct Node {
    Chart chart;
    std::optional<std::string> parent;
    std::optional<std::size_t> step;
    std::size_t child = 0;
  };
  Atlas root_;
  std::vector<BlowupStep> steps_;
  std::vector<std::string> leaves_;
  std::map<std::string, Node> nodes_;
  std::vector<std::string> order_;
  int skipped_ = 0;
};

/// Applies each selector in order to the matching leaves. A center that does
/// not meet a leaf (missing variables, unit divisor) counts as skipped.
void run_sequence(BlowupTree& tree, const std::vector<Selector>& selectors);

}  // namespace thick
