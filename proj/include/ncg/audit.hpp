#pragma once

#include <string>
#include <vector>

#include "ncg/game.hpp"
#include "ncg/graph.hpp"
#include "ncg/rational.hpp"
#include "ncg/verdict.hpp"

namespace ncg {

/// One maximal chain of degree-2 nodes between branch nodes of a component,
/// contracted to a weighted edge of the reduced multigraph. weight = k-1 for
/// a k-edge chain, so a plain edge between branch nodes has weight 0.
struct ReducedEdge {
  int u = -1, v = -1;     // branch endpoints (may coincide for a loop chain)
  long long weight = 0;
  std::vector<int> path;  // the full chain, path.front()=u, path.back()=v
  bool oriented = false;  // every chain edge bought consistently along it
  bool forward = false;   // ...from path.front() toward path.back()
};

/// Reduced multigraph H' of one non-trivial 2-edge component: nodes are the
/// component nodes of degree >= 3, edges the contracted chains. A component
/// that is a bare cycle has no branch nodes; it is flagged instead.
struct ReducedDigraph {
  std::vector<int> nodes;  // sorted ascending, G labels
  std::vector<ReducedEdge> edges;
  bool bare_cycle = false;
  int bare_cycle_length = 0;
};

struct ReducedResult {
  std::vector<ReducedDigraph> components;  // one per non-trivial component
  /// True iff in every component the positive-weight edges form a forest
  /// (parallel chains or loop chains break this).
  bool forest = true;
};

ReducedResult build_reduced(const StrategyVector& s);

/// Structural audit checks. Each evaluates its own applicability gates and
/// returns NotApplicable (with the failing gate recorded) instead of
/// vacuously passing. A Fail on a genuine equilibrium would contradict the
/// theory; a Fail on a candidate certifies it is not an equilibrium in the
/// stated parameter range.
CheckResult check_distance_spread(const StrategyVector& s);
CheckResult check_cycle_structure(const StrategyVector& s);
CheckResult check_two_paths(const StrategyVector& s);
CheckResult check_reduced_forest(const StrategyVector& s);
CheckResult check_degree_and_girth(const StrategyVector& s);
CheckResult check_branching(const StrategyVector& s);
CheckResult check_diameter_relation(const StrategyVector& s);

struct AuditOptions {
  /// Check-name selectors (exact names or substrings); empty = run all.
  std::vector<std::string> checks;
  /// The constant C > 4 used by the ne-dau check.
  Rat dau_c = Rat(5);
};

struct AuditReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) return false;
    return true;
  }
};

/// Runs the selected checks in a fixed order: distance-spread,
/// cycle-structure, two-paths, reduced-forest, degree-girth, branching,
/// diameter, ne-dau, power-collapse.
AuditReport run_audit(const StrategyVector& s, const AuditOptions& opt = {});

}  // namespace ncg
