#pragma once

#include <vector>

#include "greensched/enhanced_dag.hpp"
#include "greensched/model.hpp"

namespace greensched {

/// Earliest/latest start windows under precedence and the deadline.
/// Mutable working state owned by one scheduler run.
struct TimeBounds {
  std::vector<Time> est;
  std::vector<Time> lst;
  std::vector<char> fixed;  // tasks whose start has been pinned
  Time horizon = 0;

  Time slack(int v) const { return lst[v] - est[v]; }
  bool feasible() const;
};

/// EST(v) = max over predecessors of EST(u) + exec(u); sources start at 0.
std::vector<Time> compute_est(const EnhancedDag& g);

/// LST(v) = min over successors of LST(s), minus exec(v); sinks get T - exec.
/// May produce lst < est for infeasible deadlines; the caller decides.
std::vector<Time> compute_lst(const EnhancedDag& g, Time horizon);

/// Combines both computations. Throws std::invalid_argument naming the
/// first task whose window is empty (deadline infeasible).
TimeBounds make_time_bounds(const EnhancedDag& g, Time horizon);

/// The baseline schedule: every task at its earliest start.
Schedule asap_schedule(const EnhancedDag& g);

/// Makespan of the ASAP schedule; the tightest admissible deadline D.
Time asap_makespan(const EnhancedDag& g);

/// Pins task v to `start` (must lie inside its window) and re-tightens the
/// bounds of all unfixed tasks in one forward and one backward sweep along
/// the stored topological order. Returns the unfixed tasks whose window
/// changed. O(N + E).
std::vector<int> fix_and_propagate(TimeBounds& tb, const EnhancedDag& g, int v, Time start);

}  // namespace greensched
