#pragma once

#include <string>
#include <vector>

#include "greensched/enhanced_dag.hpp"
#include "greensched/model.hpp"

namespace greensched {

/// Per-subinterval slice of one profile interval: between d_k and d_{k+1}
/// the set of active processors, and hence the drawn power, is constant.
struct SubintervalCost {
  Time begin = 0;
  Time end = 0;
  Power power = 0;      // total power drawn by all processors
  Power overshoot = 0;  // max(power - budget, 0)
  Time length() const { return end - begin; }
};

struct IntervalCost {
  Time begin = 0;
  Time end = 0;
  Power budget = 0;
  Cost cost = 0;  // sum over pieces of length * overshoot
  std::vector<SubintervalCost> pieces;
};

struct CostBreakdown {
  Cost total = 0;
  std::vector<IntervalCost> intervals;
};

/// Interval-by-interval evaluator: cuts every profile interval at the task
/// starts and ends inside it and charges each piece at its constant power.
/// Runs in O((N + J) log N), independent of the horizon length. Precedence
/// is not required; a processor with overlapping tasks counts as active
/// once. Throws std::invalid_argument when a start lies outside [0, T-w].
CostBreakdown evaluate_cost(const Schedule& s, const EnhancedDag& g, const Platform& plat,
                            const PowerProfile& prof);

/// Literal definition: sum over every time unit of the brown power drawn.
/// Pseudo-polynomial; intended for small horizons and as the oracle for
/// evaluate_cost.
Cost evaluate_cost_per_unit(const Schedule& s, const EnhancedDag& g, const Platform& plat,
                            const PowerProfile& prof);

/// Checks precedence (every enhanced edge) and the deadline window.
/// Violations are data, not faults; an empty list means valid.
std::vector<std::string> validate_schedule(const Schedule& s, const EnhancedDag& g, Time horizon);

/// Power-per-time-unit view of a valid schedule, supporting O(w + shift)
/// cost deltas for single-task moves. Requires validity: tasks sharing a
/// processor must not overlap, so per-task power adds up linearly.
class PowerTimeline {
 public:
  PowerTimeline(const Schedule& s, const EnhancedDag& g, const Platform& plat,
                const PowerProfile& prof);

  Cost total() const { return total_; }

  /// Cost change if `task` moved to `new_start`; does not modify state.
  /// The move must be legal (already checked against neighbors).
  Cost move_delta(int task, Time new_start) const;

  void apply_move(int task, Time new_start);

 private:
  Power task_draw(int task) const;

  const EnhancedDag* dag_;
  const Platform* plat_;
  std::vector<Time> start_;
  std::vector<Power> power_;   // total power drawn at each time unit
  std::vector<Power> budget_;  // green budget at each time unit
  Cost total_ = 0;
};

}  // namespace greensched
