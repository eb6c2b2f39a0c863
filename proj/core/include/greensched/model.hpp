#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace greensched {

// All quantities live on one abstract integer grid: times and durations in
// time units, weights in work units, powers and budgets in power units.
using Time = std::int64_t;
using Work = std::int64_t;
using Power = std::int64_t;
using Cost = std::int64_t;

struct Task {
  std::string id;
  Work weight = 1;  // compute demand in work units, >= 1
};

struct WorkflowEdge {
  int src = -1;  // indices into Workflow::tasks
  int dst = -1;
  Work weight = 0;  // communication volume, >= 0
};

/// A workflow DAG: tasks with compute weights, precedence edges with
/// communication weights. Indices are stable; ids are for I/O.
struct Workflow {
  std::string name;
  std::vector<Task> tasks;
  std::vector<WorkflowEdge> edges;

  int task_count() const { return static_cast<int>(tasks.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  /// Index of the task with the given id, or -1.
  int task_index(std::string_view id) const;
};

enum class ProcKind { Real, CommLink };

struct ProcessorSpec {
  int id = -1;  // index within the platform
  ProcKind kind = ProcKind::Real;
  std::int64_t speed = 1;  // work units per time unit; always 1 for links
  Power idle_power = 0;
  Power work_power = 0;
};

/// P real processors followed by P*(P-1) communication-link processors,
/// one per ordered pair of distinct real processors (full duplex).
struct Platform {
  std::vector<ProcessorSpec> procs;
  int real_count = 0;

  Platform() = default;
  Platform(std::vector<ProcessorSpec> real, std::vector<ProcessorSpec> links);

  int size() const { return static_cast<int>(procs.size()); }
  int link_count() const { return size() - real_count; }

  /// Platform index of the link processor carrying traffic from real
  /// processor `from` to real processor `to`.
  int link_index(int from, int to) const;

  Power total_idle_power() const;
  Power total_work_power() const;
};

/// Fixed task-to-processor assignment plus the execution order on every
/// real processor and the transfer order on every link.
struct Mapping {
  std::vector<int> assign;                    // task -> real processor
  std::vector<std::vector<int>> proc_order;   // real processor -> task indices
  std::vector<std::vector<int>> link_order;   // link-local index -> workflow edge indices
};

/// Piecewise-constant green power budget over the horizon [0, T).
struct PowerProfile {
  struct Interval {
    Time begin = 0;
    Time end = 0;
    Power budget = 0;
  };
  std::vector<Interval> intervals;

  Time horizon() const { return intervals.empty() ? 0 : intervals.back().end; }
  int interval_count() const { return static_cast<int>(intervals.size()); }

  /// Budget of the interval containing t. Precondition: 0 <= t < horizon().
  Power budget_at(Time t) const;

  /// The boundary set: all interval begins plus the horizon.
  std::vector<Time> boundaries() const;

  /// Single interval [0, T) with a constant budget.
  static PowerProfile constant(Time horizon, Power budget);
};

/// Start time per enhanced-DAG task. Carbon cost is always derived from
/// this, never stored alongside.
struct Schedule {
  std::vector<Time> start;
};

std::vector<std::string> validate_workflow(const Workflow& w);
std::vector<std::string> validate_profile(const PowerProfile& p);
std::vector<std::string> validate_mapping(const Workflow& w, const Platform& plat,
                                          const Mapping& m);

/// True iff the edge relation over `count` nodes has no directed cycle.
bool is_acyclic(int count, const std::vector<WorkflowEdge>& edges);

}  // namespace greensched
