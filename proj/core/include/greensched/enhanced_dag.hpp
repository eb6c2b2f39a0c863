#pragma once

#include <string>
#include <vector>

#include "greensched/model.hpp"

namespace greensched {

/// The communication-enhanced DAG: original tasks plus one fictional task
/// per cross-processor edge, placed on the corresponding link processor.
/// Edges carry no weight; ordering on each processor and link is encoded
/// as chain edges between consecutive tasks.
struct EnhancedDag {
  int original_count = 0;               // tasks [0, original_count) come from the workflow
  std::vector<Time> exec;               // execution time in time units (0 allowed for comm tasks)
  std::vector<int> proc;                // platform processor index
  std::vector<std::string> label;       // original id, or "src->dst" for comm tasks
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;
  std::vector<std::vector<int>> proc_chain;  // per platform processor, tasks in execution order
  std::vector<int> topo;                // one fixed topological order

  int size() const { return static_cast<int>(exec.size()); }
  int comm_count() const { return size() - original_count; }
  int edge_count() const;
};

/// Time to execute `weight` work units on `spec`: ceil(weight / speed).
Time execution_time(Work weight, const ProcessorSpec& spec);

/// Builds the enhanced DAG. Throws std::invalid_argument when the mapping
/// order contradicts precedence (the offending pair is named) or when the
/// inputs are mutually inconsistent.
EnhancedDag build_enhanced_dag(const Workflow& w, const Mapping& m, const Platform& plat);

}  // namespace greensched
