#include "greensched/time_bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace greensched {

bool TimeBounds::feasible() const {
  for (std::size_t v = 0; v < est.size(); ++v) {
    if (lst[v] < est[v]) return false;
  }
  return true;
}

std::vector<Time> compute_est(const EnhancedDag& g) {
  std::vector<Time> est(g.size(), 0);
  for (int v : g.topo) {
    Time ready = 0;
    for (int u : g.pred[v]) ready = std::max(ready, est[u] + g.exec[u]);
    est[v] = ready;
  }
  return est;
}

std::vector<Time> compute_lst(const EnhancedDag& g, Time horizon) {
  std::vector<Time> lst(g.size(), 0);
  for (auto it = g.topo.rbegin(); it != g.topo.rend(); ++it) {
    const int v = *it;
    Time latest = horizon - g.exec[v];
    for (int s : g.succ[v]) latest = std::min(latest, lst[s] - g.exec[v]);
    lst[v] = latest;
  }
  return lst;
}

TimeBounds make_time_bounds(const EnhancedDag& g, Time horizon) {
  TimeBounds tb;
  tb.horizon = horizon;
  tb.est = compute_est(g);
  tb.lst = compute_lst(g, horizon);
  tb.fixed.assign(g.size(), 0);
  for (int v = 0; v < g.size(); ++v) {
    if (tb.lst[v] < tb.est[v]) {
      throw std::invalid_argument("deadline " + std::to_string(horizon) + " infeasible: task " +
                                  g.label[v] + " has empty window [" + std::to_string(tb.est[v]) +
                                  ", " + std::to_string(tb.lst[v]) + "]");
    }
  }
  return tb;
}

Schedule asap_schedule(const EnhancedDag& g) { return Schedule{compute_est(g)}; }

Time asap_makespan(const EnhancedDag& g) {
  const auto est = compute_est(g);
  Time makespan = 0;
  for (int v = 0; v < g.size(); ++v) makespan = std::max(makespan, est[v] + g.exec[v]);
  return makespan;
}

std::vector<int> fix_and_propagate(TimeBounds& tb, const EnhancedDag& g, int v, Time start) {
  if (tb.fixed[v]) throw std::invalid_argument("task " + g.label[v] + " already fixed");
  if (start < tb.est[v] || start > tb.lst[v]) {
    throw std::invalid_argument("start " + std::to_string(start) + " outside window of task " +
                                g.label[v]);
  }
  tb.est[v] = start;
  tb.lst[v] = start;
  tb.fixed[v] = 1;

  std::vector<int> changed;

  // Forward: only positions after v in topological order can be affected,
  // and their earliest starts can only move later.
  bool after = false;
  for (int u : g.topo) {
    if (u == v) {
      after = true;
      continue;
    }
    if (!after || tb.fixed[u]) continue;
    Time ready = 0;
    for (int p : g.pred[u]) ready = std::max(ready, tb.est[p] + g.exec[p]);
    if (ready > tb.est[u]) {
      tb.est[u] = ready;
      changed.push_back(u);
    }
  }

  // Backward, symmetric for the latest starts.
  bool before = false;
  for (auto it = g.topo.rbegin(); it != g.topo.rend(); ++it) {
    const int u = *it;
    if (u == v) {
      before = true;
      continue;
    }
    if (!before || tb.fixed[u]) continue;
    Time latest = tb.horizon - g.exec[u];
    for (int s : g.succ[u]) latest = std::min(latest, tb.lst[s] - g.exec[u]);
    if (latest < tb.lst[u]) {
      tb.lst[u] = latest;
      changed.push_back(u);
    }
  }
  std::sort(changed.begin(), changed.end());
  changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
  return changed;
}

}  // namespace greensched
