#include "greensched/model.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace greensched {

int Workflow::task_index(std::string_view id) const {
  for (int i = 0; i < task_count(); ++i) {
    if (tasks[i].id == id) return i;
  }
  return -1;
}

Platform::Platform(std::vector<ProcessorSpec> real, std::vector<ProcessorSpec> links)
    : real_count(static_cast<int>(real.size())) {
  const std::size_t expected = real.size() * (real.size() - 1);
  if (links.size() != expected) {
    throw std::invalid_argument("platform needs exactly P*(P-1) link processors");
  }
  procs = std::move(real);
  procs.insert(procs.end(), links.begin(), links.end());
  for (int i = 0; i < size(); ++i) {
    procs[i].id = i;
    procs[i].kind = i < real_count ? ProcKind::Real : ProcKind::CommLink;
  }
}

int Platform::link_index(int from, int to) const {
  if (from == to || from < 0 || to < 0 || from >= real_count || to >= real_count) {
    throw std::invalid_argument("link_index requires two distinct real processors");
  }
  // Links are laid out row-major by source, with the diagonal removed.
  return real_count + from * (real_count - 1) + (to < from ? to : to - 1);
}

Power Platform::total_idle_power() const {
  Power sum = 0;
  for (const auto& p : procs) sum += p.idle_power;
  return sum;
}

Power Platform::total_work_power() const {
  Power sum = 0;
  for (const auto& p : procs) sum += p.work_power;
  return sum;
}

Power PowerProfile::budget_at(Time t) const {
  // Intervals are contiguous and sorted; binary search by begin.
  auto it = std::upper_bound(intervals.begin(), intervals.end(), t,
                             [](Time v, const Interval& iv) { return v < iv.begin; });
  if (it == intervals.begin()) throw std::out_of_range("time before profile start");
  --it;
  if (t >= it->end) throw std::out_of_range("time past profile horizon");
  return it->budget;
}

std::vector<Time> PowerProfile::boundaries() const {
  std::vector<Time> b;
  b.reserve(intervals.size() + 1);
  for (const auto& iv : intervals) b.push_back(iv.begin);
  if (!intervals.empty()) b.push_back(intervals.back().end);
  return b;
}

PowerProfile PowerProfile::constant(Time horizon, Power budget) {
  PowerProfile p;
  p.intervals.push_back({0, horizon, budget});
  return p;
}

bool is_acyclic(int count, const std::vector<WorkflowEdge>& edges) {
  std::vector<int> indeg(count, 0);
  std::vector<std::vector<int>> succ(count);
  for (const auto& e : edges) {
    succ[e.src].push_back(e.dst);
    ++indeg[e.dst];
  }
  std::queue<int> q;
  for (int v = 0; v < count; ++v) {
    if (indeg[v] == 0) q.push(v);
  }
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (int s : succ[v]) {
      if (--indeg[s] == 0) q.push(s);
    }
  }
  return seen == count;
}

std::vector<std::string> validate_workflow(const Workflow& w) {
  std::vector<std::string> out;
  std::unordered_set<std::string> ids;
  for (const auto& t : w.tasks) {
    if (!ids.insert(t.id).second) out.push_back("duplicate task id: " + t.id);
    if (t.weight < 1) out.push_back("non-positive weight on task " + t.id);
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : w.edges) {
    if (e.src < 0 || e.src >= w.task_count() || e.dst < 0 || e.dst >= w.task_count()) {
      out.push_back("edge endpoint out of range");
      continue;
    }
    if (e.weight < 0) {
      out.push_back("negative weight on edge " + w.tasks[e.src].id + "->" + w.tasks[e.dst].id);
    }
    if (!pairs.insert({e.src, e.dst}).second) {
      out.push_back("duplicate edge " + w.tasks[e.src].id + "->" + w.tasks[e.dst].id);
    }
  }
  bool endpoints_ok = out.empty() || std::none_of(out.begin(), out.end(), [](const std::string& s) {
                        return s == "edge endpoint out of range";
                      });
  if (endpoints_ok && !is_acyclic(w.task_count(), w.edges)) out.push_back("cycle");
  return out;
}

std::vector<std::string> validate_profile(const PowerProfile& p) {
  std::vector<std::string> out;
  if (p.intervals.empty()) {
    out.push_back("profile has no intervals");
    return out;
  }
  if (p.intervals.front().begin != 0) out.push_back("profile does not start at t=0");
  for (std::size_t j = 0; j < p.intervals.size(); ++j) {
    const auto& iv = p.intervals[j];
    if (iv.end - iv.begin < 1) {
      out.push_back("empty interval at t=" + std::to_string(iv.begin));
    }
    if (iv.budget < 0) out.push_back("negative budget at t=" + std::to_string(iv.begin));
    if (j + 1 < p.intervals.size() && iv.end != p.intervals[j + 1].begin) {
      out.push_back("gap at t=" + std::to_string(iv.end));
    }
  }
  return out;
}

std::vector<std::string> validate_mapping(const Workflow& w, const Platform& plat,
                                          const Mapping& m) {
  std::vector<std::string> out;
  const int n = w.task_count();
  if (static_cast<int>(m.assign.size()) != n) {
    out.push_back("assignment size differs from task count");
    return out;
  }
  for (int v = 0; v < n; ++v) {
    if (m.assign[v] < 0 || m.assign[v] >= plat.real_count) {
      out.push_back("task " + w.tasks[v].id + " assigned to unknown processor");
    }
  }
  if (static_cast<int>(m.proc_order.size()) != plat.real_count) {
    out.push_back("order list size differs from processor count");
    return out;
  }
  std::vector<int> seen(n, 0);
  for (int p = 0; p < plat.real_count; ++p) {
    for (int v : m.proc_order[p]) {
      if (v < 0 || v >= n) {
        out.push_back("order entry out of range on processor " + std::to_string(p));
        continue;
      }
      ++seen[v];
      if (m.assign[v] != p) {
        out.push_back("task " + w.tasks[v].id + " ordered on a processor it is not assigned to");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (seen[v] != 1) out.push_back("task " + w.tasks[v].id + " appears " +
                                    std::to_string(seen[v]) + " times in processor orders");
  }
  if (static_cast<int>(m.link_order.size()) != plat.link_count()) {
    out.push_back("link order list size differs from link count");
  }
  return out;
}

}  // namespace greensched
