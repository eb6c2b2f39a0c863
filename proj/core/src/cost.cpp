#include "greensched/cost.hpp"

#include <algorithm>
#include <stdexcept>

namespace greensched {

namespace {

void check_bounds(const Schedule& s, const EnhancedDag& g, Time horizon) {
  if (static_cast<int>(s.start.size()) != g.size()) {
    throw std::invalid_argument("schedule size differs from task count");
  }
  for (int v = 0; v < g.size(); ++v) {
    if (s.start[v] < 0 || s.start[v] + g.exec[v] > horizon) {
      throw std::invalid_argument("start of " + g.label[v] + " outside [0, T - w]");
    }
  }
}

}  // namespace

CostBreakdown evaluate_cost(const Schedule& s, const EnhancedDag& g, const Platform& plat,
                            const PowerProfile& prof) {
  const Time horizon = prof.horizon();
  check_bounds(s, g, horizon);

  // Sweep events: +1/-1 on a processor's active-task count. Work power
  // counts once while the count is positive.
  struct Event {
    Time at;
    int proc;
    int delta;
  };
  std::vector<Event> events;
  events.reserve(2 * g.size());
  for (int v = 0; v < g.size(); ++v) {
    if (g.exec[v] == 0) continue;  // zero-length tasks draw nothing
    events.push_back({s.start[v], g.proc[v], +1});
    events.push_back({s.start[v] + g.exec[v], g.proc[v], -1});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.at < b.at; });

  const Power idle_total = plat.total_idle_power();
  std::vector<int> active(plat.size(), 0);
  Power work_drawn = 0;

  CostBreakdown out;
  std::size_t next = 0;
  // Events at t=0 establish the initial power level.
  while (next < events.size() && events[next].at == 0) {
    const auto& e = events[next++];
    if (e.delta > 0 && active[e.proc]++ == 0) work_drawn += plat.procs[e.proc].work_power;
  }

  for (const auto& iv : prof.intervals) {
    IntervalCost ic;
    ic.begin = iv.begin;
    ic.end = iv.end;
    ic.budget = iv.budget;
    Time cursor = iv.begin;
    while (cursor < iv.end) {
      Time stop = iv.end;
      if (next < events.size()) stop = std::min(stop, events[next].at);
      if (stop > cursor) {
        SubintervalCost piece;
        piece.begin = cursor;
        piece.end = stop;
        piece.power = idle_total + work_drawn;
        piece.overshoot = std::max<Power>(piece.power - iv.budget, 0);
        ic.cost += piece.length() * piece.overshoot;
        ic.pieces.push_back(piece);
        cursor = stop;
      }
      while (next < events.size() && events[next].at == cursor) {
        const auto& e = events[next++];
        if (e.delta > 0) {
          if (active[e.proc]++ == 0) work_drawn += plat.procs[e.proc].work_power;
        } else {
          if (--active[e.proc] == 0) work_drawn -= plat.procs[e.proc].work_power;
        }
      }
    }
    out.total += ic.cost;
    out.intervals.push_back(std::move(ic));
  }
  return out;
}

Cost evaluate_cost_per_unit(const Schedule& s, const EnhancedDag& g, const Platform& plat,
                            const PowerProfile& prof) {
  const Time horizon = prof.horizon();
  check_bounds(s, g, horizon);

  // Work power drawn at each time unit; a processor counts once no matter
  // how many of its tasks cover t.
  std::vector<Power> extra(horizon, 0);
  std::vector<std::vector<int>> tasks_on(plat.size());
  for (int v = 0; v < g.size(); ++v) {
    if (g.exec[v] > 0) tasks_on[g.proc[v]].push_back(v);
  }
  std::vector<int> count(horizon);
  for (int p = 0; p < plat.size(); ++p) {
    if (tasks_on[p].empty()) continue;
    std::fill(count.begin(), count.end(), 0);
    for (int v : tasks_on[p]) {
      for (Time t = s.start[v]; t < s.start[v] + g.exec[v]; ++t) ++count[t];
    }
    for (Time t = 0; t < horizon; ++t) {
      if (count[t] > 0) extra[t] += plat.procs[p].work_power;
    }
  }

  const Power idle_total = plat.total_idle_power();
  Cost total = 0;
  for (Time t = 0; t < horizon; ++t) {
    total += std::max<Power>(idle_total + extra[t] - prof.budget_at(t), 0);
  }
  return total;
}

std::vector<std::string> validate_schedule(const Schedule& s, const EnhancedDag& g, Time horizon) {
  std::vector<std::string> out;
  if (static_cast<int>(s.start.size()) != g.size()) {
    out.push_back("schedule size differs from task count");
    return out;
  }
  for (int v = 0; v < g.size(); ++v) {
    if (s.start[v] < 0) out.push_back("task " + g.label[v] + " starts before 0");
    if (s.start[v] + g.exec[v] > horizon) {
      out.push_back("task " + g.label[v] + " exceeds the deadline");
    }
  }
  for (int u = 0; u < g.size(); ++u) {
    for (int v : g.succ[u]) {
      if (s.start[u] + g.exec[u] > s.start[v]) {
        out.push_back("edge (" + g.label[u] + ", " + g.label[v] + ") violated");
      }
    }
  }
  return out;
}

PowerTimeline::PowerTimeline(const Schedule& s, const EnhancedDag& g, const Platform& plat,
                             const PowerProfile& prof)
    : dag_(&g), plat_(&plat), start_(s.start) {
  const Time horizon = prof.horizon();
  check_bounds(s, g, horizon);
  power_.assign(horizon, plat.total_idle_power());
  budget_.resize(horizon);
  for (const auto& iv : prof.intervals) {
    for (Time t = iv.begin; t < iv.end; ++t) budget_[t] = iv.budget;
  }
  for (int v = 0; v < g.size(); ++v) {
    const Power draw = task_draw(v);
    for (Time t = start_[v]; t < start_[v] + g.exec[v]; ++t) power_[t] += draw;
  }
  for (Time t = 0; t < horizon; ++t) total_ += std::max<Power>(power_[t] - budget_[t], 0);
}

Power PowerTimeline::task_draw(int task) const {
  return plat_->procs[dag_->proc[task]].work_power;
}

Cost PowerTimeline::move_delta(int task, Time new_start) const {
  const Time len = dag_->exec[task];
  if (len == 0) return 0;
  const Time old_start = start_[task];
  const Power draw = task_draw(task);
  auto cc = [this](Power p, Time t) { return std::max<Power>(p - budget_[t], 0); };

  Cost delta = 0;
  for (Time t = old_start; t < old_start + len; ++t) {
    if (t >= new_start && t < new_start + len) continue;  // unchanged
    delta += cc(power_[t] - draw, t) - cc(power_[t], t);
  }
  for (Time t = new_start; t < new_start + len; ++t) {
    if (t >= old_start && t < old_start + len) continue;
    delta += cc(power_[t] + draw, t) - cc(power_[t], t);
  }
  return delta;
}

void PowerTimeline::apply_move(int task, Time new_start) {
  total_ += move_delta(task, new_start);
  const Time len = dag_->exec[task];
  const Time old_start = start_[task];
  const Power draw = task_draw(task);
  for (Time t = old_start; t < old_start + len; ++t) power_[t] -= draw;
  for (Time t = new_start; t < new_start + len; ++t) power_[t] += draw;
  start_[task] = new_start;
}

}  // namespace greensched
