#include "greensched/enhanced_dag.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace greensched {

int EnhancedDag::edge_count() const {
  int sum = 0;
  for (const auto& s : succ) sum += static_cast<int>(s.size());
  return sum;
}

Time execution_time(Work weight, const ProcessorSpec& spec) {
  if (spec.speed < 1) throw std::invalid_argument("processor speed must be >= 1");
  return (weight + spec.speed - 1) / spec.speed;
}

namespace {

// Kahn; returns empty vector when the graph has a cycle.
std::vector<int> topo_order(const EnhancedDag& g) {
  const int n = g.size();
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.pred[v].size());
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) q.push(v);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int s : g.succ[v]) {
      if (--indeg[s] == 0) q.push(s);
    }
  }
  if (static_cast<int>(order.size()) != n) order.clear();
  return order;
}

// Error path only: find a chain pair (a before b on one processor) where b
// already reaches a through the remaining constraints.
[[noreturn]] void report_order_cycle(const EnhancedDag& g) {
  const int n = g.size();
  for (int p = 0; p < static_cast<int>(g.proc_chain.size()); ++p) {
    const auto& chain = g.proc_chain[p];
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const int a = chain[i];
      const int b = chain[i + 1];
      // DFS from b looking for a, ignoring the chain edge (a, b) itself.
      std::vector<char> seen(n, 0);
      std::vector<int> stack{b};
      seen[b] = 1;
      bool reaches = false;
      while (!stack.empty() && !reaches) {
        int v = stack.back();
        stack.pop_back();
        for (int s : g.succ[v]) {
          if (v == a && s == b) continue;
          if (s == a) {
            reaches = true;
            break;
          }
          if (!seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
          }
        }
      }
      if (reaches) {
        throw std::invalid_argument("mapping order conflicts with precedence: " + g.label[a] +
                                    " ordered before " + g.label[b] + " on processor " +
                                    std::to_string(p));
      }
    }
  }
  throw std::invalid_argument("enhanced DAG has a cycle");
}

}  // namespace

EnhancedDag build_enhanced_dag(const Workflow& w, const Mapping& m, const Platform& plat) {
  {
    auto bad = validate_workflow(w);
    if (!bad.empty()) throw std::invalid_argument("invalid workflow: " + bad.front());
    bad = validate_mapping(w, plat, m);
    if (!bad.empty()) throw std::invalid_argument("invalid mapping: " + bad.front());
  }

  const int n = w.task_count();
  EnhancedDag g;
  g.original_count = n;

  // Original tasks keep their workflow index.
  for (int v = 0; v < n; ++v) {
    const int p = m.assign[v];
    g.exec.push_back(execution_time(w.tasks[v].weight, plat.procs[p]));
    g.proc.push_back(p);
    g.label.push_back(w.tasks[v].id);
  }

  // One comm task per cross-processor edge, in workflow edge order.
  std::vector<int> comm_task(w.edge_count(), -1);
  for (int e = 0; e < w.edge_count(); ++e) {
    const auto& edge = w.edges[e];
    const int ps = m.assign[edge.src];
    const int pd = m.assign[edge.dst];
    if (ps == pd) continue;
    comm_task[e] = g.size();
    g.exec.push_back(edge.weight);  // bandwidth 1
    g.proc.push_back(plat.link_index(ps, pd));
    g.label.push_back(w.tasks[edge.src].id + "->" + w.tasks[edge.dst].id);
  }

  const int total = g.size();
  g.succ.resize(total);
  g.pred.resize(total);

  auto add_edge = [&g](int u, int v) {
    g.succ[u].push_back(v);
    g.pred[v].push_back(u);
  };

  for (int e = 0; e < w.edge_count(); ++e) {
    const auto& edge = w.edges[e];
    if (comm_task[e] < 0) {
      add_edge(edge.src, edge.dst);
    } else {
      add_edge(edge.src, comm_task[e]);
      add_edge(comm_task[e], edge.dst);
    }
  }

  // Per-processor execution order: chain edges between consecutive tasks.
  g.proc_chain.resize(plat.size());
  for (int p = 0; p < plat.real_count; ++p) {
    g.proc_chain[p] = m.proc_order[p];
    for (std::size_t i = 0; i + 1 < m.proc_order[p].size(); ++i) {
      add_edge(m.proc_order[p][i], m.proc_order[p][i + 1]);
    }
  }
  for (int l = 0; l < plat.link_count(); ++l) {
    auto& chain = g.proc_chain[plat.real_count + l];
    for (int e : m.link_order[l]) {
      if (e < 0 || e >= w.edge_count() || comm_task[e] < 0) {
        throw std::invalid_argument("link order references a non-communication edge");
      }
      if (g.proc[comm_task[e]] != plat.real_count + l) {
        throw std::invalid_argument("link order entry on the wrong link");
      }
      chain.push_back(comm_task[e]);
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      add_edge(chain[i], chain[i + 1]);
    }
  }

  // Every comm task must be covered by its link's order.
  {
    std::vector<char> in_chain(total, 0);
    for (const auto& chain : g.proc_chain) {
      for (int v : chain) in_chain[v] = 1;
    }
    for (int v = n; v < total; ++v) {
      if (!in_chain[v]) {
        throw std::invalid_argument("communication " + g.label[v] + " missing from link order");
      }
    }
  }

  // Drop duplicates (a workflow edge can coincide with a chain edge).
  for (int v = 0; v < total; ++v) {
    auto dedupe = [](std::vector<int>& adj) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    };
    dedupe(g.succ[v]);
    dedupe(g.pred[v]);
  }

  g.topo = topo_order(g);
  if (g.topo.empty() && total > 0) report_order_cycle(g);
  return g;
}

}  // namespace greensched
