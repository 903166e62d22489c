#include "optiform/graph.h"

#include <algorithm>
#include <queue>
#include <set>

#include "optiform/common.h"

namespace optiform {

std::vector<std::vector<int>> Digraph::Predecessors() const {
  std::vector<std::vector<int>> pred(nodes.size());
  for (auto [from, to] : edges) pred[to].push_back(from);
  for (auto& p : pred) std::sort(p.begin(), p.end());
  return pred;
}

std::vector<std::vector<int>> Digraph::Successors() const {
  std::vector<std::vector<int>> succ(nodes.size());
  for (auto [from, to] : edges) succ[from].push_back(to);
  for (auto& s : succ) std::sort(s.begin(), s.end());
  return succ;
}

void Validate(const Digraph& graph) {
  std::set<std::string> names;
  for (const std::string& name : graph.nodes) {
    if (name.empty() || !names.insert(name).second) {
      throw ValidationError("graph: empty or duplicate node name '" + name +
                            "'");
    }
  }
  std::set<std::pair<int, int>> seen;
  for (auto [from, to] : graph.edges) {
    if (from < 0 || to < 0 || from >= graph.size() || to >= graph.size()) {
      throw ValidationError("graph: edge endpoint out of range");
    }
    if (from == to) {
      throw ValidationError("graph: self-loop on '" + graph.nodes[from] + "'");
    }
    if (!seen.insert({from, to}).second) {
      throw ValidationError("graph: repeated edge " + graph.nodes[from] +
                            " -> " + graph.nodes[to]);
    }
  }
}

std::optional<std::vector<int>> TopologicalOrder(const Digraph& graph) {
  const int n = graph.size();
  std::vector<int> indegree(n, 0);
  for (auto [from, to] : graph.edges) ++indegree[to];
  auto succ = graph.Successors();
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool IsAcyclic(const Digraph& graph) {
  return TopologicalOrder(graph).has_value();
}

std::optional<std::vector<int>> TopologicalLevels(const Digraph& graph) {
  auto order = TopologicalOrder(graph);
  if (!order) return std::nullopt;
  auto pred = graph.Predecessors();
  std::vector<int> level(graph.size(), 0);
  for (int v : *order) {
    for (int u : pred[v]) level[v] = std::max(level[v], level[u] + 1);
  }
  return level;
}

}  // namespace optiform
