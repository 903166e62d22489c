#ifndef OPTIFORM_GRAPH_H_
#define OPTIFORM_GRAPH_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace optiform {

// A simple directed graph: no self-loops, no parallel edges.
struct Digraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<int, int>> edges;  // (from, to)

  int size() const { return static_cast<int>(nodes.size()); }
  // Sources of the edges entering each node, ascending.
  std::vector<std::vector<int>> Predecessors() const;
  std::vector<std::vector<int>> Successors() const;

  bool operator==(const Digraph&) const = default;
};

// Throws ValidationError on bad indices, self-loops or repeated edges.
void Validate(const Digraph& graph);

// Kahn's algorithm, smallest ready node first; nullopt on a cycle.
std::optional<std::vector<int>> TopologicalOrder(const Digraph& graph);
bool IsAcyclic(const Digraph& graph);

// Longest-path depth of each node in a DAG (sources are level 0).
std::optional<std::vector<int>> TopologicalLevels(const Digraph& graph);

}  // namespace optiform

#endif  // OPTIFORM_GRAPH_H_
