#pragma once

#include <cstddef>
#include <vector>

#include "hyfac/model.hpp"

namespace hyfac {

/// Directed network with lower and upper arc bounds. Feasible flows are
/// found by reducing the lower bounds to a max-flow problem and running
/// Dinic's algorithm. Arcs are explored in insertion order, so results are
/// reproducible.
class FlowNetwork {
public:
  explicit FlowNetwork(int nodes = 0) : nodes_(nodes) {}

  int add_node() { return nodes_++; }
  int node_count() const { return nodes_; }

  /// Returns a handle for querying the arc's flow after solving.
  std::size_t add_arc(int from, int to, Count lower, Count upper);

  /// Looks for a flow from `source` to `sink` (of any value) that respects
  /// every arc's bounds and conserves flow at all other nodes. Returns false
  /// when none exists.
  bool find_feasible(int source, int sink);

  /// Flow on an arc from the last successful find_feasible.
  Count flow(std::size_t arc) const { return flow_.at(arc); }

  /// Plain maximum flow value from source to sink, ignoring lower bounds.
  Count max_flow(int source, int sink);

private:
  struct Arc {
    int from;
    int to;
    Count lower;
    Count upper;
  };

  int nodes_;
  std::vector<Arc> arcs_;
  std::vector<Count> flow_;
};

} // namespace hyfac
