#pragma once

#include <string>
#include <vector>

#include "hyfac/model.hpp"

namespace hyfac {

/// One copy of the pair {u, v} (u < v) of lambda K_n with its color.
struct GraphEdge {
  int u = 0;
  int v = 0;
  int copy = 0;
  int color = 0;
};

struct GraphColoring {
  int n = 0;
  Count lambda = 0;
  int k = 0;
  std::vector<GraphEdge> edges;
};

struct GraphConditionReport {
  bool passed = true;
  std::vector<std::string> violations;
};

/// Passes iff n >= 2, r is nonempty with positive entries, r_i * n is even
/// for every i, and sum r_i = lambda * (n - 1).
GraphConditionReport check_graph_conditions(int n, Count lambda, const std::vector<Count>& r);

/// Thrown when factorize_complete_graph is called outside its preconditions.
class GraphConditionError : public std::invalid_argument {
public:
  explicit GraphConditionError(GraphConditionReport report);
  const GraphConditionReport& report() const { return report_; }

private:
  GraphConditionReport report_;
};

/// Perfect matchings of K_n for even n by the circle method, in rotation
/// order. Each matching lists pairs (u, v) with u < v.
std::vector<std::vector<std::pair<int, int>>> round_robin_matchings(int n);

/// Hamiltonian cycles of K_n for odd n by Walecki's zigzag rotation. Each
/// cycle is a vertex sequence of length n, closed implicitly.
std::vector<std::vector<int>> walecki_cycles(int n);

/// (r_1, ..., r_k)-factorization of lambda K_n. Color i receives a
/// consecutive block of r_i matchings (n even) or r_i / 2 Hamiltonian
/// cycles (n odd) from the fixed decomposition of the lambda copies.
GraphColoring factorize_complete_graph(int n, Count lambda, const std::vector<Count>& r);

} // namespace hyfac
