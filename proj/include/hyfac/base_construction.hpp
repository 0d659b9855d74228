#pragma once

#include <vector>

#include "hyfac/graph_factorization.hpp"
#include "hyfac/model.hpp"

namespace hyfac {

struct ColoredTriple {
  Triple vertices;
  int color = 0;
};

/// Lifts each colored copy of {u, v} to the two hyperedges {u, u, v} and
/// {v, v, u} of the same color. Graph vertex j becomes (part j, index 0).
/// Per-color degrees triple.
std::vector<ColoredTriple> lift_to_star(const GraphColoring& gc);

/// The fully amalgamated starting design: n vertices (one per part, index 0)
/// with g = m, colored by factorizing lambda*m*C(m,2) K_n with degrees
/// r_i*m/3 and lifting to the star hypergraph.
/// Throws ConditionError if (S1)-(S3) fail.
Design build_base(const Params& params);

} // namespace hyfac
