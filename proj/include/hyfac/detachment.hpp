#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hyfac/laminar_split.hpp"
#include "hyfac/model.hpp"

namespace hyfac {

/// One occurrence of the split vertex inside one edge instance.
struct Hinge {
  std::size_t edge_pos = 0; // position in Design::edges()
  std::size_t edge_id = 0;
  int slot = 1;             // 1 or 2
};

/// Key of a member H(alpha^p, U) of family B: p copies of alpha plus the
/// remaining vertices U (sorted; size 3 - p).
using ShapeKey = std::pair<int, std::vector<VertexId>>;

/// The hinges at alpha and the two laminar families over them.
/// Hinge ids are positions in `hinges`, numbered in edge order then slot.
struct HingeFamilies {
  VertexId alpha;
  std::vector<Hinge> hinges;
  std::vector<std::vector<HingeId>> by_color;       // H_i(alpha), possibly empty
  std::vector<std::vector<HingeId>> by_edge;        // H^e(alpha) for edges at alpha
  std::map<ShapeKey, std::vector<HingeId>> by_shape; // H(alpha^p, U), nonempty only
  LaminarFamily fam_a;                              // colors and edges
  LaminarFamily fam_b;                              // shapes
};

HingeFamilies build_hinge_families(const Design& design, VertexId alpha);

/// Splits alpha into alpha and a fresh vertex beta of the same part (next
/// unused index). Hinges selected by the laminar split with divisor g(alpha)
/// move to beta; g(alpha) drops by one and g(beta) = 1.
/// Throws DomainError if g(alpha) < 2 and InternalError if the local degree
/// or shape checks on alpha and beta fail.
Design detach_one(const Design& design, VertexId alpha);

struct DetachOptions {
  /// Run verify_c1_c4 after every step and throw on the first violation.
  bool trace = false;
  /// Called after each step with the new design and the 1-based step number.
  std::function<void(const Design&, int)> on_step;
};

/// Repeats detach_one on the smallest (part, index) vertex with g > 1 until
/// g == 1 everywhere.
Design detach_all(Design design, const DetachOptions& options = {});

} // namespace hyfac
