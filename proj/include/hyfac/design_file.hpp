#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hyfac/model.hpp"

namespace hyfac {

inline constexpr int kDesignFormatVersion = 1;

/// Malformed or inconsistent design document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// JSON design document (format version 1):
///
///   {
///     "format": "hyfac-design",
///     "formatVersion": 1,
///     "params": {"lambda": 1, "m": 2, "n": 2, "r": [3]},
///     "vertices": [{"label": "x_1_1", "g": 1}, ...],
///     "factors": [
///       {"color": 1, "r": 3, "edges": [
///         ["x_1_1", "x_1_2", "x_2_1"],
///         ...
///       ]}
///     ]
///   }
///
/// Labels are x_<part>_<index>, 1-based. Vertices are sorted by (part,
/// index); one factor per color in ascending order; each edge is a sorted
/// triple and edges within a factor are sorted. Output is byte-deterministic.
std::string serialize(const Design& design);

/// Throws ParseError.
Design parse_design(std::string_view text);

/// Equal params, vertex weights, and per-color edge multisets.
bool same_design(const Design& a, const Design& b);

/// Parses "x_<part>_<index>" (1-based) into a 0-based VertexId.
VertexId parse_label(std::string_view label);

/// Name of part p (0-based) in schedules: A, B, ..., Z, AA, AB, ...
std::string part_name(int p);

/// Meeting schedule for a uniform-r design, one day per color:
///
///   Day 1: {A1, A2, B1}
///   Day 1: {A1, A2, B2}
///
///   Day 2: ...
///
/// Throws DomainError for non-uniform r or a design without edges.
std::string schedule(const Design& design);

} // namespace hyfac
