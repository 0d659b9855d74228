#pragma once

// Colored 3-uniform multi-hypergraphs with a part structure and
// amalgamation weights.
//
// Indexing conventions used throughout the library:
//   * parts are 0-based (0 .. n-1),
//   * vertex indices within a part are 0-based,
//   * colors are 0-based (0 .. k-1).
// Human-facing formats (design files, schedules, CLI reports) are 1-based.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyfac/errors.hpp"

namespace hyfac {

using Count = std::int64_t;

/// C(x, 2) for x >= 0.
constexpr Count choose2(Count x) { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Problem instance: lambda-fold K^3_{m x n} with factor degrees r_1..r_k.
class Params {
public:
  /// Throws DomainError unless lambda, m, r_i >= 1, n >= 2, k >= 1, and
  /// 3*lambda*(n-1)*C(m,2)*m*n fits in a signed 64-bit integer.
  Params(Count lambda, Count m, Count n, std::vector<Count> r);

  Count lambda() const { return lambda_; }
  Count m() const { return m_; }
  Count n() const { return n_; }
  const std::vector<Count>& r() const { return r_; }
  int k() const { return static_cast<int>(r_.size()); }

  /// Degree of every vertex of lambda K^3_{m x n}: 3*lambda*(n-1)*C(m,2).
  Count total_degree() const { return total_degree_; }
  /// Edge count of lambda K^3_{m x n}: 2*lambda*m*C(n,2)*C(m,2).
  Count total_edges() const;
  bool uniform() const;

  friend bool operator==(const Params&, const Params&) = default;

private:
  Count lambda_;
  Count m_;
  Count n_;
  std::vector<Count> r_;
  Count total_degree_;
};

struct VertexId {
  int part = 0;
  int index = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(VertexId v);

/// A vertex multiset of size three, sorted by (part, index).
using Triple = std::array<VertexId, 3>;

Triple canonicalize(Triple t);
bool is_canonical(const Triple& t);

/// True iff the triple meets exactly one part twice and another part once.
bool is_n_partite(const Triple& t);

/// Number of times v occurs in t (0..3).
int occurrences(const Triple& t, VertexId v);

/// One copy of one edge.
struct EdgeInstance {
  Triple vertices;
  int color = 0;
  std::size_t id = 0;
};

struct Vertex {
  VertexId id;
  Count g = 1;
};

/// A k-edge-colored n-partite 3-uniform multi-hypergraph together with an
/// amalgamation function g. Edges are stored one record per copy.
class Design {
public:
  explicit Design(Params params);

  const Params& params() const { return params_; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const EdgeInstance> edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }

  bool has_vertex(VertexId v) const { return position_.contains(v); }
  /// Throws DomainError for unknown vertices.
  Count g(VertexId v) const;
  std::vector<VertexId> part_members(int part) const;
  /// Smallest index not yet used in the given part.
  int next_index(int part) const;

  /// Adds a vertex with weight g >= 1. Throws DomainError on a duplicate id,
  /// a part outside [0, n), or a nonpositive weight.
  void add_vertex(VertexId v, Count g);
  void set_g(VertexId v, Count g);

  /// Appends an edge instance and returns its id. The triple is
  /// canonicalized; it must be n-partite over known vertices and the color
  /// must lie in [0, k).
  std::size_t add_edge(Triple t, int color);

  /// Replaces `count` occurrences of `from` by `to` in the edge stored at
  /// position `pos`, re-canonicalizing the triple. The result must stay
  /// n-partite.
  void relabel(std::size_t pos, VertexId from, VertexId to, int count);

private:
  void check_edge(const Triple& t, int color) const;

  Params params_;
  std::vector<Vertex> vertices_;
  std::map<VertexId, std::size_t> position_;
  std::vector<EdgeInstance> edges_;
  std::size_t next_edge_id_ = 0;
};

/// Number of hinges at v, counting double occurrences twice; restricted to
/// one color when given. Throws DomainError for an unknown vertex or a color
/// outside [0, k).
Count degree(const Design& design, VertexId v, std::optional<int> color = {});

/// Number of edge instances whose vertex multiset equals `shape`
/// (restricted to one color when given). Unknown shapes count 0.
Count multiplicity(const Design& design, const Triple& shape,
                   std::optional<int> color = {});

Count edge_count(const Design& design);

/// Aggregated multiplicities, keyed by canonical triple.
std::map<Triple, Count> multiplicity_table(const Design& design,
                                           std::optional<int> color = {});

} // namespace hyfac
