#pragma once

#include <cstddef>
#include <vector>

#include "hyfac/model.hpp"

namespace hyfac {

using HingeId = std::size_t;

/// A laminar family over a ground set of hinge ids, stored as a forest.
///
/// Members are sorted and deduplicated; members() lists them parents-first
/// (by decreasing size) and parent(i) is the index of the smallest member
/// strictly containing member i, or -1 for a root.
class LaminarFamily {
public:
  LaminarFamily() = default;

  /// Throws DomainError if a member is empty, leaves the ground set, or
  /// crosses another member (neither nested nor disjoint).
  LaminarFamily(std::vector<HingeId> ground, std::vector<std::vector<HingeId>> members);

  const std::vector<HingeId>& ground() const { return ground_; }
  const std::vector<std::vector<HingeId>>& members() const { return members_; }
  int parent(std::size_t i) const { return parent_.at(i); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// Index of the smallest member containing the hinge, or -1.
  int deepest_member(HingeId h) const;

private:
  std::vector<HingeId> ground_; // sorted
  std::vector<std::vector<HingeId>> members_;
  std::vector<int> parent_;
  std::vector<int> deepest_; // indexed by position in ground_
};

/// Pairwise test: every two sets are nested or disjoint.
bool is_laminar(const std::vector<std::vector<HingeId>>& sets);

struct SplitRequest {
  std::vector<HingeId> ground;
  LaminarFamily fam_a;
  LaminarFamily fam_b;
  Count divisor = 1;
};

/// Chooses Z within the ground set such that floor(|P|/d) <= |Z n P| <=
/// ceil(|P|/d) for every member P of either family and for the ground set
/// itself. Solved as a feasible integral flow through the two forests.
/// Throws DomainError on a malformed request and InternalError if the flow
/// solver fails (which the rounding lemma rules out).
std::vector<HingeId> split(const SplitRequest& req);

/// Every subset satisfying split's bounds, by exhaustive enumeration in
/// increasing bitmask order over the sorted ground set. Throws SizeError
/// when the ground set has more than 20 hinges.
std::vector<std::vector<HingeId>> split_oracle(const SplitRequest& req);

} // namespace hyfac
