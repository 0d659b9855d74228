#include "hyfac/laminar_split.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "hyfac/flow.hpp"

namespace hyfac {

namespace {

std::size_t position_in(const std::vector<HingeId>& sorted_ground, HingeId h) {
  auto it = std::lower_bound(sorted_ground.begin(), sorted_ground.end(), h);
  if (it == sorted_ground.end() || *it != h)
    throw DomainError("hinge " + std::to_string(h) + " is not in the ground set");
  return static_cast<std::size_t>(it - sorted_ground.begin());
}

Count floor_share(std::size_t size, Count d) { return static_cast<Count>(size) / d; }
Count ceil_share(std::size_t size, Count d) { return (static_cast<Count>(size) + d - 1) / d; }

void validate(const SplitRequest& req, std::vector<HingeId>& sorted_ground) {
  if (req.divisor < 1) throw DomainError("split divisor must be at least 1");
  sorted_ground = req.ground;
  std::sort(sorted_ground.begin(), sorted_ground.end());
  if (std::adjacent_find(sorted_ground.begin(), sorted_ground.end()) != sorted_ground.end())
    throw DomainError("ground set has repeated hinges");
  if (!req.fam_a.empty() && req.fam_a.ground() != sorted_ground)
    throw DomainError("family A is over a different ground set");
  if (!req.fam_b.empty() && req.fam_b.ground() != sorted_ground)
    throw DomainError("family B is over a different ground set");
}

} // namespace

LaminarFamily::LaminarFamily(std::vector<HingeId> ground, std::vector<std::vector<HingeId>> members)
    : ground_(std::move(ground)) {
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw DomainError("ground set has repeated hinges");

  for (auto& m : members) {
    if (m.empty()) throw DomainError("laminar family member is empty");
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end())
      throw DomainError("laminar family member has repeated hinges");
    for (HingeId h : m) position_in(ground_, h);
  }
  // Largest first; equal sets collapse to one member.
  std::stable_sort(members.begin(), members.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::vector<HingeId>> unique;
  for (auto& m : members)
    if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(std::move(m));
  members_ = std::move(unique);

  // Placing members in decreasing size, the current owner of a member's
  // first hinge must own all of its hinges, and is then its parent.
  deepest_.assign(ground_.size(), -1);
  parent_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& m = members_[i];
    const int owner = deepest_[position_in(ground_, m.front())];
    for (HingeId h : m)
      if (deepest_[position_in(ground_, h)] != owner)
        throw DomainError("family is not laminar: member " + std::to_string(i) +
                          " crosses another member");
    parent_.push_back(owner);
    for (HingeId h : m) deepest_[position_in(ground_, h)] = static_cast<int>(i);
  }
}

int LaminarFamily::deepest_member(HingeId h) const { return deepest_[position_in(ground_, h)]; }

bool is_laminar(const std::vector<std::vector<HingeId>>& sets) {
  std::vector<std::vector<HingeId>> sorted = sets;
  for (auto& s : sorted) std::sort(s.begin(), s.end());
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      std::vector<HingeId> common;
      std::set_intersection(sorted[a].begin(), sorted[a].end(), sorted[b].begin(), sorted[b].end(),
                            std::back_inserter(common));
      const bool nested = common.size() == sorted[a].size() || common.size() == sorted[b].size();
      if (!common.empty() && !nested) return false;
    }
  return true;
}

std::vector<HingeId> split(const SplitRequest& req) {
  std::vector<HingeId> ground;
  validate(req, ground);
  if (ground.empty()) return {};
  const Count d = req.divisor;

  // The ground set joins family A as its root so that |Z| is bounded too.
  std::vector<std::vector<HingeId>> a_members = req.fam_a.members();
  a_members.push_back(ground);
  const LaminarFamily fam_a(ground, std::move(a_members));
  const LaminarFamily& fam_b = req.fam_b;

  // source -> A roots -> ... -> A leaves -> hinges -> B leaves -> ... -> B roots -> sink
  FlowNetwork net(2);
  const int source = 0;
  const int sink = 1;
  std::vector<int> a_node(fam_a.size());
  for (std::size_t i = 0; i < fam_a.size(); ++i) {
    a_node[i] = net.add_node();
    const int from = fam_a.parent(i) < 0 ? source : a_node[static_cast<std::size_t>(fam_a.parent(i))];
    const auto sz = fam_a.members()[i].size();
    net.add_arc(from, a_node[i], floor_share(sz, d), ceil_share(sz, d));
  }
  std::vector<int> b_node(fam_b.size());
  for (std::size_t i = 0; i < fam_b.size(); ++i) b_node[i] = net.add_node();
  for (std::size_t i = 0; i < fam_b.size(); ++i) {
    const int to = fam_b.parent(i) < 0 ? sink : b_node[static_cast<std::size_t>(fam_b.parent(i))];
    const auto sz = fam_b.members()[i].size();
    net.add_arc(b_node[i], to, floor_share(sz, d), ceil_share(sz, d));
  }
  std::vector<std::size_t> hinge_arc(ground.size());
  for (std::size_t p = 0; p < ground.size(); ++p) {
    const HingeId h = ground[p];
    const int node = net.add_node();
    hinge_arc[p] = net.add_arc(a_node[static_cast<std::size_t>(fam_a.deepest_member(h))], node, 0, 1);
    const int b = fam_b.empty() ? -1 : fam_b.deepest_member(h);
    net.add_arc(node, b < 0 ? sink : b_node[static_cast<std::size_t>(b)], 0, 1);
  }

  if (!net.find_feasible(source, sink)) {
    std::ostringstream os;
    os << "laminar split: no feasible flow (|S| = " << ground.size() << ", d = " << d
       << ", |A| = " << req.fam_a.size() << ", |B| = " << fam_b.size() << ")";
    throw InternalError(os.str());
  }

  std::vector<HingeId> z;
  for (std::size_t p = 0; p < ground.size(); ++p)
    if (net.flow(hinge_arc[p]) == 1) z.push_back(ground[p]);

  auto check = [&](const std::vector<HingeId>& member) {
    std::vector<HingeId> common;
    std::set_intersection(z.begin(), z.end(), member.begin(), member.end(),
                          std::back_inserter(common));
    const auto c = static_cast<Count>(common.size());
    if (c < floor_share(member.size(), d) || c > ceil_share(member.size(), d))
      throw InternalError("laminar split: flow result violates a share bound");
  };
  for (const auto& m : fam_a.members()) check(m);
  for (const auto& m : fam_b.members()) check(m);
  return z;
}

std::vector<std::vector<HingeId>> split_oracle(const SplitRequest& req) {
  std::vector<HingeId> ground;
  validate(req, ground);
  if (ground.size() > 20) throw SizeError("split_oracle is capped at 20 hinges");
  const Count d = req.divisor;

  // Members as bitmasks over positions in the sorted ground set.
  std::vector<std::uint32_t> masks;
  auto to_mask = [&](const std::vector<HingeId>& set) {
    std::uint32_t mask = 0;
    for (HingeId h : set) {
      auto p = std::lower_bound(ground.begin(), ground.end(), h) - ground.begin();
      mask |= std::uint32_t{1} << p;
    }
    return mask;
  };
  for (const auto& m : req.fam_a.members()) masks.push_back(to_mask(m));
  for (const auto& m : req.fam_b.members()) masks.push_back(to_mask(m));
  masks.push_back(to_mask(ground));

  std::vector<std::vector<HingeId>> feasible;
  const std::uint32_t limit = std::uint32_t{1} << ground.size();
  for (std::uint32_t z = 0; z < limit; ++z) {
    const bool ok = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t p) {
      const Count size = std::popcount(p);
      const Count hit = std::popcount(z & p);
      return size / d <= hit && hit * d < size + d; // hit <= ceil(size/d)
    });
    if (!ok) continue;
    std::vector<HingeId> subset;
    for (std::size_t p = 0; p < ground.size(); ++p)
      if (z & (std::uint32_t{1} << p)) subset.push_back(ground[p]);
    feasible.push_back(std::move(subset));
  }
  return feasible;
}

} // namespace hyfac
