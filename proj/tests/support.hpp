#pragma once

// Test-only builders. These construct designs by direct enumeration and do
// not go through the detachment pipeline.

#include <algorithm>
#include <random>
#include <vector>

#include "hyfac/laminar_split.hpp"
#include "hyfac/model.hpp"

namespace hyfac::testing {

/// lambda K^3 over parts of the given sizes, every edge of color 0, g == 1.
/// Params carry r = {r0}.
inline Design complete_multipartite(Count lambda, const std::vector<Count>& sizes, Count r0 = 1) {
  Count m = sizes.empty() ? 1 : sizes.front();
  Design d(Params(lambda, m, static_cast<Count>(sizes.size()), {r0}));
  for (int p = 0; p < static_cast<int>(sizes.size()); ++p)
    for (int i = 0; i < sizes[static_cast<std::size_t>(p)]; ++i) d.add_vertex({p, i}, 1);
  for (int p = 0; p < static_cast<int>(sizes.size()); ++p)
    for (int i = 0; i < sizes[static_cast<std::size_t>(p)]; ++i)
      for (int j = i + 1; j < sizes[static_cast<std::size_t>(p)]; ++j)
        for (int q = 0; q < static_cast<int>(sizes.size()); ++q) {
          if (q == p) continue;
          for (int l = 0; l < sizes[static_cast<std::size_t>(q)]; ++l)
            for (Count c = 0; c < lambda; ++c) d.add_edge({VertexId{p, i}, {p, j}, {q, l}}, 0);
        }
  return d;
}

/// Random r-vector of positive entries with sum `total`, every entry a
/// multiple of `step`. Requires total % step == 0.
inline std::vector<Count> random_composition(std::mt19937& rng, Count total, Count step) {
  std::vector<Count> r;
  Count units = total / step;
  while (units > 0) {
    std::uniform_int_distribution<Count> pick(1, std::min<Count>(units, 4));
    Count u = pick(rng);
    r.push_back(u * step);
    units -= u;
  }
  std::shuffle(r.begin(), r.end(), rng);
  return r;
}

/// Random laminar family over `ground`: intervals of a random permutation,
/// cut recursively, each kept with probability 1/2.
inline std::vector<std::vector<HingeId>> random_laminar(std::mt19937& rng,
                                                        std::vector<HingeId> ground) {
  std::shuffle(ground.begin(), ground.end(), rng);
  std::vector<std::vector<HingeId>> members;
  std::bernoulli_distribution keep(0.5);
  auto cut = [&](auto& self, std::size_t lo, std::size_t hi) -> void {
    if (lo >= hi) return;
    if (keep(rng)) members.emplace_back(ground.begin() + static_cast<std::ptrdiff_t>(lo),
                                        ground.begin() + static_cast<std::ptrdiff_t>(hi));
    if (hi - lo == 1) return;
    std::uniform_int_distribution<std::size_t> pieces(2, std::min<std::size_t>(4, hi - lo));
    const std::size_t k = pieces(rng);
    std::vector<std::size_t> bounds{lo, hi};
    std::uniform_int_distribution<std::size_t> at(lo + 1, hi - 1);
    for (std::size_t i = 1; i < k; ++i) bounds.push_back(at(rng));
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) self(self, bounds[i], bounds[i + 1]);
  };
  cut(cut, 0, ground.size());
  return members;
}

/// Random split request with |S| in [1, max_size] and d in [1, max_divisor].
inline SplitRequest random_split_request(std::mt19937& rng, std::size_t max_size, Count max_divisor) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<Count> div(1, max_divisor);
  std::vector<HingeId> ground(size(rng));
  for (std::size_t i = 0; i < ground.size(); ++i) ground[i] = 3 * i + 1; // non-contiguous ids
  SplitRequest req;
  req.ground = ground;
  req.fam_a = LaminarFamily(ground, random_laminar(rng, ground));
  req.fam_b = LaminarFamily(ground, random_laminar(rng, ground));
  req.divisor = div(rng);
  return req;
}

/// Independent check of the share bounds: floor(|P|/d) <= |Z n P| <= ceil(|P|/d)
/// for every member of both families and for the ground set.
inline bool meets_share_bounds(const SplitRequest& req, const std::vector<HingeId>& z) {
  auto ok = [&](const std::vector<HingeId>& p) {
    Count hit = 0;
    for (HingeId h : p) hit += std::count(z.begin(), z.end(), h);
    const auto size = static_cast<Count>(p.size());
    const Count lo = size / req.divisor;
    const Count hi = lo + (size % req.divisor != 0 ? 1 : 0);
    return lo <= hit && hit <= hi;
  };
  for (HingeId h : z)
    if (std::find(req.ground.begin(), req.ground.end(), h) == req.ground.end()) return false;
  if (!ok(req.ground)) return false;
  for (const auto& p : req.fam_a.members())
    if (!ok(p)) return false;
  for (const auto& p : req.fam_b.members())
    if (!ok(p)) return false;
  return true;
}

} // namespace hyfac::testing
