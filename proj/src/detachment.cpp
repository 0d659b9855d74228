#include "hyfac/detachment.hpp"

#include <sstream>

#include "hyfac/verifier.hpp"

namespace hyfac {

HingeFamilies build_hinge_families(const Design& design, VertexId alpha) {
  if (!design.has_vertex(alpha)) throw DomainError("unknown vertex " + to_string(alpha));

  HingeFamilies hf;
  hf.alpha = alpha;
  hf.by_color.resize(static_cast<std::size_t>(design.params().k()));
  const auto edges = design.edges();
  for (std::size_t pos = 0; pos < edges.size(); ++pos) {
    const auto& e = edges[pos];
    const int p = occurrences(e.vertices, alpha);
    if (p == 0) continue;

    std::vector<VertexId> rest;
    for (const auto& v : e.vertices)
      if (v != alpha) rest.push_back(v);

    std::vector<HingeId> own;
    for (int slot = 1; slot <= p; ++slot) {
      const HingeId h = hf.hinges.size();
      hf.hinges.push_back({pos, e.id, slot});
      own.push_back(h);
      hf.by_color[static_cast<std::size_t>(e.color)].push_back(h);
      hf.by_shape[{p, rest}].push_back(h);
    }
    hf.by_edge.push_back(std::move(own));
  }

  std::vector<HingeId> ground(hf.hinges.size());
  for (std::size_t i = 0; i < ground.size(); ++i) ground[i] = i;

  std::vector<std::vector<HingeId>> a;
  for (const auto& c : hf.by_color)
    if (!c.empty()) a.push_back(c);
  a.insert(a.end(), hf.by_edge.begin(), hf.by_edge.end());
  std::vector<std::vector<HingeId>> b;
  for (const auto& [key, hs] : hf.by_shape) b.push_back(hs);

  hf.fam_a = LaminarFamily(ground, std::move(a));
  hf.fam_b = LaminarFamily(std::move(ground), std::move(b));
  return hf;
}

Design detach_one(const Design& design, VertexId alpha) {
  const Count g_alpha = design.g(alpha);
  if (g_alpha < 2)
    throw DomainError("cannot detach " + to_string(alpha) + ": g = " + std::to_string(g_alpha));

  const auto hf = build_hinge_families(design, alpha);
  SplitRequest req;
  req.ground.resize(hf.hinges.size());
  for (std::size_t i = 0; i < req.ground.size(); ++i) req.ground[i] = i;
  req.fam_a = hf.fam_a;
  req.fam_b = hf.fam_b;
  req.divisor = g_alpha;
  const auto z = split(req);

  std::vector<int> moved(design.edges().size(), 0);
  for (HingeId h : z) ++moved[hf.hinges[h].edge_pos];

  Design out = design;
  const VertexId beta{alpha.part, design.next_index(alpha.part)};
  out.add_vertex(beta, 1);
  out.set_g(alpha, g_alpha - 1);
  for (std::size_t pos = 0; pos < moved.size(); ++pos) {
    if (moved[pos] == 0) continue;
    if (moved[pos] > 1) throw InternalError("split moved both hinges of one edge to the new vertex");
    out.relabel(pos, alpha, beta, moved[pos]);
  }

  // Local post-conditions; the full audit is verify_c1_c4.
  const auto& r = design.params().r();
  for (int i = 0; i < design.params().k(); ++i) {
    const Count ri = r[static_cast<std::size_t>(i)];
    const Count db = degree(out, beta, i);
    const Count da = degree(out, alpha, i);
    if (db != ri || da != ri * (g_alpha - 1)) {
      std::ostringstream os;
      os << "detachment of " << to_string(alpha) << " broke color " << i + 1 << " degrees: d(beta) = "
         << db << " (want " << ri << "), d(alpha) = " << da << " (want " << ri * (g_alpha - 1) << ")";
      throw InternalError(os.str());
    }
  }
  for (const auto& e : out.edges())
    if (occurrences(e.vertices, beta) > 1)
      throw InternalError("detachment produced an edge containing the new vertex twice");
  return out;
}

Design detach_all(Design design, const DetachOptions& options) {
  int step = 0;
  for (;;) {
    std::optional<VertexId> alpha;
    for (const auto& v : design.vertices())
      if (v.g > 1 && (!alpha || v.id < *alpha)) alpha = v.id;
    if (!alpha) break;

    design = detach_one(design, *alpha);
    ++step;
    if (options.trace) {
      if (auto rep = verify_c1_c4(design); !rep.passed()) {
        std::ostringstream os;
        os << "invariants fail after detachment step " << step << ": " << rep;
        throw InternalError(os.str());
      }
    }
    if (options.on_step) options.on_step(design, step);
  }
  return design;
}

} // namespace hyfac
