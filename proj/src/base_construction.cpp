#include "hyfac/base_construction.hpp"

#include "hyfac/verifier.hpp"

namespace hyfac {

std::vector<ColoredTriple> lift_to_star(const GraphColoring& gc) {
  std::vector<ColoredTriple> out;
  out.reserve(2 * gc.edges.size());
  for (const auto& e : gc.edges) {
    const VertexId u{e.u, 0};
    const VertexId v{e.v, 0};
    out.push_back({canonicalize({u, u, v}), e.color});
    out.push_back({canonicalize({v, v, u}), e.color});
  }
  return out;
}

Design build_base(const Params& params) {
  if (auto gate = check_sufficiency(params); !gate.passed()) throw ConditionError(std::move(gate));

  const Count m = params.m();
  const Count lambda_star = params.lambda() * m * choose2(m);
  std::vector<Count> r_star;
  for (Count ri : params.r()) {
    if ((ri * m) % 3 != 0) throw InternalError("r_i*m not divisible by 3 after gate");
    r_star.push_back(ri * m / 3);
  }

  const auto gc = factorize_complete_graph(static_cast<int>(params.n()), lambda_star, r_star);

  Design d(params);
  for (int part = 0; part < params.n(); ++part) d.add_vertex({part, 0}, m);
  for (const auto& ct : lift_to_star(gc)) d.add_edge(ct.vertices, ct.color);
  return d;
}

} // namespace hyfac
