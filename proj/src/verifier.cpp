#include "hyfac/verifier.hpp"

#include <set>
#include <sstream>

namespace hyfac {

namespace {

std::string shape_label(const Triple& t) {
  return "{" + to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]) + "}";
}

std::string color_label(int i) { return "color " + std::to_string(i + 1); }

/// Per-vertex, per-color degrees in one pass over the edges.
std::map<VertexId, std::vector<Count>> degree_table(const Design& d) {
  std::map<VertexId, std::vector<Count>> deg;
  for (const auto& v : d.vertices())
    deg[v.id].assign(static_cast<std::size_t>(d.params().k()), 0);
  for (const auto& e : d.edges())
    for (const auto& v : e.vertices) ++deg[v][static_cast<std::size_t>(e.color)];
  return deg;
}

/// Expected multiplicity of every admissible shape, given a weight rule.
/// Shapes absent from the result are expected to have multiplicity zero.
template <class PairRule, class TripleRule>
std::map<Triple, Count> expected_shapes(const Design& d, PairRule pair_rule,
                                        TripleRule triple_rule) {
  std::map<Triple, Count> out;
  const auto verts = d.vertices();
  for (const auto& u : verts)
    for (const auto& v : verts) {
      if (u.id.part == v.id.part) continue;
      if (Count c = pair_rule(u, v); c != 0) out[canonicalize({u.id, u.id, v.id})] = c;
    }
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const auto& u = verts[a];
      const auto& w = verts[b];
      if (u.id.part != w.id.part) continue;
      for (const auto& v : verts) {
        if (v.id.part == u.id.part) continue;
        if (Count c = triple_rule(u, v, w); c != 0) out[canonicalize({u.id, v.id, w.id})] = c;
      }
    }
  return out;
}

/// Compares actual against expected shape multiplicities; `classify` names
/// the check for a mismatching shape.
template <class Classify>
void compare_shapes(const std::map<Triple, Count>& expected, const std::map<Triple, Count>& actual,
                    Classify classify, AuditReport& rep) {
  auto ei = expected.begin();
  auto ai = actual.begin();
  while (ei != expected.end() || ai != actual.end()) {
    if (ai == actual.end() || (ei != expected.end() && ei->first < ai->first)) {
      rep.add(classify(ei->first), shape_label(ei->first), std::to_string(ei->second), "0");
      ++ei;
    } else if (ei == expected.end() || ai->first < ei->first) {
      rep.add(classify(ai->first), shape_label(ai->first), "0", std::to_string(ai->second));
      ++ai;
    } else {
      if (ei->second != ai->second)
        rep.add(classify(ei->first), shape_label(ei->first), std::to_string(ei->second),
                std::to_string(ai->second));
      ++ei;
      ++ai;
    }
  }
}

void check_part_sums(const Design& d, AuditReport& rep) {
  const auto& p = d.params();
  std::vector<Count> sums(static_cast<std::size_t>(p.n()), 0);
  for (const auto& v : d.vertices()) sums[static_cast<std::size_t>(v.id.part)] += v.g;
  for (std::size_t i = 0; i < sums.size(); ++i)
    rep.expect_eq("C1", "part " + std::to_string(i + 1), p.m(), sums[i]);
}

} // namespace

AuditReport check_sufficiency(const Params& params) {
  AuditReport rep;
  const Count m = params.m();
  const Count n = params.n();
  Count sum = 0;
  for (int i = 0; i < params.k(); ++i) {
    const Count ri = params.r()[static_cast<std::size_t>(i)];
    if ((ri * m) % 3 != 0)
      rep.add("S1", "r_" + std::to_string(i + 1), "3 | r_i*m", std::to_string(ri * m));
    if ((ri * m * n) % 2 != 0)
      rep.add("S2", "r_" + std::to_string(i + 1), "2 | r_i*m*n", std::to_string(ri * m * n));
    sum += ri;
  }
  rep.expect_eq("S3", "sum r_i", params.total_degree(), sum);
  return rep;
}

UniformCheck check_uniform(Count lambda, Count m, Count n, Count r) {
  UniformCheck out;
  if (lambda < 1 || m < 1 || n < 2 || r < 1) {
    out.report.add("input", "lambda,m,n,r", "lambda,m,r >= 1 and n >= 2", "out of range");
    return out;
  }
  const Count total = 3 * lambda * (n - 1) * choose2(m);
  if ((r * m) % 3 != 0) out.report.add("i", "r", "3 | r*m", std::to_string(r * m));
  if ((r * n * m) % 2 != 0) out.report.add("ii", "r", "2 | r*n*m", std::to_string(r * n * m));
  if (total == 0 || total % r != 0)
    out.report.add("iii", "r", "r | 3*lambda*(n-1)*C(m,2) = " + std::to_string(total),
                   std::to_string(r));
  if (out.report.passed()) out.k = total / r;
  return out;
}

AuditReport verify_c1_c4(const Design& design) {
  AuditReport rep;
  const auto& p = design.params();
  const Count lambda = p.lambda();
  check_part_sums(design, rep);

  const auto expected = expected_shapes(
      design, [&](const Vertex& u, const Vertex& v) { return lambda * choose2(u.g) * v.g; },
      [&](const Vertex& u, const Vertex& v, const Vertex& w) { return lambda * u.g * v.g * w.g; });
  const auto actual = multiplicity_table(design);
  compare_shapes(
      expected, actual,
      [](const Triple& t) -> std::string {
        if (!is_n_partite(t)) return "shape";
        return (t[0] == t[1] || t[1] == t[2]) ? "C2" : "C3";
      },
      rep);

  for (const auto& [v, per_color] : degree_table(design))
    for (int i = 0; i < p.k(); ++i)
      rep.expect_eq("C4", to_string(v) + " " + color_label(i),
                    p.r()[static_cast<std::size_t>(i)] * design.g(v),
                    per_color[static_cast<std::size_t>(i)]);
  return rep;
}

AuditReport verify_factorization(const Design& design) {
  AuditReport rep;
  const auto& p = design.params();
  for (const auto& v : design.vertices()) rep.expect_eq("g", to_string(v.id), Count{1}, v.g);
  for (int part = 0; part < p.n(); ++part)
    rep.expect_eq("parts", "part " + std::to_string(part + 1), p.m(),
                  static_cast<Count>(design.part_members(part).size()));

  const auto expected = expected_shapes(
      design, [](const Vertex&, const Vertex&) { return Count{0}; },
      [&](const Vertex&, const Vertex&, const Vertex&) { return p.lambda(); });
  compare_shapes(expected, multiplicity_table(design),
                 [](const Triple&) { return std::string("multiplicity"); }, rep);

  for (const auto& e : design.edges())
    if (e.color < 0 || e.color >= p.k())
      rep.add("partition", "edge " + std::to_string(e.id), "color in [1,k]",
              std::to_string(e.color + 1));

  for (const auto& [v, per_color] : degree_table(design))
    for (int i = 0; i < p.k(); ++i)
      rep.expect_eq("regularity", to_string(v) + " " + color_label(i),
                    p.r()[static_cast<std::size_t>(i)], per_color[static_cast<std::size_t>(i)]);
  return rep;
}

Count degree_multipartite(const std::vector<Count>& part_sizes, int p, Count lambda) {
  if (p < 0 || static_cast<std::size_t>(p) >= part_sizes.size())
    throw DomainError("part index out of range");
  Count pairs = 0;
  Count others = 0;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    if (static_cast<int>(i) == p) continue;
    pairs += choose2(part_sizes[i]);
    others += part_sizes[i];
  }
  return lambda * (pairs + (part_sizes[static_cast<std::size_t>(p)] - 1) * others);
}

RegularityCheck check_regularity_necessity(const std::vector<Count>& part_sizes) {
  if (part_sizes.size() < 2) throw DomainError("need at least two parts");
  for (Count s : part_sizes)
    if (s < 1) throw DomainError("part sizes must be positive");
  RegularityCheck out;
  for (std::size_t i = 0; i < part_sizes.size(); ++i)
    out.degrees.push_back(degree_multipartite(part_sizes, static_cast<int>(i)));
  for (std::size_t q = 1; q < out.degrees.size(); ++q)
    if (out.degrees[q] != out.degrees[0]) {
      out.regular = false;
      out.witness = std::pair{0, static_cast<int>(q)};
      break;
    }
  return out;
}

} // namespace hyfac
