#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyfac/audit.hpp"
#include "hyfac/model.hpp"

namespace hyfac {

/// Sufficient conditions for an (r_1..r_k)-factorization of lambda K^3_{m x n}:
///   S1: 3 | r_i m,  S2: 2 | r_i m n,  S3: sum r_i = 3 lambda (n-1) C(m,2).
/// Every failing clause is reported (per color for S1/S2).
AuditReport check_sufficiency(const Params& params);

struct UniformCheck {
  AuditReport report;
  /// k = 3 lambda (n-1) C(m,2) / r when the report passes.
  std::optional<Count> k;
};

/// Uniform-degree conditions: (i) 3 | rm, (ii) 2 | rnm,
/// (iii) r | 3 lambda (n-1) C(m,2). Inputs must be positive (n >= 2).
UniformCheck check_uniform(Count lambda, Count m, Count n, Count r);

/// Exhaustive audit of the amalgamated-design invariants:
///   C1  part sums of g equal m,
///   C2  mult(u^2, v) = lambda C(g(u),2) g(v) for u, v in different parts,
///   C3  mult(u, v, w) = lambda g(u) g(v) g(w) for u != w in one part, v elsewhere,
///   C4  d_i(u) = r_i g(u) for every color and vertex,
/// and every other edge shape has multiplicity zero ("shape").
AuditReport verify_c1_c4(const Design& design);

/// Audit of a fully detached design (g == 1) as an (r_1..r_k)-factorization
/// of lambda K^3_{m x n}.
AuditReport verify_factorization(const Design& design);

/// Degree of a vertex in part p (0-based) of lambda K^3_{m_1,...,m_n}:
/// lambda * (sum_{i != p} C(m_i,2) + (m_p - 1) sum_{i != p} m_i).
Count degree_multipartite(const std::vector<Count>& part_sizes, int p, Count lambda = 1);

struct RegularityCheck {
  bool regular = true;
  /// Parts (0-based) whose vertices have different degrees, when not regular.
  std::optional<std::pair<int, int>> witness;
  std::vector<Count> degrees; // per part
};

/// Decides regularity of K^3_{m_1,...,m_n} by computing every part's degree.
RegularityCheck check_regularity_necessity(const std::vector<Count>& part_sizes);

} // namespace hyfac
