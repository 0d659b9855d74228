#include "hyfac/pipeline.hpp"

#include <sstream>

#include "hyfac/base_construction.hpp"
#include "hyfac/verifier.hpp"

namespace hyfac {

Design construct(const Params& params, const DetachOptions& options) {
  Design base = build_base(params);
  if (auto rep = verify_c1_c4(base); !rep.passed()) {
    std::ostringstream os;
    os << "base design fails its invariants: " << rep;
    throw InternalError(os.str());
  }
  Design final_design = detach_all(std::move(base), options);
  if (auto rep = verify_factorization(final_design); !rep.passed()) {
    std::ostringstream os;
    os << "final design is not a factorization: " << rep;
    throw InternalError(os.str());
  }
  return final_design;
}

Params uniform_params(Count lambda, Count m, Count n, Count r) {
  auto check = check_uniform(lambda, m, n, r);
  if (!check.k) throw ConditionError(std::move(check.report));
  return Params(lambda, m, n, std::vector<Count>(static_cast<std::size_t>(*check.k), r));
}

} // namespace hyfac
