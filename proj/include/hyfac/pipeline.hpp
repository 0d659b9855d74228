#pragma once

#include "hyfac/detachment.hpp"
#include "hyfac/model.hpp"

namespace hyfac {

/// Builds an (r_1..r_k)-factorization of lambda K^3_{m x n}: condition gate,
/// amalgamated base, vertex-by-vertex detachment, final audit.
///
/// Throws ConditionError if (S1)-(S3) fail, InternalError if any audit of the
/// base or the final design fails.
Design construct(const Params& params, const DetachOptions& options = {});

/// Params for the uniform case, with k derived from r. Throws
/// ConditionError if the uniform conditions fail.
Params uniform_params(Count lambda, Count m, Count n, Count r);

} // namespace hyfac
