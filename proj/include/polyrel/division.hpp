#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyrel/linearization.hpp"
#include "polyrel/poly_mat.hpp"

namespace polyrel {

/// F * M^{-1} mod x^t, for M with M(0) invertible and t >= 1.
///
/// Computed by Newton iteration on the power series inverse. When the
/// column degrees of M are unbalanced (largest above twice the average) the
/// high-degree columns are first split into average-degree slices and
/// elementary rows are inserted, so that M^{-1} is the leading principal
/// block of the inverse of the larger, low-degree matrix.
PolyMat truncated_expansion(const PolyMat& f, const PolyMat& m, std::size_t t);

struct QuoRem {
  PolyMat quotient;
  PolyMat remainder;
};

/// Division with remainder F = Q*M + R, cdeg(R) < cdeg(M), for column
/// reduced M. Requires delta >= 1 and cdeg(F) < cdeg(M) + delta; then
/// deg(Q) < delta. The quotient is read off a truncated expansion of the
/// reversed F times the inverse of the reversed M.
QuoRem pm_quorem(const PolyMat& m, const PolyMat& f, std::int64_t delta);

/// Smallest delta >= 1 with cdeg(F) < cdeg(M) + delta.
std::int64_t quotient_degree_bound(const PolyMat& m, const PolyMat& f);

/// rem(F, M) with the smallest admissible delta.
PolyMat pm_rem(const PolyMat& m, const PolyMat& f);

/// The 2^k remainders rem(x^(r*delta) F, M), r = 0 .. 2^k - 1, in order of r.
/// Requires cdeg(F) < cdeg(M).
std::vector<PolyMat> rem_of_shifts(const PolyMat& m, const PolyMat& f,
                                   std::int64_t delta, unsigned k);

/// rem(E F, M) for the expansion matrix E of `plan`: block i stacks
/// rem(x^(r*slice) F_i, M) for r < block_sizes[i].
PolyMat expanded_remainders(const PolyMat& m, const PolyMat& f,
                            const LinearizationPlan& plan);

/// rem(P F, M) for column reduced M and cdeg(F) < cdeg(M). The column
/// degrees of P may be arbitrarily unbalanced.
PolyMat residual(const PolyMat& m, const PolyMat& p, const PolyMat& f);

}  // namespace polyrel
