#pragma once

#include <cstdint>
#include <vector>

#include "polyrel/poly_mat.hpp"

namespace polyrel {

struct ApproximantBasis {
  PolyMat basis;
  /// Pivot degrees; for a shifted Popov basis, its diagonal degrees.
  std::vector<std::int64_t> degrees;
};

/// A u-ordered weak Popov basis of { p : p G = 0 mod x^orders_j columnwise }
/// with pivot index (0, 1, ..., r-1), by processing the order conditions
/// one coefficient at a time. `degrees` is the u-minimal degree.
ApproximantBasis approximant_basis_weak_popov(const PolyMat& g,
                                              const std::vector<std::int64_t>& orders,
                                              const Shift& u);

/// The unique u-Popov basis of the same module. A second weak Popov pass with
/// the shift -delta (delta the u-minimal degree) gives a basis whose
/// -delta-leading matrix L is invertible; the result is L^{-1} times it.
ApproximantBasis approximant_basis_popov(const PolyMat& g,
                                         const std::vector<std::int64_t>& orders,
                                         const Shift& u);

/// The u-Popov basis of the left kernel { p : p A = 0 }, one row per kernel
/// generator. `degree_bound` must bound the degree of the rows of that
/// basis; the rows are read off an approximant basis at an order where
/// truncated annihilation forces exact annihilation.
PolyMat kernel_basis_popov(const PolyMat& a, const Shift& u, std::int64_t degree_bound);

/// The s-Popov basis of { p : p F = 0 mod M } for M column reduced and
/// cdeg(F) < cdeg(M), read off the leading block of the (s, min(s),...)-Popov
/// kernel basis of [F; M].
PolyMat relations_via_kernel(const PolyMat& m, const PolyMat& f, const Shift& s);

/// The s-Popov basis of { p : p F = 0 mod M } for a nonzero polynomial M and
/// an m x 1 matrix F with deg(F) < deg(M).
PolyMat relations_mod_single_poly(const Poly& modulus, const PolyMat& f, const Shift& s);

}  // namespace polyrel
