#pragma once

#include <cstdint>
#include <vector>

#include "polyrel/const_mat.hpp"
#include "polyrel/poly_mat.hpp"

namespace polyrel {

/// Multiplication by x on K[x]^n / rowspace(M) in the monomial basis
///   (x^i, 0, ..., 0) for i < sigma_1, ..., (0, ..., 0, x^i) for i < sigma_n
/// where sigma = cdeg(M). M must have every column degree attained only on
/// the diagonal by a monic entry (true for Hermite and shifted Popov forms)
/// and no identity column.
ConstMat multiplication_matrix(const PolyMat& m);

/// Row i concatenates the sigma_j low-to-high coefficients of F(i,j).
/// Requires cdeg(F) < sigma.
ConstMat coefficient_embedding(const PolyMat& f, const std::vector<std::int64_t>& sigma);

/// s-Popov basis of { p : sum_k coeff_k(p) (E X^k) = 0 }.
///
/// Monomials x^k e_i are visited in increasing (k + s_i, i) order; each
/// vector E_i X^k is reduced against the ones accepted so far. The first
/// dependent power of row i closes row i of the basis, the dependency
/// coefficients giving its lower-order terms.
PolyMat relations_from_linear_algebra(const ConstMat& e, const ConstMat& x, const Shift& s);

}  // namespace polyrel
