#pragma once

#include <cstdint>
#include <vector>

#include "polyrel/division.hpp"
#include "polyrel/poly_mat.hpp"

// Slow reference implementations used to cross-check the fast algorithms.
// They share only the basic arithmetic types with the rest of the library.
namespace polyrel::oracle {

/// Division by leading-term cancellation, one row and one degree at a time.
QuoRem naive_quorem(const PolyMat& m, const PolyMat& f);

struct DetAdj {
  Poly det;
  PolyMat adj;  // adj * M = M * adj = det * I
};
/// Cofactor expansion over column subsets; dimension at most 12.
DetAdj determinant_and_adjugate(const PolyMat& m);
Poly determinant(const PolyMat& m);

/// Whether p F = 0 mod M for each row p of `p`, tested as
/// p F adj(M) = 0 modulo det(M) entrywise. M must be nonsingular.
bool annihilates(const PolyMat& p, const PolyMat& m, const PolyMat& f);

/// A basis (as 1 x m rows) of the relations of degree at most dmax, from the
/// nullspace of a coefficient matrix.
std::vector<PolyMat> brute_force_relations(const PolyMat& m, const PolyMat& f,
                                           std::int64_t dmax);

/// Full check that P is the s-Popov basis of { p : p F = 0 mod M }:
/// form, annihilation, determinant degree and generation of every
/// relation of degree up to deg det M.
bool verify_relation_basis(const PolyMat& p, const PolyMat& m, const PolyMat& f,
                           const Shift& s);

}  // namespace polyrel::oracle
