#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyrel/poly_mat.hpp"

namespace polyrel {

/// When enabled, every relation basis computed below is checked (shifted
/// Popov form, annihilation, degree of the determinant) before it is
/// returned; a failure raises InternalError. Off by default.
void set_self_check(bool on) noexcept;
bool self_check_enabled() noexcept;

struct CleanedInstance {
  PolyMat m;  // M without its identity columns and the matching rows
  PolyMat f;  // F without those columns
  std::vector<std::size_t> kept;  // indices of the columns that remain
};

/// Drops the columns of M equal to a unit vector e_j together with row j.
/// Since x^k e_j reduces to zero modulo such an M, F must vanish on them.
CleanedInstance clean_identity_columns(const PolyMat& m, const PolyMat& f);

/// s-Popov basis of { p : p F = 0 mod M } when its s-minimal degree delta is
/// known. M column reduced, cdeg(F) < cdeg(M).
PolyMat known_degree_relations(const PolyMat& m, const PolyMat& f, const Shift& s,
                               const std::vector<std::int64_t>& delta);

/// s-Popov relation basis for M in Hermite form with no identity column and
/// cdeg(F) < cdeg(M).
PolyMat relations_mod_hermite(const PolyMat& h, const PolyMat& f, const Shift& s);

/// One divide-and-conquer step on the columns of H = [[H1, *], [0, H2]],
/// n >= 2. `p1` is the basis for (H1, F1, s), `p2` the one for H2 and the
/// trailing columns of rem(P1 F, H) under s + delta1.
struct HermiteSplit {
  std::size_t n1 = 0;
  PolyMat p1;
  PolyMat p2;
  std::vector<std::int64_t> delta1;
  std::vector<std::int64_t> delta2;
  PolyMat basis;
};
HermiteSplit relations_mod_hermite_split(const PolyMat& h, const PolyMat& f, const Shift& s);

/// Hermite normal form of a nonsingular square matrix: upper triangular,
/// monic diagonal, entries above the diagonal reduced modulo it.
PolyMat hermite_form(const PolyMat& m);

/// s-Popov form of a nonsingular square matrix (same row space).
PolyMat popov_form(const PolyMat& m, const Shift& s);

/// s-Popov basis of { p : p F = 0 mod M } for any nonsingular M.
PolyMat relation_basis_general(const PolyMat& m, const PolyMat& f, const Shift& s);

}  // namespace polyrel
