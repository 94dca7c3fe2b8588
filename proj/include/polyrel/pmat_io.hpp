#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polyrel/poly_mat.hpp"

namespace polyrel {

// Text format:
//
//   pmat <rows> <cols> <modulus>
//   <i> <j> : <c0> <c1> ...
//
// one line per nonzero entry, 0-based indices, coefficients low to high in
// [0, modulus). Omitted entries are zero; `#` starts a comment. Several
// matrices may follow one another, each opened by its own header.

/// Exactly one matrix. Throws ParseError with the line and column.
PolyMat parse_pmat(std::string_view text);
/// Any number of matrices (possibly none).
std::vector<PolyMat> parse_pmat_list(std::string_view text);

/// Canonical text: nonzero entries only, row-major, normalized coefficients.
std::string emit_pmat(const PolyMat& m);

/// Comma-separated signed decimals, e.g. "3,-1,0". Empty text gives an
/// empty list. Throws ParseError (line 1) on malformed input.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace polyrel
