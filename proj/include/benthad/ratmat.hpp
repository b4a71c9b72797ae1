#ifndef BENTHAD_RATMAT_HPP
#define BENTHAD_RATMAT_HPP

#include <optional>
#include <vector>

#include "benthad/numeric.hpp"

namespace benthad {

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

/// Rows spanning {x : m x = 0}. In RREF-derived form: the restriction of
/// the result to the free columns of m is an identity block.
RatMatrix kernel_basis(const RatMatrix& m);

/// Exact inverse, or nothing if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

/// Does v lie in the row space of m?
bool row_space_contains(RatMatrix m, const RatRow& v);

} // namespace benthad

#endif
