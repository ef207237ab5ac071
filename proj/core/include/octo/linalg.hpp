#ifndef OCTO_LINALG_HPP
#define OCTO_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "octo/matrix.hpp"

namespace octo {

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0} in reduced-echelon-parametrized form: one vector
/// per free column, in increasing column order, with entry 1 at the free
/// column. Size is always cols - rank.
std::vector<Vec> nullspace_basis(const Matrix& m);

/// One exact solution of a x = b, or nullopt when the system is
/// inconsistent. Free variables, if any, are set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Rank of the span of a list of equal-length vectors.
std::size_t span_rank(const std::vector<Vec>& vectors);

/// Deterministic reduced row echelon form of the span of `vectors`:
/// the nonzero RREF rows, a canonical basis of the row space.
std::vector<Vec> span_rref_basis(const std::vector<Vec>& vectors);

} // namespace octo

#endif
