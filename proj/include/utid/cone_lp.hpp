#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "utid/exact.hpp"

namespace utid {

using ExponentVector = std::vector<BigInt>;
using SupportSet = std::vector<std::size_t>;

/// Phase-1 simplex with Bland's rule: some x >= 0 with A x = b, or nothing.
std::optional<RatVector> solve_nonneg(const RatMatrix& A, const RatVector& b);

/// Scales each row of a rational matrix to integers.
IntMatrix clear_row_denominators(const RatMatrix& m);

/// Nontrivial l >= 0 in Z^k with M l = 0 (and l_i >= 1 for every forced i).
/// Columns of M are the k variables. The result has coprime entries.
std::optional<ExponentVector> feasible_nonneg(const IntMatrix& M, const std::vector<std::size_t>& forced);
std::optional<ExponentVector> feasible_nonneg(const IntMatrix& M, std::optional<std::size_t> forced = std::nullopt);

/// Indices i that are positive in some nonnegative solution.
SupportSet support(const IntMatrix& M);

/// A solution whose support is exactly support(M); nothing when that support is empty.
std::optional<ExponentVector> full_support_solution(const IntMatrix& M);

/// Columns are the cone generators v_1..v_k. Returns { i : -v_i in cone(v_1..v_k) }.
SupportSet lineality_filter(const IntMatrix& generators);

/// Rank of the generator matrix. Throws std::domain_error("cone not a linear space")
/// when some generator is dropped by lineality_filter.
std::size_t cone_dim(const IntMatrix& generators);

bool is_nonneg_solution(const IntMatrix& M, const ExponentVector& l);

}  // namespace utid
