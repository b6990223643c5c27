#pragma once

#include <optional>
#include <vector>

#include "tropica/matrix.hpp"
#include "tropica/maxplus.hpp"

namespace tropica {

using Vec = std::vector<MaxPlus>;

/// Residuation test for membership of b in the span of V: the greatest
/// feasible coefficients lambda_i = min_j (b_j - v_ij) either reconstruct b
/// or nothing does. Returns the coefficients, or nullopt when b is not in
/// the span.
std::optional<std::vector<MaxPlus>> span_membership(const std::vector<Vec>& v, const Vec& b);

/// Linear combination sum_i lambda_i v_i.
Vec combine(const std::vector<Vec>& v, const std::vector<MaxPlus>& lambda);

bool is_zero_vec(const Vec& v);

/// True if y = lambda * z for some scalar lambda (both nonzero).
bool proportional(const Vec& y, const Vec& z);

/// Number of extremal rays of the row space: scale-normalize the rows,
/// deduplicate, and count the ones outside the span of the others.
int row_rank(const Matrix<MaxPlus>& a);
int col_rank(const Matrix<MaxPlus>& a);

/// Minimal number of rows of A generating the whole row space.
/// Enumerates subsets ascending from row_rank(A), extremal rows first;
/// throws SearchGuard past the subset budget.
int spanning_row_rank(const Matrix<MaxPlus>& a, long subset_budget = 1L << 12);

/// Anti-exchange axiom instance: checks the hypotheses (y, z nonzero, not
/// proportional, outside <X>, y in <X u {z}>) and returns whether
/// z is outside <X u {y}>. Throws PreconditionUnmet when the hypotheses do
/// not hold.
bool anti_exchange_check(const std::vector<Vec>& x, const Vec& y, const Vec& z);

}  // namespace tropica
