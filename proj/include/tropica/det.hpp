#pragma once

#include <utility>
#include <vector>

#include "tropica/errors.hpp"
#include "tropica/matrix.hpp"

namespace tropica {

inline constexpr int kDetSizeGuard = 10;

namespace detail {

// Recursive permutation expansion with partial products; subtrees with a
// zero partial product are pruned, which matters on the sparse fixtures.
template <class S, class Sink>
void det_expand(const Matrix<S>& a, int row, unsigned used, const S& partial, bool even,
                Sink&& sink) {
    int n = a.rows();
    if (row == n) {
        sink(partial, even);
        return;
    }
    for (int j = 0; j < n; ++j) {
        if (used & (1u << j)) continue;
        S next = partial * a(row, j);
        if (next == S::zero()) continue;
        // Inversions added by placing column j at this row: previously
        // placed columns that are greater than j.
        int placed_below = 0;
        for (int k = 0; k < j; ++k)
            if (used & (1u << k)) ++placed_below;
        int inversions = row - placed_below;
        det_expand(a, row + 1, used | (1u << j), next, (inversions % 2) ? !even : even,
                   std::forward<Sink>(sink));
    }
}

}  // namespace detail

/// Bideterminant (|A|+, |A|-): sums of permutation products over even and
/// odd permutations, in an arbitrary semiring.
template <class S>
std::pair<S, S> bideterminant(const Matrix<S>& a) {
    if (!a.is_square()) throw ShapeMismatch("bideterminant of non-square matrix");
    if (a.rows() > kDetSizeGuard)
        throw SizeGuard("bideterminant limited to n <= " + std::to_string(kDetSizeGuard));
    S plus = S::zero();
    S minus = S::zero();
    if (a.rows() == 0) return {S::one(), S::zero()};
    detail::det_expand(a, 0, 0u, S::one(), true, [&](const S& term, bool even) {
        if (even)
            plus = plus + term;
        else
            minus = minus + term;
    });
    return {plus, minus};
}

/// Determinant in a semiring with symmetry (unary minus): the usual signed
/// permutation sum. With the identity symmetry this is the permanent.
template <class S>
S sym_det(const Matrix<S>& a) {
    auto [plus, minus] = bideterminant(a);
    return plus - minus;
}

/// Minor of A with row i and column j suppressed.
template <class S>
Matrix<S> suppress(const Matrix<S>& a, int i, int j) {
    std::vector<int> ri, ci;
    for (int r = 0; r < a.rows(); ++r)
        if (r != i) ri.push_back(r);
    for (int c = 0; c < a.cols(); ++c)
        if (c != j) ci.push_back(c);
    return a.submatrix(ri, ci);
}

/// Positive and negative adjoint matrices: the (i,j) entry of adj+ is
/// |A(j,i)|+ when i+j is even and |A(j,i)|- when odd; adj- swaps the parity
/// rule.
template <class S>
std::pair<Matrix<S>, Matrix<S>> adjoint_pair(const Matrix<S>& a) {
    if (!a.is_square()) throw ShapeMismatch("adjoint of non-square matrix");
    int n = a.rows();
    Matrix<S> plus(n, n), minus(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [p, m] = bideterminant(suppress(a, j, i));
            if ((i + j) % 2 == 0) {
                plus(i, j) = p;
                minus(i, j) = m;
            } else {
                plus(i, j) = m;
                minus(i, j) = p;
            }
        }
    return {plus, minus};
}

/// Signed adjoint adj+ (-) adj-, for semirings with symmetry.
template <class S>
Matrix<S> adjoint(const Matrix<S>& a) {
    auto [plus, minus] = adjoint_pair(a);
    Matrix<S> adj(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) adj(i, j) = plus(i, j) - minus(i, j);
    return adj;
}

/// All k-subsets of {0,..,n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

inline constexpr long kCompoundGuard = 256;

/// k-th positive or negative compound matrix, indexed by k-subsets in
/// lexicographic order.
template <class S>
Matrix<S> compound(const Matrix<S>& a, int k, bool plus_part) {
    if (!a.is_square()) throw ShapeMismatch("compound of non-square matrix");
    int n = a.rows();
    if (k < 1 || k > n) throw SizeGuard("compound order out of range");
    auto subs = k_subsets(n, k);
    if (static_cast<long>(subs.size()) > kCompoundGuard)
        throw SizeGuard("compound dimension exceeds " + std::to_string(kCompoundGuard));
    int d = static_cast<int>(subs.size());
    Matrix<S> c(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto [p, m] = bideterminant(a.submatrix(subs[i], subs[j]));
            c(i, j) = plus_part ? p : m;
        }
    return c;
}

template <class S>
S trace(const Matrix<S>& a) {
    S t = S::zero();
    for (int i = 0; i < a.rows(); ++i) t = t + a(i, i);
    return t;
}

}  // namespace tropica
