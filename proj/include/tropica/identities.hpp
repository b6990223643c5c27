#pragma once

#include <string>
#include <vector>

#include "tropica/matrix.hpp"
#include "tropica/polyexpr.hpp"

namespace tropica {

/// Symbolic matrix expression: entries are polynomial expressions.
using ExprMatrix = Matrix<PolyExpr>;

/// A catalogued identity, as the two sides P, Q of P = Q (they may contain
/// Minus nodes), with a legend naming each variable index.
struct IdentityPair {
    std::string name;
    PolyExpr lhs;
    PolyExpr rhs;
    std::vector<std::string> legend;
};

/// Strong-form splitting P+ - P- = Q+ - Q- into positive expressions.
struct IdentitySplit {
    std::string name;
    PolyExpr p_plus, p_minus, q_plus, q_minus;
    std::vector<std::string> legend;
};

/// True iff expand(p) = expand(q) in Z[x]; by the weak transfer principle this
/// certifies the minus-free identity P+ + Q- = P- + Q+ (the balance P nabla Q)
/// in every commutative semiring (with symmetry).
bool weak_transfer_check(const PolyExpr& p, const PolyExpr& q);

/// Computes the residual R with P+ = Q+ + R and P- = Q- + R in N[x].
/// Throws NotAnIdentity when P+ - P- != Q+ - Q- over Z, and MonomialOverlap
/// when Q+ and Q- share a monomial (strong form inapplicable).
SignedPolynomial strong_transfer_residual(const PolyExpr& p_plus, const PolyExpr& p_minus,
                                          const PolyExpr& q_plus, const PolyExpr& q_minus);

// ---- identity generators ------------------------------------------------
// Variable layout conventions are reported in the legend; size guards follow
// the expansion cost (SizeGuard otherwise).

/// Symbolic n x n matrix of fresh variables starting at base.
ExprMatrix symbolic_matrix(int n, int rows, int cols, int base, const std::string& name,
                           std::vector<std::string>& legend);

/// Determinant as a polynomial expression (with Minus), or its (plus, minus)
/// positive parts.
PolyExpr expr_det(const ExprMatrix& a);
std::pair<PolyExpr, PolyExpr> expr_bidet(const ExprMatrix& a);

/// |AB| = |A||B| for n x n symbolic matrices (n <= 4).
IdentityPair det_mult_identity(int n);
IdentitySplit det_mult_split(int n);

/// Binet-Cauchy for C = AB with A n x p, B p x m, on row set alpha and
/// column set beta of common size r.
IdentityPair binet_cauchy_identity(int n, int p, int m, const std::vector<int>& alpha,
                                   const std::vector<int>& beta);
IdentitySplit binet_cauchy_split(int n, int p, int m, const std::vector<int>& alpha,
                                 const std::vector<int>& beta);

/// Entry (i,j) of A A^adj = |A| I (n <= 4).
IdentityPair cramer_adjoint_identity(int n, int i, int j);
IdentitySplit cramer_adjoint_split(int n, int i, int j);

/// Entry (i,j) of the Cayley-Hamilton identity for a symbolic n x n matrix
/// (n <= 4): A^n + sum_{k even} A^{n-k} tr(L+^k) + sum_{k odd} A^{n-k} tr(L-^k)
/// equals the same expression with the parities swapped.
IdentityPair cayley_hamilton_identity(int n, int i, int j);

/// S_{2n} over commuting scalar variables (n = 1 is the meaningful scalar
/// case; over matrices the identity is checked numerically instead).
IdentityPair amitsur_levitzki_scalar_identity(int n);

/// Capelli polynomial over commuting scalar variables.
IdentityPair capelli_scalar_identity(int n);

/// The natural +/- split of the identity of algebraicity A(y,z) =
/// S_{n^2}([y^{n^2},z],...,[y,z]) = 0; its Q+ and Q- overlap, so
/// strong_transfer_residual rejects it (n = 1 suffices to exhibit this).
IdentitySplit algebraicity_split(int n);

}  // namespace tropica
