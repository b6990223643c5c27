#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropica/det.hpp"
#include "tropica/ext.hpp"
#include "tropica/matrix.hpp"
#include "tropica/sym.hpp"
#include "tropica/witness.hpp"

namespace tropica {

inline constexpr int kCramerSizeGuard = 10;

/// Outcome of a Cramer solve over S_max or T_e.
template <class S>
struct SolveOutcome {
    enum class Kind {
        unique_signed,     // x is the unique signed (real) solution
        det_not_invertible,
        cramer_not_signed,
    };
    Kind kind;
    S det;
    std::vector<S> cramer;   // adjoint * b, always filled (diagnostic data)
    std::vector<S> x;        // filled for unique_signed
    int bad_index = -1;      // first non-signed Cramer entry otherwise
};

/// Cramer rule for the balance system A x nabla b over S_max: when det(A) is
/// invertible and the Cramer vector is signed, returns the unique signed
/// solution (verified entrywise against the balance).
SolveOutcome<Sym> cramer_solve_sym(const Matrix<Sym>& a, const std::vector<Sym>& b);

/// Same contract over T_e with signed replaced by real.
SolveOutcome<Ext> cramer_solve_ext(const Matrix<Ext>& a, const std::vector<Ext>& b);

/// Per row, true iff the maximum of {a_ij + x_j} u {b_i} is attained at
/// least twice or every term is bottom.
std::vector<bool> twice_attained(const Matrix<MaxPlus>& a, const Vec& b, const Vec& x);

struct TropicalCramerResult {
    bool ok = false;
    Vec x;
    std::string failure;  // which hypothesis failed
};

/// Cramer rule for tropical linear equations: x_i = per(B_i) - per(A) when A
/// and every Cramer matrix are tropically nonsingular (or per B_i is
/// bottom); postcondition checked through twice_attained.
TropicalCramerResult tropical_cramer(const Matrix<MaxPlus>& a, const Vec& b);

struct TwoSidedResult {
    bool ok = false;
    Vec x;
    std::string report;
    std::optional<SolveOutcome<Sym>> inner;
};

/// Cramer rule for the two-sided system A'x + b' = A''x + b'' over R_max,
/// through the symmetrization A = A' (-) A'', b = b'' (-) b'.
TwoSidedResult two_sided_cramer(const Matrix<MaxPlus>& a1, const Matrix<MaxPlus>& a2,
                                const Vec& b1, const Vec& b2);

/// Max-plus Radon partition: every family of n+1 vectors in R_max^n is
/// GM-dependent; returns a verified witness following the constructive
/// proof (balanced-determinant delegation or Cramer split by signs).
GmWitness radon_partition(const std::vector<Vec>& vectors);

/// Exhaustive enumeration of the signed solutions of A x nabla b over S_max
/// for small n: sign patterns x difference-constraint polyhedra. Each
/// returned solution is a concrete signed vector; `unique` is true when the
/// full solution set is a single point. Intended as an oracle for tests and
/// spot checks.
struct SignedSolutionSet {
    std::vector<std::vector<Sym>> solutions;  // distinct example points
    bool unique = false;                      // solution set is one point
};
SignedSolutionSet enumerate_signed_solutions(const Matrix<Sym>& a, const std::vector<Sym>& b);

}  // namespace tropica
