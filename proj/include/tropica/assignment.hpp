#pragma once

#include <optional>
#include <vector>

#include "tropica/matrix.hpp"
#include "tropica/maxplus.hpp"

namespace tropica {

/// Result of the optimal assignment problem for a square max-plus matrix:
/// the permanent, an optimal permutation witness, and exact dual potentials
/// with A_ij <= u_i + v_j and per(A) = sum(u) + sum(v) when finite.
struct AssignmentResult {
    MaxPlus value;
    std::vector<int> witness;   // row i -> column witness[i]; empty when value is bottom
    std::vector<Rational> row_duals;
    std::vector<Rational> col_duals;
};

/// Shortest-augmenting-path assignment with exact rational potentials;
/// bottom entries are forbidden arcs. Deterministic: ties are broken by the
/// lowest index.
AssignmentResult permanent_assignment(const Matrix<MaxPlus>& a);

/// Digraph of tight arcs A_ij = u_i + v_j of an identity-normalized
/// instance.
struct TightDigraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // adj[i] = tight successors of i
};

/// Requires result.value finite and the witness to be the identity
/// permutation (normalize first); throws ZeroPermanent otherwise.
TightDigraph tight_digraph(const Matrix<MaxPlus>& a, const AssignmentResult& result);

/// Permute columns so the assignment witness becomes the identity, mapping
/// the duals along; parity of the determinant sides may flip but
/// balancedness is preserved.
void normalize_to_identity(Matrix<MaxPlus>& a, AssignmentResult& result);

/// True iff the digraph minus self-loops contains a cycle.
bool has_cycle(const TightDigraph& g);

struct CycleSearchStats {
    long enumerated = 0;
    bool capped = false;
};

inline constexpr long kCycleEnumerationCap = 1'000'000;

/// Searches the elementary cycles of g (self-loops excluded) for one of even
/// length, enumerating in Johnson's order with early exit. Returns
/// nullopt when the enumeration cap was hit before an even cycle was seen.
std::optional<bool> has_even_cycle(const TightDigraph& g, CycleSearchStats* stats = nullptr,
                                   long cap = kCycleEnumerationCap);

/// True iff the permanent is bottom or the maximum in per(A) is attained by
/// at least two permutations (cycle in the tight digraph).
bool is_trop_singular(const Matrix<MaxPlus>& a);

/// True iff |A|+ = |A|-, i.e. the determinant of A lifted to S_max is
/// balanced. Uses the even-cycle criterion with a brute-force fallback for
/// n <= 8; throws SearchGuard if neither route concludes.
bool is_sign_singular(const Matrix<MaxPlus>& a);

}  // namespace tropica
