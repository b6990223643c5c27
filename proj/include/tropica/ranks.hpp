#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropica/matrix.hpp"
#include "tropica/maxplus.hpp"
#include "tropica/span.hpp"

namespace tropica {

enum class Axis { rows, cols };

/// Work limits for the exponential rank computations. Exceeding a guard
/// raises SizeGuard / SearchGuard from the direct entry points; rank_report
/// converts that into an Unknown value instead of aborting.
struct RankGuards {
    int witness_max_vectors = 8;          // gm/trop witness searches
    int witness_max_dim = 10;
    long weak_subset_budget = 1L << 12;   // mr_w / mc_w / sr subset sweeps
    long witness_solver_budget = 2'000'000;
    long sweep_pair_budget = 5'000'000;   // trop/det submatrix sweeps
    int factor_max_cells = 64;
    long factor_max_tight_sets = 10'000;
    int threads = 1;
};

/// Largest k with a tropically nonsingular k x k submatrix.
int trop_rank(const Matrix<MaxPlus>& a, const RankGuards& g = {});

/// Largest k with a k x k submatrix whose bideterminant halves differ.
int det_rank(const Matrix<MaxPlus>& a, const RankGuards& g = {});

/// Largest Gondran-Minoux independent row (column) family.
int gm_rank(const Matrix<MaxPlus>& a, Axis axis, const RankGuards& g = {});

/// Largest tropically independent row (column) family.
int trop_axis_rank(const Matrix<MaxPlus>& a, Axis axis, const RankGuards& g = {});

/// Largest weakly independent row (column) family.
int weak_axis_rank(const Matrix<MaxPlus>& a, Axis axis, const RankGuards& g = {});

/// Smallest k with A = B C through k intermediate dimensions, via
/// branch-and-bound set cover over maximal feasible tight cell sets.
int factor_rank(const Matrix<MaxPlus>& a, const RankGuards& g = {});

/// Maximum matching of the finite-support pattern.
int term_rank(const Matrix<MaxPlus>& a);

struct RankValue {
    std::optional<int> value;
    std::string note;  // guard message when unknown

    bool known() const { return value.has_value(); }
};

struct RankReport {
    RankValue trop, rk_det, mr_gm, mc_gm, mr_t, mc_t, mr_w, mc_w, r, c, sr, f, term;
    /// Violated order relations between known values (must stay empty).
    std::vector<std::string> violations;
};

/// All rank functions plus a validation pass over the known values:
/// trop <= rk_det <= mr_GM, mc_GM <= f <= r, c, term; r <= mr_w, c <= mc_w;
/// mr_t = mc_t = trop and sr = r.
RankReport rank_report(const Matrix<MaxPlus>& a, const RankGuards& g = {});

struct InequalityItem {
    std::string name;
    std::string detail;
    bool holds = false;        // for asserted inequalities
    bool observation = false;  // recorded comparison, not an inequality
};

struct InequalityReport {
    std::vector<InequalityItem> items;
    bool all_hold = true;  // over the non-observation items
};

enum class RankInequalityKind { sum, product, matrix_union };

/// Evaluates the rank-sum / rank-product / matrix-union inequalities on a
/// concrete pair, recording the documented row/column-rank non-inequalities
/// as observations.
InequalityReport rank_inequality_check(RankInequalityKind kind, const Matrix<MaxPlus>& a,
                                       const Matrix<MaxPlus>& b, const RankGuards& g = {});

struct AugmentationReport {
    bool rows_independent_checked = false;  // slow tier: exhaustive witness search
    bool rows_independent = false;
    bool basis_independent = false;
    int failed_augmentations = 0;  // out of 7
    bool axiom_violated = false;   // true when every augmentation fails
};

/// Replays the matroid-augmentation counterexample built on the 6 x 7
/// fixture: the 6 rows are GM-independent yet no 7th basis vector can be
/// added. The exhaustive independence certification runs only when
/// certify_rows is set.
AugmentationReport augmentation_counterexample(bool certify_rows = false);

}  // namespace tropica
