#pragma once

#include <optional>
#include <vector>

#include "tropica/diffcon.hpp"
#include "tropica/span.hpp"

namespace tropica {

/// Gondran-Minoux dependence witness: a partition (I, J) of the index set
/// and coefficients, not all bottom, with
///   sum_{i in I} lambda_i v_i = sum_{j in J} lambda_j v_j  coordinatewise.
struct GmWitness {
    std::vector<int> set_i;
    std::vector<int> set_j;
    std::vector<MaxPlus> lambda;
};

/// Tropical dependence witness: coefficients, not all bottom, such that in
/// every coordinate the maximum of lambda_i + v_i is attained at least twice
/// or every term is bottom.
struct TropWitness {
    std::vector<MaxPlus> lambda;
};

struct SearchLimits {
    int max_vectors = 8;
    int max_dim = 10;
    // Feasibility-solve budget for one search; exhausting it raises
    // SearchGuard. Witness-carrying families are typically found well below
    // it, so a small budget makes a fast tier that only defers full
    // independence certifications.
    long max_solver_calls = 2'000'000;
};

/// Exhaustive search over supports, partitions and per-coordinate witness
/// pairs, pruned by difference-constraint feasibility. Returns a verified
/// witness or nullopt (= the family is independent in the GM sense).
std::optional<GmWitness> gm_witness(const std::vector<Vec>& vectors, SearchLimits lim = {});

std::optional<TropWitness> trop_witness(const std::vector<Vec>& vectors, SearchLimits lim = {});

/// Direct re-verification against the definitions.
bool verify_gm_witness(const std::vector<Vec>& vectors, const GmWitness& w);
bool verify_trop_witness(const std::vector<Vec>& vectors, const TropWitness& w);

}  // namespace tropica
