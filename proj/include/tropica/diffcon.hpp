#pragma once

#include <vector>

#include "tropica/rational.hpp"

namespace tropica {

/// Single difference constraint x_a - x_b <= c.
struct DiffConstraint {
    int a;
    int b;
    Rational c;
};

/// Feasibility problem for a conjunction of difference constraints over a
/// supported (finite) variable set; the witness searches enumerate supports
/// externally and record them here for reporting.
struct DiffSystem {
    int vars = 0;
    std::vector<DiffConstraint> constraints;
    std::vector<int> support;  // original indices of the supported variables
};

struct DiffResult {
    bool feasible = false;
    std::vector<Rational> potentials;  // one value per variable when feasible
    std::vector<int> negative_cycle;   // variable cycle certificate otherwise
};

/// Bellman-Ford feasibility: returns one potential assignment, or a negative
/// cycle certificate.
DiffResult diff_feasible(const DiffSystem& sys);

}  // namespace tropica
