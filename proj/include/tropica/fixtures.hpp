#pragma once

#include <string>
#include <vector>

#include "tropica/matrix.hpp"
#include "tropica/maxplus.hpp"

namespace tropica {

/// Built-in matrix catalogue. Names:
///   X, Y            the 4x3 / 5x3 row-rank pair
///   D3 .. D9        diagonal -1, off-diagonal 0
///   F               the 6x7 matrix separating mr_GM from mc_GM
///   G               the 13x13 block matrix diag(F, F^t)
///   mrw3 .. mrw8    the (n+3) x 3 weak-rank family, x_i = i
///   exd1d2          columns [i, 0, -i], i = 1..4
///   sumA sumB       row-rank sum pair
///   prodA prodB     row-rank product pair
///   unionA unionB   column-rank union pair
Matrix<MaxPlus> fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace tropica
