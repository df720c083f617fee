#pragma once

#include "lsft/rational.hpp"

#include <optional>
#include <vector>

namespace lsft {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major, rectangular

// Rank over the rationals by Gaussian elimination (exact).
int rank(Mat a);

// One solution of A x = b with free variables set to 0, or nullopt if the
// system is inconsistent.
std::optional<Vec> solve(Mat a, Vec b);

// Basis of the kernel of A (column vectors), exact.
std::vector<Vec> nullspace(Mat a);

}  // namespace lsft
