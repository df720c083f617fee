#pragma once

#include "lsft/linalg.hpp"
#include "lsft/rational.hpp"

#include <optional>
#include <vector>

namespace lsft {

// Small exact linear-feasibility solver (phase-I simplex, Bland's rule).
// Variables are free (unbounded sign); constraints are a.x >= b and a.x == b.
struct LinearProgram {
  int nvars = 0;
  std::vector<std::pair<Vec, Rat>> ge;  // a.x >= b
  std::vector<std::pair<Vec, Rat>> eq;  // a.x == b

  void add_ge(Vec a, Rat b) { ge.emplace_back(std::move(a), std::move(b)); }
  void add_eq(Vec a, Rat b) { eq.emplace_back(std::move(a), std::move(b)); }
};

// A feasible point, or nullopt. Deterministic for fixed input order.
std::optional<Vec> lp_feasible(const LinearProgram& lp);

}  // namespace lsft
