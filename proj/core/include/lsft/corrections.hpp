#pragma once

#include "lsft/algebra.hpp"
#include "lsft/diagram.hpp"

#include <vector>

namespace lsft {

// Linking number l_i of the knot with the push-off of the capping path of
// chord i (the embedded path from the chord start to its end avoiding the
// base point, shifted by (-1)^{|q_i|} J along itself and closed up). It is
// computed from the traversal order alone; the defining half-sum is always
// an integer. 1-based; entry 0 unused.
std::vector<int> capping_linking(const Diagram& d);

// First-order base-point correction d_f(q_i): a combination of ħ(q_i ⊗ 1)
// and ħ(1 ⊗ q_i) with coefficients from l_i and the endpoint order.
Elem d_f_chord(const Diagram& d, int i);

// d_f on the base-point letters:
//   d_f(t⁺) = (tb+1) ħ(t⁺⊗1),   d_f(t⁻) = -tb ħ(t⁻⊗1) - ħ(1⊗t⁻).
Elem d_f_base(const Diagram& d, GenId g);

// Second-order correction d_f(q_i, q_j) (i = j allowed).
Tensor d_f_pair(const Diagram& d, int i, int j);

}  // namespace lsft
