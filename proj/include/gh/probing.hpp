#pragma once

#include <string>
#include <vector>

#include "gh/module.hpp"

namespace gh {

// Simple D(G)-modules over ℚ: induced from rational irreducibles of centralizers, one per
// (conjugacy class, irreducible) pair. Basis vectors carry their grading element.
std::vector<FiniteModule> finite_double_irreps(const DoubleAlgebra& D, const FiniteGroup& G);
// ℚG with e_h projecting onto h and g acting by conjugation.
FiniteModule finite_regular_module(const DoubleAlgebra& D, const FiniteGroup& G);

// Finite-dimensional modules over the static part of D(𝒜_G) (every letter except the point
// masses): the trivial module and cyclic quotients of induced modules. `with_dual_action`
// adds one module on which δ*_dR acts nontrivially.
std::vector<FiniteModule> unipotent_probing_modules(const DoubleAlgebra& D, const UnipotentGroup& G,
                                                    bool with_dual_action = true, size_t max_dim = 9);

}  // namespace gh
