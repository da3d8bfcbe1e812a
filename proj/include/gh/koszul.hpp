#pragma once

#include <string>

#include "gh/algebras.hpp"

namespace gh {

enum class KoszulCorruption { None, FrameCoefficient, HbarSign };

// DR_{ℏ,G} = D_G^ℏ ⊗ 𝒜_G with d = Σ (ξ^R_i)_L⊗(cⁱ)_L + ℏ_L⊗(δ_dR)_L. Checks that d∘d vanishes as
// an element of the graded tensor product and on every basis tensor of word length ≤ bound.
Report check_DR_hbar(const UnipotentGroup& G, int bound, const std::string& prefix,
                     KoszulCorruption corrupt = KoszulCorruption::None);

// DR_{𝔥,K} = U_ℏ(𝔨 ⊕ 𝔥) ⊗ CE(𝔥) with d = Σ (x_j)_R⊗(c^j)_L − ℏ_R⊗(δ_CE)_L, x_j running over 𝔥.
Report check_DR_hK(const LieData& k, const LieData& h, int bound, const std::string& prefix,
                   KoszulCorruption corrupt = KoszulCorruption::None);

}  // namespace gh
