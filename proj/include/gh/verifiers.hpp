#pragma once

#include <string>

#include "gh/double.hpp"
#include "gh/module.hpp"

namespace gh {

// Sign attached to b when D(𝒜_G)/(δ*_dR) is compared with A_{G/G_ad}; +1 is the negative control.
Report verify_central_extension(const UnipotentGroup& G, const AxiomOptions& opt, const std::string& prefix,
                                int b_sign = -1);

// In A_{G/G_ad}: [Δb_i, Δc^j] = Δ{b_i, c^j} = m*{b_i, c^j}, and the same polynomial in (g₁, g₂) equals
// δ_ij − (Ad_{g₂⁻¹}Ad_{g₁⁻¹})_{ji} computed from the adjoint matrices alone.
Report verify_bc_coproduct(const UnipotentGroup& G, const std::string& prefix);

// {b_i, c^j} in A_{G/G_ad} and in D(𝒜_G)/(δ*_dR) (with b ↦ −b) against the symbolic Hessian of
// W = ((1 − g⁻¹)b, c). `perturb` adds 1 to one Hessian entry (negative control).
Report verify_clifford(const UnipotentGroup& G, const AxiomOptions& opt, const std::string& prefix,
                       bool perturb = false);

}  // namespace gh
