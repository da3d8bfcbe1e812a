#pragma once

#include <string>

#include "gh/probing.hpp"

namespace gh {

// ⟨f_i, w_j⟩ = δ_ij on every block of B; with `perturb` one dual element is doubled.
Report verify_dual_basis(const DoubleAlgebra& D, const DualBasisTable& B, const std::string& prefix,
                         bool perturb = false);
// Pairing of δ-words in D(𝒜_G): ⟨u·δ_dR, v·δ*_dR⟩ = (−1)^{|v|}⟨u, v⟩ on dual words u, v.
Report verify_delta_pairing_sign(const DoubleAlgebra& D, int max_weight, const std::string& prefix);

// D(𝒪_G) on all simple modules: intertwining on pairs, both cocycle identities and Yang–Baxter on
// triples, and c = τ∘R against (m, n) ↦ (g·n)⊗m for m of grading g. `corrupt` doubles one term of R.
Report verify_finite_braiding(const FiniteGroup& G, const std::string& prefix, bool corrupt = false);

// D(𝒜_G) on the probing corpus at weight bound N: R = R_G∘exp(−Σcⁱ⊗b_i)∘exp(−δ_dR⊗δ*_dR) and
// intertwining on pairs, cocycles and Yang–Baxter for R and R_G on triples of dimension ≤ max_triple,
// R = R_G on modules where only 𝒪_G acts. `corrupt` drops the δ_dR⊗δ*_dR factor.
Report verify_unipotent_braiding(const UnipotentGroup& G, int N, const std::string& prefix, bool corrupt = false,
                                 size_t max_triple = 128);

// θ = Σ(−1)^{|f|} f·S(w): θ_T = 1, naturality, Δ(θ) = (R²¹R)⁻¹(θ⊗θ) on pairs, and θ = g⁻¹ on the
// part of grading g. `corrupt` negates θ.
Report verify_finite_ribbon(const FiniteGroup& G, const std::string& prefix, bool corrupt = false);
// The same identities on the probing modules of D(𝒜_G) where δ*_dR acts by zero, i.e. A_{G/G_ad}-modules.
Report verify_unipotent_ribbon(const UnipotentGroup& G, int N, const std::string& prefix, bool corrupt = false);

// F = R_G^{21,−1}: Δ^F(a) = FΔ(a)F⁻¹ against D(H_G) on every generator, the cocycle
// F₁₂F_{(12)3} = F₂₃F_{1(23)} on corpus triples, R_F = F₂₁RF⁻¹ = exp(−Σcⁱ⊗b_i)exp(−δ_dR⊗δ*_dR)R_G²¹
// on pairs, and the relations of D(H_G) under the generator dictionary. `corrupt` skips the twist
// and puts R_G in place of R_G²¹.
Report verify_twist_equivalence(const UnipotentGroup& G, int N, const std::string& prefix, bool corrupt = false,
                                size_t max_triple = 128);

}  // namespace gh
