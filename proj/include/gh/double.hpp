#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gh/algebras.hpp"
#include "gh/pairing.hpp"

namespace gh {

// D(H) = H ⊗ H*^cop. Letters: the static letters of H, then those of H* (shifted by |H|);
// point letters are shared with whichever factor carries them.
struct DoubleAlgebra {
  std::string name;
  PresentationPtr P;
  HopfPtr hopf;
  HopfPtr H, Hs;
  std::shared_ptr<const HopfPairing> pairing;
  bool points_on_dual = false;

  Letter from_H(Letter l) const { return l; }
  Letter from_Hs(Letter l) const { return Presentation::is_point(l) ? l : l + (Letter)H->P().size(); }
  bool is_dual_letter(Letter l) const {
    return Presentation::is_point(l) ? points_on_dual : l >= (Letter)H->P().size();
  }
  Element embed(const Element& e, bool dual) const;
  Tensor embed(const Tensor& t, bool dual) const;
  Element gen(std::string_view name) const { return P->gen_element(name); }
};

// α·a = Σ (−1)^ξ ⟨S⁻¹a⁽¹⁾, α⁽¹⁾⟩ a⁽²⁾α⁽²⁾ ⟨a⁽³⁾, α⁽³⁾⟩, ξ the Koszul sign of moving each a⁽ⁱ⁾ left past
// α⁽ⁱ⁾α⁽ⁱ⁺¹⁾…. Sweedler indices of α refer to the coproduct of H*^cop. The result is an element of D.
Element double_product(const HopfPairing& pairing, const Word& alpha, const Word& a, const DoubleAlgebra& D);

DoubleAlgebra build_double(const std::string& name, std::shared_ptr<const HopfPairing> pairing);

// Dist(T[1]G) = Dist(G) ⋉ ∧𝔤[1], with δ*_dR when `with_delta` (the dual of 𝒜_G, resp. Ω_G).
AlgebraInstance build_dist_T1G(const UnipotentGroup& G, bool with_delta);
// Dual of H_G: 𝒪_G ⊗ ∧𝔤[1] ⊗ ∧δ* with [b, f] = −ξ^L_b(f)δ*.
AlgebraInstance build_H_G_dual(const UnipotentGroup& G);
// Functions on a finite group with idempotent basis e_h (h ≠ e), and the group algebra.
AlgebraInstance build_finite_functions(const FiniteGroup& G);
AlgebraInstance build_group_algebra(const FiniteGroup& G);

std::shared_ptr<const HopfPairing> pairing_forms(const AlgebraInstance& forms, const AlgebraInstance& dist,
                                                 const UnipotentGroup& G, int bound);
std::shared_ptr<const HopfPairing> pairing_H_G(const AlgebraInstance& hg, const AlgebraInstance& dual,
                                               const UnipotentGroup& G, int bound);
std::shared_ptr<const HopfPairing> pairing_finite(const AlgebraInstance& fun, const AlgebraInstance& grp,
                                                  const FiniteGroup& G);

DoubleAlgebra build_double_AG(const UnipotentGroup& G, int bound = 8);
DoubleAlgebra build_double_OmegaG(const UnipotentGroup& G, int bound = 8);
DoubleAlgebra build_double_HG(const UnipotentGroup& G, int bound = 8);
DoubleAlgebra build_double_OG(const FiniteGroup& G);

// Hopf-subalgebra property of H → D(H) and H*^cop → D(H), cross relations against the double
// product formula recomputed on random words, and the Hopf axioms of D(H).
Report check_double(const DoubleAlgebra& D, const AxiomOptions& opt, const std::string& prefix);

}  // namespace gh
