#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gh/group.hpp"
#include "gh/hopf.hpp"
#include "gh/lie.hpp"

namespace gh {

struct AlgebraInstance {
  std::string tag;         // CE, H_lie, H_G, Omega_G, A_G, A_GGad, Cl, Weyl_hbar, U_hbar
  std::string name;        // e.g. "A_G(heis3)"
  std::string provenance;  // group or Lie data id
  PresentationPtr P;
  HopfPtr hopf;  // null for module-algebra layers
};

// Letter names. Coordinates keep their names; e_k, c^k, b_k for 𝔤, 𝔤*[−1], 𝔤[1].
inline std::string lie_letter(const std::string& k) { return "e_" + k; }
inline std::string form_letter(const std::string& k) { return "c^" + k; }
inline std::string odd_vector_letter(const std::string& k) { return "b_" + k; }

// Polynomial in the coordinate letters (one letter per variable, in increasing letter order, so
// monomials come out as normal words when the letters commute).
Element poly_element(const Presentation& P, const Poly& p, const std::vector<Letter>& vars);
// Polynomial in 2n variables as a 2-tensor: first n variables in slot 1.
Tensor poly_tensor(const Presentation& P, const Poly& p, const std::vector<Letter>& vars);
// Inverse of poly_element on words that only contain the given letters.
Poly element_poly(const Element& e, const std::vector<Letter>& vars);

struct CEOptions {
  bool unchecked = false;  // skip the Jacobi precondition (negative controls)
};
AlgebraInstance build_CE(const LieData& g, const CEOptions& opt = {});

struct HLieOptions {
  bool zero_r = false;             // Δ(δ) without 𝐫 (negative control)
  bool keep_delta_square = false;  // do not impose δ² = 0
  bool unchecked = false;
};
AlgebraInstance build_H_lie(const LieData& g, const HLieOptions& opt = {});

AlgebraInstance build_H_G(const GroupModel& G);
AlgebraInstance build_Omega_G(const UnipotentGroup& G);
AlgebraInstance build_A_G(const UnipotentGroup& G);
AlgebraInstance build_A_GGad(const UnipotentGroup& G);

// Symbolic Hessian ∂²W/∂b_i∂c^j of W = ((1 − g⁻¹)b, c), as polynomials on G.
std::vector<std::vector<Poly>> clifford_hessian(const UnipotentGroup& G);
// 𝒪_G ⊗ ∧(b, c) with {b_i, c^j} = ∂²W/∂b_i∂c^j.
AlgebraInstance build_Clifford(const UnipotentGroup& G);

// Rees Weyl algebra on the coordinates: [∂_k, x_l] = ℏδ_kl, ℏ central.
AlgebraInstance build_Weyl_hbar(const UnipotentGroup& G);
// Rees algebra U_ℏ(𝔤): x_j x_i = x_i x_j + ℏ Σ f^k_{ji} x_k.
AlgebraInstance build_U_hbar(const LieData& g);

struct AlgebraInfo {
  std::string tag, description, anchor;
};
const std::vector<AlgebraInfo>& algebra_registry();
// Builds a registered algebra over a corpus group (or built-in Lie algebra for CE / H_lie).
AlgebraInstance build_algebra(const std::string& tag, const std::string& group);

}  // namespace gh
