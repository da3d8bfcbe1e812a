#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gh/group.hpp"
#include "gh/report.hpp"
#include "gh/scalar.hpp"

namespace gh {

struct LieData {
  std::string id;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::vector<std::vector<Scalar>>> f;  // [e_i, e_j] = Σ_k f[k][i][j] e_k

  size_t dim() const { return names.size(); }
  bool abelian() const;
};

LieData lie_from_group(const UnipotentGroup& g);
// Built-in Lie algebras (sl2, ab2) and the Lie algebras of the unipotent corpus groups.
LieData load_lie(const std::string& id);
std::vector<std::string> lie_ids();
LieData direct_sum(const LieData& a, const LieData& b, const std::string& suffix_a, const std::string& suffix_b);
// First structure-constant perturbation (in a fixed search order) that breaks Jacobi.
std::optional<LieData> corrupt_jacobi(const LieData& l);

// Description of the first Jacobi violation, if any.
std::optional<std::string> jacobi_defect(const LieData& l);
Report check_jacobi(const LieData& l, const std::string& prefix);

// The triple (𝔤 ⊕ 𝔤*[−1], 𝔤, 𝔤*[−1]) with κ(x_i, c^j) = δ_ij: κ invariance, Lagrangian
// subalgebras, co-Jacobi and cocycle conditions for the cobrackets, and δ_𝔥 = [𝐫, Δ].
// `kappa_scale` rescales κ on one basis pair to build the negative control.
Report verify_1shifted(const LieData& l, const std::string& prefix, const Scalar& kappa_scale = 1);

}  // namespace gh
