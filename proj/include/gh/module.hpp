#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gh/double.hpp"
#include "gh/matrix.hpp"

namespace gh {

// Finite-dimensional graded module: one matrix per static letter and, when the algebra has
// point letters, a callback for them. Finite Yetter–Drinfeld modules also record the group
// element labelling each basis vector.
struct FiniteModule {
  std::string name;
  PresentationPtr P;
  std::vector<int> parity;
  std::vector<int> weight;
  std::vector<std::string> labels;
  std::vector<Matrix> gens;
  std::function<Matrix(const Point&)> point_action;
  std::vector<int> grading;

  size_t dim() const { return parity.size(); }
  bool has_points() const { return (bool)point_action; }
  int weight_range() const;
  Matrix letter(Letter l) const;
  Matrix act(const Word& w) const;
  Matrix act(const Element& e) const;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

// Every rewrite rule holds as a matrix identity, letters are homogeneous for parity and weight,
// and sampled point letters multiply as group elements and satisfy the dynamic rules.
Report check_module(const FiniteModule& M, const AxiomOptions& opt, const std::string& prefix,
                    const std::string& anchor);

FiniteModule trivial_module(PresentationPtr P, const HopfStructure& h);
// M⊗N through Δ with Koszul signs.
FiniteModule tensor_module(const HopfStructure& h, const FiniteModule& M, const FiniteModule& N);
std::vector<int> tensor_parity(const std::vector<int>& a, const std::vector<int>& b);
// m⊗n ↦ (−1)^{|m||n|} n⊗m.
Matrix flip(const FiniteModule& M, const FiniteModule& N);
// (a₁⊗…⊗a_k)(m₁⊗…⊗m_k) = (−1)^{Σ_{i<j}|a_j||m_i|} a₁m₁⊗…⊗a_km_k for homogeneous a_i.
Matrix act_tensor(const std::vector<const FiniteModule*>& mods, const std::vector<Element>& factors);
Matrix identity_on(const std::vector<const FiniteModule*>& mods);

// Cyclic quotients of the modules induced from the counit of one factor of a double.
// Left: D ⊗_{H*} k on H-words. Right: k ⊗_H D on H*-words, made a left module through
// a ▷ v = (−1)^{|a||v|} v ◁ S(a). Words with |weight| above `window` and the orbit of `kill`
// are divided out.
struct CyclicSpec {
  bool right = false;
  std::vector<Element> kill;
  int window = 2;
};
FiniteModule cyclic_module(const DoubleAlgebra& D, const std::string& name, const CyclicSpec& spec);

// Paired bases {f_i} ⊂ H, {f^i} ⊂ H* with ⟨f_i, f^j⟩ = δ_i^j, one block per (weight, degree).
struct DualBasisTable {
  struct Entry {
    Element f, w;  // D letters
    int weight = 0, degree = 0;
  };
  std::vector<Entry> entries;
  size_t blocks = 0;
};
using LetterFilter = std::function<bool(Letter)>;
// Normal words over the selected static letters of H and H*, |weight| ≤ max_weight.
DualBasisTable build_dual_basis(const DoubleAlgebra& D, int max_weight, const LetterFilter& h_letters = {},
                                const LetterFilter& hs_letters = {});
// 𝒪_G against the group algebra of a finite group.
DualBasisTable build_dual_basis_finite(const DoubleAlgebra& D, const FiniteGroup& G);
// Normal words of a presentation over the selected letters with |weight| ≤ bound.
std::vector<Word> enumerate_words(const Presentation& P, const std::vector<Letter>& letters, int bound);

// Σ (−1)^{|f_i|} f_i ⊗ f^i with f_i in slot i and f^i in slot j, acting on ⊗mods.
Matrix r_slots(const DualBasisTable& B, const std::vector<const FiniteModule*>& mods, size_t i, size_t j);
inline Matrix r_matrix(const DualBasisTable& B, const FiniteModule& M, const FiniteModule& N) {
  return r_slots(B, {&M, &N}, 0, 1);
}
// ∇(1⊗S)(R) acting on M.
Matrix theta_matrix(const DualBasisTable& B, const HopfStructure& h, const FiniteModule& M);

}  // namespace gh
