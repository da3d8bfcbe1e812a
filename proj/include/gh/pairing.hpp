#pragma once

#include <functional>
#include <shared_mutex>
#include <unordered_map>

#include "gh/hopf.hpp"

namespace gh {

// ⟨H, H'⟩ determined by its values on pairs of letters, extended through
// ⟨ab, α⟩ = ⟨a⊗b, Δ'α⟩ and ⟨a, αβ⟩ = ⟨Δa, α⊗β⟩ with ⟨a⊗b, α⊗β⟩ = (−1)^{|b||α|}⟨a,α⟩⟨b,β⟩.
class HopfPairing {
 public:
  using LetterPairing = std::function<Scalar(Letter, Letter)>;
  enum class Path { SplitLeft, SplitRight };

  HopfPairing(HopfPtr left, HopfPtr right, LetterPairing values, int bound);

  const HopfStructure& left() const { return *l_; }
  const HopfStructure& right() const { return *r_; }
  const HopfPtr& left_ptr() const { return l_; }
  const HopfPtr& right_ptr() const { return r_; }
  int bound() const { return bound_; }

  // Raw words need not be normal; splitting is done letter by letter.
  Scalar eval(const Word& a, const Word& alpha, Path path = Path::SplitLeft) const;
  Scalar eval(const Element& a, const Element& alpha, Path path = Path::SplitLeft) const;
  Scalar eval_letters(Letter a, Letter alpha) const { return values_(a, alpha); }

 private:
  HopfPtr l_, r_;
  LetterPairing values_;
  int bound_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, Scalar, WordHash> memo_[2];
};

// Dualization identities on random words, relation compatibility on both sides,
// ⟨Sa, α⟩ = ⟨a, S'α⟩ and agreement of the two evaluation paths.
Report check_pairing(const HopfPairing& hp, const AxiomOptions& opt, const std::string& prefix,
                     const std::string& anchor);

}  // namespace gh
