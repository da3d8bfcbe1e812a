#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "gh/algebra.hpp"
#include "gh/report.hpp"
#include "gh/rng.hpp"
#include "gh/tensor.hpp"

namespace gh {

// Δ, ε, S, S⁻¹ on generators, extended (anti)multiplicatively with Koszul signs.
// Point letters are group-like.
class HopfStructure {
 public:
  explicit HopfStructure(PresentationPtr p);

  void set(Letter l, const Tensor& delta, const Scalar& eps, const Element& s, const Element& s_inv);
  void set(std::string_view name, const Tensor& delta, const Scalar& eps, const Element& s,
           const Element& s_inv) {
    set(p_->find(name), delta, eps, s, s_inv);
  }
  // Coproduct and counit only; the antipode is then solved from ∇(S⊗1)Δ = ηε.
  void set_coalgebra(Letter l, const Tensor& delta, const Scalar& eps);
  void set_coalgebra(std::string_view name, const Tensor& delta, const Scalar& eps) {
    set_coalgebra(p_->find(name), delta, eps);
  }
  // Solves S(l) = ε(l) − Σ' S(l₁)l₂ and S⁻¹(l) = ε(l) − Σ' ±l₂S⁻¹(l₁) for every letter without
  // an antipode, in dependency order. Throws MalformedDefinition when the recursion is circular.
  void derive_antipodes();
  bool complete() const;

  const Presentation& P() const { return *p_; }
  const PresentationPtr& ptr() const { return p_; }
  Slots slots(size_t k) const { return same_slots(*p_, k); }

  Tensor delta_letter(Letter l) const;
  Scalar eps_letter(Letter l) const;
  Element antipode_letter(Letter l, bool inverse) const;

  const Tensor& coproduct(const Word& w) const;
  Tensor coproduct(const Element& e) const;
  Scalar counit(const Word& w) const;
  Scalar counit(const Element& e) const;
  Element antipode(const Element& e) const;
  Element antipode_inv(const Element& e) const;

  // Slot-wise maps on tensors.
  Tensor apply_delta(const Tensor& t, size_t slot) const;
  Tensor apply_counit(const Tensor& t, size_t slot) const;
  Tensor apply_antipode(const Tensor& t, size_t slot) const;
  Element multiply(const Tensor& t) const;
  Tensor op(const Tensor& t) const { return swap_slots(slots(2), t, 0); }

 private:
  Element antipode_word(const Word& w, bool inverse) const;

  PresentationPtr p_;
  std::vector<Tensor> delta_;
  std::vector<Scalar> eps_;
  std::vector<Element> s_, s_inv_;
  std::vector<bool> set_, s_set_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, Tensor, WordHash> memo_;
};

using HopfPtr = std::shared_ptr<const HopfStructure>;

// Random normal words of length 1..max_len over the alphabet.
std::vector<Word> sample_words(const Presentation& p, const std::vector<Letter>& alphabet, Rng& rng,
                               int max_len, int count);
// Static letters plus a few interned sample points.
std::vector<Letter> sample_alphabet(const Presentation& p, Rng& rng, int points);

struct AxiomOptions {
  int degree_bound = 6;
  int samples = 200;
  uint64_t seed = 1;
  int points = 3;
};

// Coassociativity, counit, Δ and ε multiplicative (including on every rewrite rule),
// both antipode identities, S antimultiplicative, S⁻¹S = id = SS⁻¹.
Report check_hopf_axioms(const HopfStructure& h, const AxiomOptions& opt, const std::string& prefix,
                         const std::string& anchor);

}  // namespace gh
