#pragma once

#include <map>
#include <string>
#include <vector>

#include "gh/algebra.hpp"

namespace gh {

using TKey = std::vector<Word>;
using Slots = std::vector<const Presentation*>;

// Finite sum of k-tuples of normal words.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(size_t arity) : k_(arity) {}

  static Tensor pure(const std::vector<Element>& factors);

  size_t arity() const { return k_; }
  void add(const TKey& key, const Scalar& c);
  const std::map<TKey, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  auto begin() const { return t_.begin(); }
  auto end() const { return t_.end(); }

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.k_ == b.k_ && a.t_ == b.t_; }

 private:
  size_t k_ = 0;
  std::map<TKey, Scalar> t_;
};

Slots same_slots(const Presentation& p, size_t k);

// Normalizes every slot.
Tensor tensor_normalize(const Slots& s, const Tensor& t);
// (a_1⊗…⊗a_k)(b_1⊗…⊗b_k) = ± a_1b_1⊗…⊗a_kb_k, the sign collected by moving each b_j past a_i, i > j.
Tensor tensor_mul(const Slots& s, const Tensor& a, const Tensor& b);
Tensor graded_commutator(const Slots& s, const Tensor& a, const Tensor& b);
// Koszul transposition of slots i and i+1.
Tensor swap_slots(const Slots& s, const Tensor& t, size_t i);
std::string render(const Slots& s, const Tensor& t);
int tensor_degree(const Slots& s, const Tensor& t);

}  // namespace gh
