#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gh/scalar.hpp"

namespace gh {

// Commutative polynomial in a fixed number of variables over Q.
class Poly {
 public:
  using Mono = std::vector<int>;

  Poly() = default;
  explicit Poly(size_t nvars) : n_(nvars) {}

  static Poly constant(size_t nvars, const Scalar& c);
  static Poly var(size_t nvars, size_t i);
  static Poly monomial(const Mono& m, const Scalar& c = 1);

  size_t nvars() const { return n_; }
  const std::map<Mono, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar coeff(const Mono& m) const;
  Scalar constant_term() const;
  void add_term(const Mono& m, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Scalar(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  Poly pow(int k) const;
  Poly derivative(size_t i) const;
  Poly substitute(const std::vector<Poly>& values) const;
  Scalar eval(const std::vector<Scalar>& point) const;
  template <class T>
  T eval_as(const std::vector<T>& point, const T& one) const;

  int degree() const;
  int weighted_degree(const std::vector<int>& w) const;
  bool homogeneous(const std::vector<int>& w) const;
  // Variables are placed at offset..offset+nvars()-1 of a ring with new_n variables.
  Poly embed(size_t new_n, size_t offset) const;
  // Drops all terms of weighted degree above the bound.
  Poly truncate(const std::vector<int>& w, int bound) const;

  std::string str(const std::vector<std::string>& names) const;
  static Poly parse(std::string_view text, const std::vector<std::string>& names);

 private:
  size_t n_ = 0;
  std::map<Mono, Scalar> t_;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix poly_identity(size_t n, size_t nvars);
PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b);
// Inverse of a matrix of the form 1 + N with N nilpotent.
PolyMatrix poly_unipotent_inverse(const PolyMatrix& a);
bool poly_matrix_equal(const PolyMatrix& a, const PolyMatrix& b);

template <class T>
T Poly::eval_as(const std::vector<T>& point, const T& one) const {
  T acc = one * Scalar(0);
  for (const auto& [m, c] : t_) {
    T term = one * c;
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) term = term * point[i];
    acc = acc + term;
  }
  return acc;
}

}  // namespace gh
