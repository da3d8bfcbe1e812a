#pragma once

#include <string>
#include <vector>

#include "gh/scalar.hpp"

namespace gh {

// Dense exact matrix. Products skip zero entries, which keeps the mostly sparse
// module operators cheap.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const;
  bool is_identity() const;
  size_t nonzeros() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  Matrix transpose() const;
  std::string str() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

// OpenMP kernel and its serial reference.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_serial(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_serial(const Matrix& a, const Matrix& b);
// (A ⊗ B)(m ⊗ n) = (-1)^{|B||m|} Am ⊗ Bn, with |m| read from the column parities of A.
Matrix kron_graded(const Matrix& a, const std::vector<int>& parity_a, const Matrix& b, int degree_b);

// Throws DegeneratePairing if singular.
Matrix inverse(const Matrix& m);
size_t rank(Matrix m);
// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Matrix& m);
// Basis of the null space as columns.
Matrix nullspace(const Matrix& m);

// exp of a nilpotent matrix; throws NotSmooth when the series does not terminate.
Matrix nilpotent_exp(const Matrix& x);

}  // namespace gh
