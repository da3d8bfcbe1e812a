#include "gh/matrix.hpp"

#include <sstream>

namespace gh {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (r_ != c_) return false;
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

size_t Matrix::nonzeros() const {
  size_t k = 0;
  for (const auto& x : a_) k += x != 0;
  return k;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

namespace {

void mul_row(const Matrix& a, const Matrix& b, Matrix& out, size_t i) {
  for (size_t k = 0; k < a.cols(); ++k) {
    const Scalar& x = a(i, k);
    if (x == 0) continue;
    for (size_t j = 0; j < b.cols(); ++j)
      if (b(k, j) != 0) out(i, j) += x * b(k, j);
  }
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  long n = (long)a.rows();
#pragma omp parallel for schedule(dynamic, 4) if (n >= 32)
  for (long i = 0; i < n; ++i) mul_row(a, b, out, (size_t)i);
  return out;
}

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) mul_row(a, b, out, i);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  long n = (long)a.rows();
#pragma omp parallel for schedule(static) if (n >= 8)
  for (long i = 0; i < n; ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a((size_t)i, j);
      if (x == 0) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) out((size_t)i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

Matrix kron_serial(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Matrix kron_graded(const Matrix& a, const std::vector<int>& parity_a, const Matrix& b, int degree_b) {
  Matrix out = kron(a, b);
  if (!parity(degree_b)) return out;
  for (size_t j = 0; j < a.cols(); ++j) {
    if (!parity_a[j]) continue;
    for (size_t r = 0; r < out.rows(); ++r)
      for (size_t l = 0; l < b.cols(); ++l) {
        Scalar& x = out(r, j * b.cols() + l);
        if (x != 0) x = -x;
      }
  }
  return out;
}

std::vector<size_t> rref(Matrix& m) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Scalar inv = 1 / m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

size_t rank(Matrix m) { return rref(m).size(); }

Matrix inverse(const Matrix& m) {
  size_t n = m.rows();
  if (n != m.cols()) throw DegeneratePairing("inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DegeneratePairing("singular matrix");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix nullspace(const Matrix& m) {
  Matrix r = m;
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (size_t p : piv) is_piv[p] = true;
  std::vector<size_t> free;
  for (size_t j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix ns(m.cols(), free.size());
  for (size_t k = 0; k < free.size(); ++k) {
    ns(free[k], k) = 1;
    for (size_t i = 0; i < piv.size(); ++i) ns(piv[i], k) = -r(i, free[k]);
  }
  return ns;
}

Matrix nilpotent_exp(const Matrix& x) {
  size_t n = x.rows();
  Matrix out = Matrix::identity(n), term = Matrix::identity(n);
  for (size_t k = 1; k <= n + 1; ++k) {
    term = term * x;
    if (term.is_zero()) return out;
    term *= Scalar(1, k);
    out += term;
  }
  throw NotSmooth("exponential series does not terminate");
}

}  // namespace gh
