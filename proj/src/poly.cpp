#include "gh/poly.hpp"

#include <cctype>
#include <sstream>

namespace gh {

Poly Poly::constant(size_t nvars, const Scalar& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::var(size_t nvars, size_t i) {
  Mono m(nvars, 0);
  m[i] = 1;
  return monomial(m);
}

Poly Poly::monomial(const Mono& m, const Scalar& c) {
  Poly p(m.size());
  p.add_term(m, c);
  return p;
}

Scalar Poly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Scalar(0) : it->second;
}

Scalar Poly::constant_term() const { return coeff(Mono(n_, 0)); }

void Poly::add_term(const Mono& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0 && t_.empty()) n_ = o.n_;
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ == 0 && t_.empty()) n_ = o.n_;
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.n_, b.n_));
  Poly::Mono m(r.n_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      for (size_t i = 0; i < r.n_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::pow(int k) const {
  Poly r = constant(n_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::derivative(size_t i) const {
  Poly r(n_);
  for (const auto& [m, c] : t_) {
    if (m[i] == 0) continue;
    Mono d = m;
    --d[i];
    r.add_term(d, c * m[i]);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
  size_t out_n = values.empty() ? 0 : values[0].nvars();
  Poly r(out_n);
  std::vector<std::vector<Poly>> powers(n_);
  for (const auto& [m, c] : t_) {
    Poly term = constant(out_n, c);
    for (size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(out_n, 1));
      while ((int)pw.size() <= m[i]) pw.push_back(pw.back() * values[i]);
      term = term * pw[m[i]];
    }
    r += term;
  }
  return r;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  Scalar acc = 0;
  for (const auto& [m, c] : t_) {
    Scalar term = c;
    for (size_t i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

int Poly::weighted_degree(const std::vector<int>& w) const {
  int d = -1;
  for (const auto& [m, c] : t_) {
    int s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += m[i] * w[i];
    d = std::max(d, s);
  }
  return d;
}

bool Poly::homogeneous(const std::vector<int>& w) const {
  int d = -1;
  for (const auto& [m, c] : t_) {
    int s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += m[i] * w[i];
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Poly Poly::embed(size_t new_n, size_t offset) const {
  Poly r(new_n);
  for (const auto& [m, c] : t_) {
    Mono e(new_n, 0);
    for (size_t i = 0; i < m.size(); ++i) e[offset + i] = m[i];
    r.add_term(e, c);
  }
  return r;
}

Poly Poly::truncate(const std::vector<int>& w, int bound) const {
  Poly r(n_);
  for (const auto& [m, c] : t_) {
    int s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += m[i] * w[i];
    if (s <= bound) r.add_term(m, c);
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar a = abs(c);
    bool unit = true;
    for (int e : m) unit = unit && e == 0;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (a != 1 || unit) {
      os << a.get_str();
      wrote = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  std::string_view s;
  size_t pos = 0;
  const std::vector<std::string>& names;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char ch) {
    skip();
    if (pos < s.size() && s[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw MalformedDefinition("polynomial '" + std::string(s) + "': " + what);
  }
  Poly expr() {
    Poly r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  Poly term() {
    Poly r = unary();
    for (;;) {
      if (eat('*'))
        r = r * unary();
      else if (eat('/')) {
        Poly d = unary();
        if (d.degree() > 0 || d.is_zero()) fail("division by non-constant");
        r *= Scalar(1) / d.constant_term();
      } else
        return r;
    }
  }
  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Poly power() {
    Poly b = atom();
    if (eat('^')) {
      skip();
      size_t st = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (st == pos) fail("exponent expected");
      b = b.pow(std::stoi(std::string(s.substr(st, pos - st))));
    }
    return b;
  }
  Poly atom() {
    skip();
    size_t n = names.size();
    if (eat('(')) {
      Poly r = expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      size_t st = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      return Poly::constant(n, Scalar(std::string(s.substr(st, pos - st))));
    }
    size_t st = pos;
    while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
    if (st == pos) fail("unexpected character at " + std::to_string(pos));
    std::string id(s.substr(st, pos - st));
    for (size_t i = 0; i < n; ++i)
      if (names[i] == id) return Poly::var(n, i);
    fail("unknown variable '" + id + "'");
  }
};

}  // namespace

Poly Poly::parse(std::string_view text, const std::vector<std::string>& names) {
  PolyParser p{text, 0, names};
  Poly r = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  if (r.nvars() == 0) r = Poly(names.size());
  return r;
}

PolyMatrix poly_identity(size_t n, size_t nvars) {
  PolyMatrix m(n, std::vector<Poly>(n, Poly(nvars)));
  for (size_t i = 0; i < n; ++i) m[i][i] = Poly::constant(nvars, 1);
  return m;
}

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  size_t nv = r && k ? a[0][0].nvars() : 0;
  PolyMatrix m(r, std::vector<Poly>(c, Poly(nv)));
  for (size_t i = 0; i < r; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < c; ++j)
        if (!b[l][j].is_zero()) m[i][j] += a[i][l] * b[l][j];
    }
  return m;
}

PolyMatrix poly_unipotent_inverse(const PolyMatrix& a) {
  size_t n = a.size();
  size_t nv = n ? a[0][0].nvars() : 0;
  PolyMatrix nil = a;
  for (size_t i = 0; i < n; ++i) nil[i][i] -= Poly::constant(nv, 1);
  PolyMatrix inv = poly_identity(n, nv), pw = poly_identity(n, nv);
  for (size_t k = 1; k <= n; ++k) {
    pw = poly_matmul(pw, nil);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (k % 2)
          inv[i][j] -= pw[i][j];
        else
          inv[i][j] += pw[i][j];
  }
  if (!poly_matrix_equal(poly_matmul(inv, a), poly_identity(n, nv)))
    throw GroupAxiomViolation("matrix is not unipotent");
  return inv;
}

bool poly_matrix_equal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] - b[i][j]).is_zero()) return false;
  return true;
}

}  // namespace gh
