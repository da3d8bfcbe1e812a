#include "gh/lie.hpp"

#include <array>
#include <map>
#include <sstream>

#include "gh/matrix.hpp"

namespace gh {

namespace {

using Tensor3 = std::vector<std::vector<std::vector<Scalar>>>;

Tensor3 zero3(size_t n) {
  return Tensor3(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
}

std::string vec_str(const std::vector<Scalar>& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(v[i]) << "*" << names[i];
  }
  return first ? "0" : os.str();
}

}  // namespace

bool LieData::abelian() const {
  for (const auto& a : f)
    for (const auto& b : a)
      for (const auto& s : b)
        if (s != 0) return false;
  return true;
}

LieData lie_from_group(const UnipotentGroup& g) {
  return {g.id, g.coords, g.weights, g.f};
}

static LieData sl2() {
  LieData l{"sl2", {"e", "f", "h"}, {0, 0, 0}, zero3(3)};
  auto set = [&](size_t i, size_t j, size_t k, int v) {
    l.f[k][i][j] = v;
    l.f[k][j][i] = -v;
  };
  set(2, 0, 0, 2);   // [h,e] = 2e
  set(2, 1, 1, -2);  // [h,f] = -2f
  set(0, 1, 2, 1);   // [e,f] = h
  return l;
}

LieData load_lie(const std::string& id) {
  if (id == "sl2") return sl2();
  if (id == "ab2") return {"ab2", {"a", "b"}, {1, 1}, zero3(2)};
  GroupModel g = load_group(id);
  if (g.is_unipotent()) return lie_from_group(*g.unipotent);
  return {id, {}, {}, {}};
}

std::vector<std::string> lie_ids() {
  std::vector<std::string> ids{"ab2", "sl2"};
  for (const auto& id : corpus_ids())
    if (load_group(id).is_unipotent()) ids.push_back(id);
  return ids;
}

LieData direct_sum(const LieData& a, const LieData& b, const std::string& suffix_a, const std::string& suffix_b) {
  size_t na = a.dim(), n = na + b.dim();
  LieData s{a.id + "+" + b.id, {}, {}, zero3(n)};
  for (const auto& x : a.names) s.names.push_back(x + suffix_a);
  for (const auto& x : b.names) s.names.push_back(x + suffix_b);
  s.weights = a.weights;
  s.weights.insert(s.weights.end(), b.weights.begin(), b.weights.end());
  for (size_t k = 0; k < na; ++k)
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < na; ++j) s.f[k][i][j] = a.f[k][i][j];
  for (size_t k = 0; k < b.dim(); ++k)
    for (size_t i = 0; i < b.dim(); ++i)
      for (size_t j = 0; j < b.dim(); ++j) s.f[na + k][na + i][na + j] = b.f[k][i][j];
  return s;
}

std::optional<std::string> jacobi_defect(const LieData& l) {
  size_t n = l.dim();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        // [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
        std::vector<Scalar> out(n, Scalar(0));
        auto acc = [&](size_t x, size_t y, size_t z) {
          for (size_t m = 0; m < n; ++m)
            if (l.f[m][y][z] != 0)
              for (size_t k = 0; k < n; ++k) out[k] += l.f[m][y][z] * l.f[k][x][m];
        };
        acc(a, b, c);
        acc(b, c, a);
        acc(c, a, b);
        for (const auto& s : out)
          if (s != 0)
            return "J(" + l.names[a] + "," + l.names[b] + "," + l.names[c] + ") = " + vec_str(out, l.names);
      }
  return std::nullopt;
}

std::optional<LieData> corrupt_jacobi(const LieData& l) {
  size_t n = l.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        LieData c = l;
        c.id = l.id + "~corrupted";
        c.f[k][i][j] += 1;
        c.f[k][j][i] -= 1;
        if (jacobi_defect(c)) return c;
      }
  return std::nullopt;
}

Report check_jacobi(const LieData& l, const std::string& prefix) {
  Report r;
  CheckRecord c;
  c.id = prefix + "/jacobi";
  c.identity = "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0 on all basis triples";
  c.inputs = l.id;
  c.anchor = "Lie bracket";
  c.expected = "0";
  auto d = jacobi_defect(l);
  c.pass = !d;
  c.got = d ? *d : "0";
  r.add(c);
  return r;
}

// 𝔥 = 𝔞 ⊕ 𝔞*[−1] with basis x_0..x_{n−1} (degree 0), c^0..c^{n−1} (degree 1).
namespace {

struct Shifted {
  size_t n;
  std::vector<std::string> names;
  std::vector<int> deg;
  std::vector<std::vector<std::vector<Scalar>>> br;  // br[a][b] = [a,b] as vector
  Matrix kappa;
  size_t dim() const { return 2 * n; }
};

Shifted make_shifted(const LieData& l, const Scalar& kappa_scale) {
  Shifted h;
  h.n = l.dim();
  size_t N = 2 * h.n;
  for (const auto& s : l.names) h.names.push_back("x_" + s);
  for (const auto& s : l.names) h.names.push_back("c^" + s);
  h.deg.assign(N, 0);
  for (size_t i = h.n; i < N; ++i) h.deg[i] = 1;
  h.br.assign(N, std::vector<std::vector<Scalar>>(N, std::vector<Scalar>(N, Scalar(0))));
  for (size_t i = 0; i < h.n; ++i)
    for (size_t j = 0; j < h.n; ++j)
      for (size_t k = 0; k < h.n; ++k) {
        h.br[i][j][k] += l.f[k][i][j];  // [x_i, x_j] = f^k_{ij} x_k
        // [x_i, c^j] = Σ_k f^j_{ki} c^k, [c^j, x_i] = −[x_i, c^j]
        h.br[i][h.n + j][h.n + k] += l.f[j][k][i];
        h.br[h.n + j][i][h.n + k] -= l.f[j][k][i];
      }
  h.kappa = Matrix(N, N);
  size_t p = 0;
  bool found = false;
  for (size_t k = 0; k < h.n && !found; ++k)
    for (size_t i = 0; i < h.n && !found; ++i)
      for (size_t j = 0; j < h.n && !found; ++j)
        if (l.f[k][i][j] != 0) p = k, found = true;
  for (size_t i = 0; i < h.n; ++i) {
    Scalar v = i == p ? kappa_scale : Scalar(1);
    h.kappa(i, h.n + i) = v;
    h.kappa(h.n + i, i) = v;
  }
  return h;
}

using Vec = std::vector<Scalar>;
using Two = std::vector<std::vector<Scalar>>;

Two zero2(size_t N) { return Two(N, Vec(N, Scalar(0))); }

// [u⊗v, y⊗1 + 1⊗y] = (−1)^{|v||y|}[u,y]⊗v + u⊗[v,y]
Two bracket_delta(const Shifted& h, const Two& t, size_t y) {
  size_t N = h.dim();
  Two out = zero2(N);
  for (size_t u = 0; u < N; ++u)
    for (size_t v = 0; v < N; ++v) {
      if (t[u][v] == 0) continue;
      int s = sign_of(h.deg[v] * h.deg[y]);
      for (size_t k = 0; k < N; ++k) {
        if (h.br[u][y][k] != 0) out[k][v] += s * t[u][v] * h.br[u][y][k];
        if (h.br[v][y][k] != 0) out[u][k] += t[u][v] * h.br[v][y][k];
      }
    }
  return out;
}

// [y⊗1 + 1⊗y, u⊗v] = [y,u]⊗v + (−1)^{|y||u|} u⊗[y,v]
Two delta_bracket(const Shifted& h, size_t y, const Two& t) {
  size_t N = h.dim();
  Two out = zero2(N);
  for (size_t u = 0; u < N; ++u)
    for (size_t v = 0; v < N; ++v) {
      if (t[u][v] == 0) continue;
      int s = sign_of(h.deg[y] * h.deg[u]);
      for (size_t k = 0; k < N; ++k) {
        if (h.br[y][u][k] != 0) out[k][v] += t[u][v] * h.br[y][u][k];
        if (h.br[y][v][k] != 0) out[u][k] += s * t[u][v] * h.br[y][v][k];
      }
    }
  return out;
}

std::string two_str(const Shifted& h, const Two& t) {
  std::ostringstream os;
  bool first = true;
  for (size_t u = 0; u < t.size(); ++u)
    for (size_t v = 0; v < t.size(); ++v) {
      if (t[u][v] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << to_string(t[u][v]) << "*" << h.names[u] << "⊗" << h.names[v];
    }
  return first ? "0" : os.str();
}

}  // namespace

Report verify_1shifted(const LieData& l, const std::string& prefix, const Scalar& kappa_scale) {
  Report rep;
  Shifted h = make_shifted(l, kappa_scale);
  size_t n = h.n, N = h.dim();
  const std::string anchor = "1-shifted Manin triple";

  Tally jac{prefix + "/graded-jacobi", "[a,[b,d]] = [[a,b],d] + (−1)^{|a||b|}[b,[a,d]] in 𝔞 ⊕ 𝔞*[−1]", anchor};
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      for (size_t d = 0; d < N; ++d) {
        Vec lhs(N, Scalar(0)), rhs(N, Scalar(0));
        for (size_t m = 0; m < N; ++m) {
          if (h.br[b][d][m] != 0)
            for (size_t k = 0; k < N; ++k) lhs[k] += h.br[b][d][m] * h.br[a][m][k];
          if (h.br[a][b][m] != 0)
            for (size_t k = 0; k < N; ++k) rhs[k] += h.br[a][b][m] * h.br[m][d][k];
          if (h.br[a][d][m] != 0)
            for (size_t k = 0; k < N; ++k) rhs[k] += sign_of(h.deg[a] * h.deg[b]) * h.br[a][d][m] * h.br[b][m][k];
        }
        jac.check(lhs == rhs, h.names[a] + "," + h.names[b] + "," + h.names[d], vec_str(lhs, h.names),
                  vec_str(rhs, h.names));
      }
  rep.add(jac.record());

  Tally inv{prefix + "/kappa-invariant", "κ([a,b],d) = κ(a,[b,d])", anchor};
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      for (size_t d = 0; d < N; ++d) {
        Scalar lhs = 0, rhs = 0;
        for (size_t m = 0; m < N; ++m) {
          lhs += h.br[a][b][m] * h.kappa(m, d);
          rhs += h.kappa(a, m) * h.br[b][d][m];
        }
        inv.check(lhs == rhs, h.names[a] + "," + h.names[b] + "," + h.names[d], to_string(lhs), to_string(rhs));
      }
  rep.add(inv.record());

  {
    CheckRecord c;
    c.id = prefix + "/kappa-nondegenerate";
    c.identity = "κ is nondegenerate of degree 1";
    c.anchor = anchor;
    size_t rk = rank(h.kappa);
    bool deg_ok = true;
    for (size_t a = 0; a < N; ++a)
      for (size_t b = 0; b < N; ++b)
        if (h.kappa(a, b) != 0 && h.deg[a] + h.deg[b] != 1) deg_ok = false;
    c.pass = rk == N && deg_ok;
    c.expected = "rank " + std::to_string(N) + ", degree 1";
    c.got = "rank " + std::to_string(rk) + (deg_ok ? ", degree 1" : ", wrong degree");
    rep.add(c);
  }

  Tally lag{prefix + "/lagrangian-subalgebras", "𝔞 and 𝔞*[−1] are isotropic subalgebras of half dimension", anchor};
  for (int side = 0; side < 2; ++side) {
    size_t lo = side ? n : 0;
    for (size_t a = lo; a < lo + n; ++a)
      for (size_t b = lo; b < lo + n; ++b) {
        bool ok = h.kappa(a, b) == 0;
        for (size_t k = 0; k < N; ++k)
          if (h.br[a][b][k] != 0 && (k < lo || k >= lo + n)) ok = false;
        lag.check(ok, h.names[a] + "," + h.names[b], "isotropic, closed",
                  "κ = " + to_string(h.kappa(a, b)) + ", [a,b] = " + vec_str(h.br[a][b], h.names));
      }
  }
  rep.add(lag.record());

  // Declared cobracket: −δ₊ = 0 on 𝔞, δ₋(c^k) = −Σ f^k_{ab} c^a⊗c^b on 𝔞*[−1].
  std::vector<Two> declared(N, zero2(N));
  for (size_t k = 0; k < n; ++k)
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) declared[n + k][n + a][n + b] = -l.f[k][a][b];

  Two r = zero2(N);
  for (size_t i = 0; i < n; ++i) r[i][n + i] = 1;
  Tally cob{prefix + "/cobracket-from-r", "[𝐫, Δ(y)] = (−δ₊, δ₋)(y) with 𝐫 = Σ x_i⊗c^i", anchor};
  for (size_t y = 0; y < N; ++y) {
    Two got = bracket_delta(h, r, y);
    cob.check(got == declared[y], h.names[y], two_str(h, declared[y]), two_str(h, got));
  }
  rep.add(cob.record());

  // co-Jacobi: graded antisymmetrization of (δ⊗1 + 1⊗δ)δ vanishes in Sym³ (all c^k are odd).
  Tally cj{prefix + "/co-jacobi", "Alt((δ₋⊗1 + 1⊗δ₋)δ₋(c^k)) = 0 in Sym³(𝔞*[−1])", anchor};
  for (size_t k = 0; k < n; ++k) {
    std::map<std::array<size_t, 3>, Scalar> t;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        Scalar s = declared[n + k][n + a][n + b];
        if (s == 0) continue;
        for (size_t p = 0; p < n; ++p)
          for (size_t q = 0; q < n; ++q) {
            t[{p, q, b}] += s * declared[n + a][n + p][n + q];
            t[{a, p, q}] -= s * declared[n + b][n + p][n + q];
          }
      }
    std::map<std::array<size_t, 3>, Scalar> alt;
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (const auto& [idx, s] : t) {
      if (s == 0) continue;
      for (int p = 0; p < 6; ++p) {
        std::array<size_t, 3> j{idx[(size_t)perms[p][0]], idx[(size_t)perms[p][1]], idx[(size_t)perms[p][2]]};
        alt[j] += (p < 3 ? 1 : -1) * s;
      }
    }
    std::string got = "0";
    for (const auto& [idx, s] : alt)
      if (s != 0) {
        got = to_string(s) + "*c^" + l.names[idx[0]] + "c^" + l.names[idx[1]] + "c^" + l.names[idx[2]] + " + ...";
        break;
      }
    cj.check(got == "0", "c^" + l.names[k], "0", got);
  }
  rep.add(cj.record());

  // Cocycle: δ[X,Y] = [δX, ΔY] + (−1)^{|X|}[ΔX, δY] on 𝔥.
  Tally coc{prefix + "/cocycle", "δ[X,Y] = [δX, ΔY] + (−1)^{|X|}[ΔX, δY]", anchor};
  for (size_t x = 0; x < N; ++x)
    for (size_t y = 0; y < N; ++y) {
      Two lhs = zero2(N);
      for (size_t k = 0; k < N; ++k)
        if (h.br[x][y][k] != 0)
          for (size_t u = 0; u < N; ++u)
            for (size_t v = 0; v < N; ++v) lhs[u][v] += h.br[x][y][k] * declared[k][u][v];
      Two a = bracket_delta(h, declared[x], y);
      Two b = delta_bracket(h, x, declared[y]);
      Two rhs = zero2(N);
      int s = sign_of(h.deg[x]);
      for (size_t u = 0; u < N; ++u)
        for (size_t v = 0; v < N; ++v) rhs[u][v] = a[u][v] + s * b[u][v];
      coc.check(lhs == rhs, h.names[x] + "," + h.names[y], two_str(h, lhs), two_str(h, rhs));
    }
  rep.add(coc.record());
  return rep;
}

}  // namespace gh
