#include "gh/probing.hpp"

#include <algorithm>
#include <map>

namespace gh {

namespace {

std::vector<int> letter_elements(const DoubleAlgebra& D, const FiniteGroup& G) {
  std::vector<int> elem;
  for (Letter l = 0; l < (Letter)D.H->P().size(); ++l) {
    const std::string& nm = D.P->gen(l).name;
    elem.push_back(G.index(nm.substr(2, nm.size() - 3)));
  }
  return elem;
}

}  // namespace

std::vector<FiniteModule> finite_double_irreps(const DoubleAlgebra& D, const FiniteGroup& G) {
  std::vector<FiniteModule> out;
  auto elem = letter_elements(D, G);
  for (const auto& cls : G.conjugacy_classes()) {
    int g = cls[0];
    auto Z = G.centralizer(g);
    std::vector<int> reps;  // coset representatives of G/Z
    std::vector<int> coset(G.order(), -1);
    for (int t = 0; t < (int)G.order(); ++t) {
      if (coset[(size_t)t] >= 0) continue;
      for (int z : Z) coset[(size_t)G.mul(t, z)] = (int)reps.size();
      reps.push_back(t);
    }
    for (const auto& pi : rational_irreps(G, Z)) {
      size_t d = pi.dim(), n = reps.size() * d;
      FiniteModule M;
      M.name = "V(" + G.names[(size_t)g] + "," + pi.name + ")";
      M.P = D.P;
      M.parity.assign(n, 0);
      M.weight.assign(n, 0);
      for (size_t i = 0; i < reps.size(); ++i) {
        int t = reps[i];
        int gi = G.mul(G.mul(t, g), G.inverse[(size_t)t]);
        for (size_t k = 0; k < d; ++k) {
          M.grading.push_back(gi);
          M.labels.push_back(G.names[(size_t)t] + "⊗v" + std::to_string(k));
        }
      }
      for (Letter l = 0; l < (Letter)D.H->P().size(); ++l) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
          if (M.grading[i] == elem[(size_t)l]) m(i, i) = 1;
        M.gens.push_back(m);
      }
      auto grp = std::make_shared<const FiniteGroup>(G);
      auto reps_c = reps;
      auto coset_c = coset;
      M.point_action = [grp, reps_c, coset_c, pi, d, n](const Point& p) {
        const FiniteGroup& H = *grp;
        int x = FiniteGroup::element(p);
        Matrix m(n, n);
        for (size_t i = 0; i < reps_c.size(); ++i) {
          int xt = H.mul(x, reps_c[i]);
          size_t j = (size_t)coset_c[(size_t)xt];
          int z = H.mul(H.inverse[(size_t)reps_c[j]], xt);
          const Matrix& r = pi.of(z);
          for (size_t a = 0; a < d; ++a)
            for (size_t b = 0; b < d; ++b) m(j * d + a, i * d + b) = r(a, b);
        }
        return m;
      };
      out.push_back(std::move(M));
    }
  }
  return out;
}

FiniteModule finite_regular_module(const DoubleAlgebra& D, const FiniteGroup& G) {
  auto elem = letter_elements(D, G);
  size_t n = G.order();
  FiniteModule M;
  M.name = "regular";
  M.P = D.P;
  M.parity.assign(n, 0);
  M.weight.assign(n, 0);
  for (int g = 0; g < (int)n; ++g) {
    M.grading.push_back(g);
    M.labels.push_back(G.names[(size_t)g]);
  }
  for (Letter l = 0; l < (Letter)D.H->P().size(); ++l) {
    Matrix m(n, n);
    m((size_t)elem[(size_t)l], (size_t)elem[(size_t)l]) = 1;
    M.gens.push_back(m);
  }
  auto grp = std::make_shared<const FiniteGroup>(G);
  M.point_action = [grp, n](const Point& p) {
    int x = FiniteGroup::element(p);
    Matrix m(n, n);
    for (int g = 0; g < (int)n; ++g) m((size_t)grp->mul(grp->mul(x, g), grp->inverse[(size_t)x]), (size_t)g) = 1;
    return m;
  };
  return M;
}

std::vector<FiniteModule> unipotent_probing_modules(const DoubleAlgebra& D, const UnipotentGroup& G,
                                                    bool with_dual_action, size_t max_dim) {
  const Presentation& P = *D.P;
  int top = *std::max_element(G.weights.begin(), G.weights.end());
  auto letter = [&](const std::string& n) { return Element::word({P.find(n)}); };
  std::vector<FiniteModule> out{trivial_module(D.P, *D.hopf)};
  out.back().name = "T";
  auto add = [&](const std::string& name, CyclicSpec spec) {
    for (; spec.window >= 1; --spec.window) {
      FiniteModule M = cyclic_module(D, name, spec);
      if (M.dim() <= 1) return;
      if (M.dim() <= max_dim) {
        M.name = name + std::to_string(M.dim());
        out.push_back(std::move(M));
        return;
      }
    }
  };
  CyclicSpec left{false, {letter("δ_dR")}, top};
  add("L", left);
  if (with_dual_action) {
    CyclicSpec right{true, {}, top};
    if (top >= 2)
      for (size_t i = 0; i < G.n; ++i)
        for (size_t j = 0; j < G.n; ++j)
          if (G.weights[i] == 1 && G.weights[j] == 1)
            right.kill.push_back(Element::word({P.find(lie_letter(G.coords[i])), P.find(odd_vector_letter(G.coords[j]))}));
    add("R", right);
  }
  Letter dual_delta = P.find("δ*_dR");
  auto carries_dual_delta = [&](const FiniteModule& M) { return !M.gens[(size_t)dual_delta].is_zero(); };
  if (with_dual_action && std::none_of(out.begin(), out.end(), carries_dual_delta)) {
    CyclicSpec spec{true, {}, top};
    for (size_t k = 0; k < G.n; ++k) spec.kill.push_back(letter(lie_letter(G.coords[k])));
    FiniteModule W = cyclic_module(D, "W", spec);
    for (size_t i = 0; i < G.n; ++i)
      for (size_t j = i + 1; j < G.n; ++j) {
        if (G.weights[i] != 1 || G.weights[j] != 1) continue;
        CyclicSpec next = spec;
        next.kill.push_back(Element::word({P.find(odd_vector_letter(G.coords[i])), P.find(odd_vector_letter(G.coords[j]))}));
        FiniteModule M = cyclic_module(D, "W", next);
        if (carries_dual_delta(M) && M.dim() < W.dim()) {
          spec = next;
          W = std::move(M);
        }
      }
    if (carries_dual_delta(W)) {
      W.name = "W" + std::to_string(W.dim());
      out.push_back(std::move(W));
    }
  }
  if (top >= 2) {
    CyclicSpec small = left;
    for (size_t k = 0; k < G.n; ++k)
      if (G.weights[k] == top) small.kill.push_back(letter(form_letter(G.coords[k])));
    add("Z", small);
  }
  return out;
}

}  // namespace gh
