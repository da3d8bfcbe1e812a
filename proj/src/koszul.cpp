#include "gh/koszul.hpp"

namespace gh {

namespace {

const char* kAnchor = "Koszul complex differential";

// Σ (A⊗B)∘(C⊗D) over the terms of d, with A, C acting by right multiplication when `right`.
Tensor compose(const Slots& s, const Tensor& d, bool right) {
  const Presentation &P = *s[0], &Q = *s[1];
  Tensor out(2);
  for (const auto& [k1, c1] : d)
    for (const auto& [k2, c2] : d) {
      int sign = sign_of(Q.degree(k1[1]) * P.degree(k2[0]));
      Element a = right ? P.mul(k2[0], k1[0]) : P.mul(k1[0], k2[0]);
      Element b = Q.mul(k1[1], k2[1]);
      for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) out.add({u, v}, c1 * c2 * x * y * Scalar(sign));
    }
  return out;
}

// d applied to u⊗w.
Tensor apply(const Slots& s, const Tensor& d, bool right, const Tensor& vec) {
  const Presentation &P = *s[0], &Q = *s[1];
  Tensor out(2);
  for (const auto& [k, c] : d)
    for (const auto& [kv, cv] : vec) {
      int sign = sign_of(Q.degree(k[1]) * P.degree(kv[0]));
      Element a = right ? P.mul(kv[0], k[0]) : P.mul(k[0], kv[0]);
      Element b = Q.mul(k[1], kv[1]);
      for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) out.add({u, v}, c * cv * x * y * Scalar(sign));
    }
  return out;
}

std::vector<Word> words_up_to(const Presentation& P, int len) {
  std::vector<Word> out{{}};
  for (int l = 1; l <= len; ++l) {
    std::vector<Word> next;
    for (const Word& w : out)
      if ((int)w.size() == l - 1)
        for (Letter a = 0; a < (Letter)P.size(); ++a)
          if (w.empty() || !P.rule(w.back(), a)) next.push_back(concat(w, {a}));
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

Report check_square(const Slots& s, const Tensor& d, bool right, int bound, const std::string& prefix,
                    const std::string& what) {
  Report rep;
  Tally sym{prefix + "/d-squared", what + ": d∘d = 0 in the graded tensor product", kAnchor};
  Tensor dd = compose(s, d, right);
  sym.check(dd.is_zero(), render(s, d), "0", render(s, dd));
  rep.add(sym.record());
  Tally op{prefix + "/d-squared-on-basis", what + ": d(d(u⊗w)) = 0 for basis tensors of length ≤ bound", kAnchor};
  auto us = words_up_to(*s[0], std::max(1, bound / 2)), ws = words_up_to(*s[1], std::max(1, bound / 2));
  for (const Word& u : us)
    for (const Word& w : ws) {
      if ((int)(u.size() + w.size()) > bound) continue;
      Tensor v(2);
      v.add({u, w}, 1);
      Tensor r = apply(s, d, right, apply(s, d, right, v));
      op.check(r.is_zero(), render(s, v), "0", render(s, r));
    }
  rep.add(op.record());
  return rep;
}

}  // namespace

Report check_DR_hbar(const UnipotentGroup& G, int bound, const std::string& prefix, KoszulCorruption corrupt) {
  auto D = build_Weyl_hbar(G);
  auto A = build_A_G(G);
  const Presentation &P = *D.P, &Q = *A.P;
  std::vector<Letter> x, dx;
  for (const auto& k : G.coords) {
    x.push_back(P.find(k));
    dx.push_back(P.find("∂" + k));
  }
  Tensor d(2);
  for (size_t i = 0; i < G.n; ++i) {
    Element v;
    for (size_t k = 0; k < G.n; ++k) {
      Poly coeff = G.frame[k][i];
      if (corrupt == KoszulCorruption::FrameCoefficient && i + 1 == G.n && k == 0) coeff = coeff + G.coord(0);
      v += P.mul(poly_element(P, coeff, x), Element::word({dx[k]}));
    }
    for (const auto& [w, c] : v) d.add({w, {Q.find(form_letter(G.coords[i]))}}, c);
  }
  Scalar h = corrupt == KoszulCorruption::HbarSign ? -1 : 1;
  d.add({{P.find("ℏ")}, {Q.find("δ_dR")}}, h);
  return check_square({&P, &Q}, d, false, bound, prefix, "DR_ℏ(" + G.id + ")");
}

Report check_DR_hK(const LieData& k, const LieData& h, int bound, const std::string& prefix,
                   KoszulCorruption corrupt) {
  LieData g = direct_sum(k, h, "₁", "₂");
  auto U = build_U_hbar(g);
  auto C = build_CE(h);
  const Presentation &P = *U.P, &Q = *C.P;
  Tensor d(2);
  for (const auto& n : h.names) d.add({{P.find(lie_letter(n + "₂"))}, {Q.find(form_letter(n))}}, 1);
  d.add({{P.find("ℏ")}, {Q.find("δ_CE")}}, corrupt == KoszulCorruption::HbarSign ? 1 : -1);
  return check_square({&P, &Q}, d, true, bound, prefix, "DR_{𝔥,K}(" + g.id + ", " + h.id + ")");
}

}  // namespace gh
