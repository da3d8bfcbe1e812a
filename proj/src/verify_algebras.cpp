#include <algorithm>

#include "gh/algebras.hpp"
#include "gh/verifiers.hpp"

namespace gh {

namespace {

// Letters of D(𝒜_G) sent to A_{G/G_ad} by name; b picks up `b_sign`, δ*_dR goes to zero.
struct QuotientMap {
  const Presentation *D, *A;
  std::vector<Letter> image;
  std::vector<int> sign;

  QuotientMap(const Presentation& d, const Presentation& a, const UnipotentGroup& G, int b_sign) : D(&d), A(&a) {
    for (Letter l = 0; l < (Letter)d.size(); ++l) {
      const std::string& n = d.gen(l).name;
      bool is_b = std::any_of(G.coords.begin(), G.coords.end(), [&](const auto& k) { return n == odd_vector_letter(k); });
      image.push_back(n == "δ*_dR" ? -1 : a.find(n));
      sign.push_back(is_b ? b_sign : 1);
    }
  }
  Element word(const Word& w) const {
    Word out;
    int s = 1;
    for (Letter l : w) {
      if (Presentation::is_point(l)) {
        out.push_back(l);
        continue;
      }
      if (image[(size_t)l] < 0) return {};
      out.push_back(image[(size_t)l]);
      s *= sign[(size_t)l];
    }
    return A->normal_form(out) * Scalar(s);
  }
  Element operator()(const Element& e) const {
    Element out;
    for (const auto& [w, c] : e) out += word(w) * c;
    return out;
  }
  Tensor operator()(const Tensor& t) const {
    Tensor out(2);
    for (const auto& [k, c] : t) {
      Element a = word(k[0]), b = word(k[1]);
      for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) out.add({u, v}, c * x * y);
    }
    return out;
  }
};

}  // namespace

Report verify_central_extension(const UnipotentGroup& G, const AxiomOptions& opt, const std::string& prefix,
                                int b_sign) {
  const std::string anchor = "central extension by δ*_dR";
  auto D = build_double_AG(G);
  auto A = build_A_GGad(G);
  const Presentation &P = *D.P, &Q = *A.P;
  const HopfStructure &HD = *D.hopf, &HA = *A.hopf;
  Slots sD = HD.slots(2), sA = HA.slots(2);
  Letter ds = P.find("δ*_dR");
  Report rep;
  Rng rng(opt.seed ^ 0xce47ull);
  std::vector<Letter> pts;
  for (int i = 0; i < opt.points; ++i)
    if (auto l = P.points()->letter(P.points()->sample(rng))) pts.push_back(*l);

  if (b_sign < 0) {
    Tally ideal{prefix + "/hopf-ideal", "δ*_dR is primitive with ε(δ*_dR) = 0 and S(δ*_dR) = −δ*_dR", anchor};
    Tensor prim(2);
    prim.add({{ds}, {}}, 1);
    prim.add({{}, {ds}}, 1);
    ideal.check(HD.delta_letter(ds) == prim, "Δ(δ*_dR)", render(sD, prim), render(sD, HD.delta_letter(ds)));
    ideal.check(HD.eps_letter(ds) == 0, "ε(δ*_dR)", "0", HD.eps_letter(ds).get_str());
    Element s = HD.antipode_letter(ds, false);
    ideal.check(s == Element::word({ds}, -1), "S(δ*_dR)", "−δ*_dR", P.render(s));
    rep.add(ideal.record());

    Tally central{prefix + "/central", "[δ*_dR, a] = 0 for every generator and sampled point a", anchor};
    std::vector<Letter> all;
    for (Letter l = 0; l < (Letter)P.size(); ++l) all.push_back(l);
    all.insert(all.end(), pts.begin(), pts.end());
    for (Letter l : all) {
      Element c = P.graded_commutator(Element::word({ds}), Element::word({l}));
      central.check(c.is_zero(), "[δ*_dR, " + P.render(Word{l}) + "]", "0", P.render(c));
    }
    rep.add(central.record());

    // [b, f] = −ξ^L_b(f)δ*_dR for the letter b of the double; with b_A = −b this is [b_A, f] = ξ^L_b(f)δ*_dR.
    Tally cocycle{prefix + "/cocycle", "[b_i, x_k] = −ξ^L_i(x_k)δ*_dR in D(𝒜_G), i.e. [−b_i, f] = ξ^L_{b_i}(f)δ*_dR", anchor};
    std::vector<Letter> xs;
    for (const auto& k : G.coords) xs.push_back(P.find(k));
    for (size_t i = 0; i < G.n; ++i)
      for (size_t k = 0; k < G.n; ++k) {
        Letter b = P.find(odd_vector_letter(G.coords[i]));
        Element got = P.graded_commutator(Element::word({b}), Element::word({xs[k]}));
        Element want = P.mul(poly_element(P, G.xi_l[i][k], xs), Element::word({ds})) * Scalar(-1);
        cocycle.check(got == want, "[" + P.gen(b).name + ", " + G.coords[k] + "]", P.render(want), P.render(got));
      }
    rep.add(cocycle.record());
  }

  QuotientMap phi(P, Q, G, b_sign);
  std::string tag = b_sign < 0 ? "b ↦ −b" : "b ↦ +b";
  Tally rel{prefix + "/quotient-relations", "φ(a·b) = φ(a)·φ(b) for all generator pairs of D(𝒜_G)/(δ*_dR), " + tag, anchor};
  for (Letter a = 0; a < (Letter)P.size(); ++a)
    for (Letter b = 0; b < (Letter)P.size(); ++b) {
      if (a == ds || b == ds) continue;
      Element l = phi(P.normal_form(Word{a, b})), r = Q.mul(phi.word({a}), phi.word({b}));
      rel.check(l == r, P.render(Word{a, b}), Q.render(r), Q.render(l));
    }
  for (Letter p : pts)
    for (Letter a = 0; a < (Letter)P.size(); ++a) {
      if (a == ds) continue;
      for (const Word& w : {Word{a, p}, Word{p, a}}) {
        Element l = phi(P.normal_form(w)), r = Q.mul(phi.word({w[0]}), phi.word({w[1]}));
        rel.check(l == r, P.render(w), Q.render(r), Q.render(l));
      }
    }
  rep.add(rel.record());

  Tally gens{prefix + "/quotient-generators", "φ is a bijection between the generators of the quotient and of A_{G/G_ad}", anchor};
  std::vector<Letter> hit;
  for (Letter a = 0; a < (Letter)P.size(); ++a)
    if (a != ds) hit.push_back(phi.image[(size_t)a]);
  std::sort(hit.begin(), hit.end());
  bool bij = hit.size() == Q.size() && std::adjacent_find(hit.begin(), hit.end()) == hit.end();
  gens.check(bij, P.name(), std::to_string(Q.size()) + " distinct images", std::to_string(hit.size()));
  rep.add(gens.record());

  Tally hopf{prefix + "/quotient-hopf", "φ intertwines Δ, ε, S and S⁻¹ on every generator, " + tag, anchor};
  for (Letter a = 0; a < (Letter)P.size(); ++a) {
    if (a == ds) continue;
    Letter b = phi.image[(size_t)a];
    Tensor l = tensor_normalize(sA, phi(HD.delta_letter(a))), r = HA.delta_letter(b) * Scalar(phi.sign[(size_t)a]);
    hopf.check(l == r, "Δ(" + P.gen(a).name + ")", render(sA, r), render(sA, l));
    hopf.check(HD.eps_letter(a) == HA.eps_letter(b), "ε(" + P.gen(a).name + ")", HA.eps_letter(b).get_str(),
               HD.eps_letter(a).get_str());
    for (bool inv : {false, true}) {
      Element sl = phi(HD.antipode_letter(a, inv)), sr = HA.antipode_letter(b, inv) * Scalar(phi.sign[(size_t)a]);
      hopf.check(sl == sr, std::string(inv ? "S⁻¹(" : "S(") + P.gen(a).name + ")", Q.render(sr), Q.render(sl));
    }
  }
  rep.add(hopf.record());
  return rep;
}

Report verify_bc_coproduct(const UnipotentGroup& G, const std::string& prefix) {
  const std::string anchor = "coproduct of the b-c bracket";
  auto A = build_A_GGad(G);
  const Presentation& P = *A.P;
  const HopfStructure& H = *A.hopf;
  Slots s2 = H.slots(2);
  size_t n = G.n;
  std::vector<Letter> xs;
  for (const auto& k : G.coords) xs.push_back(P.find(k));
  PolyMatrix a1(n, std::vector<Poly>(n, Poly(2 * n))), a2 = a1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      a1[i][j] = G.ad_inv[i][j].embed(2 * n, 0);
      a2[i][j] = G.ad_inv[i][j].embed(2 * n, n);
    }
  PolyMatrix prod = poly_matmul(a2, a1);
  Tally comm{prefix + "/bracket-of-coproducts", "[Δb_i, Δc^j] = Δ[b_i, c^j]", anchor};
  Tally pull{prefix + "/pullback", "Δ[b_i, c^j] = m*[b_i, c^j] as a polynomial in (g₁, g₂)", anchor};
  Tally two{prefix + "/two-point", "[Δb_i, Δc^j] = ((1 − g₂⁻¹g₁⁻¹)b_i, c^j) = δ_ij − (Ad_{g₂⁻¹}Ad_{g₁⁻¹})_{ji}", anchor};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Element b = P.gen_element(odd_vector_letter(G.coords[i])), c = P.gen_element(form_letter(G.coords[j]));
      std::string in = "(" + P.render(b) + ", " + P.render(c) + ")";
      Tensor lhs = graded_commutator(s2, H.coproduct(b), H.coproduct(c));
      Element bc = P.graded_commutator(b, c);
      Tensor rhs = H.coproduct(bc);
      comm.check(lhs == rhs, in, render(s2, rhs), render(s2, lhs));
      Tensor m = poly_tensor(P, G.pullback_mult(element_poly(bc, xs)), xs);
      pull.check(rhs == m, in, render(s2, m), render(s2, rhs));
      Poly expect = -prod[j][i];
      if (i == j) expect += Poly::constant(2 * n, 1);
      Tensor e = poly_tensor(P, expect, xs);
      two.check(lhs == e, in, render(s2, e), render(s2, lhs));
    }
  Report rep;
  rep.add(comm.record());
  rep.add(pull.record());
  rep.add(two.record());
  return rep;
}

Report verify_clifford(const UnipotentGroup& G, const AxiomOptions& opt, const std::string& prefix, bool perturb) {
  const std::string anchor = "Clifford relation";
  auto hess = clifford_hessian(G);
  if (perturb) hess[0][G.n - 1] += Poly::constant(G.n, 1);
  auto A = build_A_GGad(G);
  auto D = build_double_AG(G);
  auto Cl = build_Clifford(G);
  Report rep;
  Tally ga{prefix + "/adjoint-quotient", "{b_i, c^j} = ∂²W/∂b_i∂c^j in A_{G/G_ad}", anchor};
  Tally gd{prefix + "/double-quotient", "{−b_i, c^j} = ∂²W/∂b_i∂c^j in D(𝒜_G) modulo δ*_dR", anchor};
  for (size_t i = 0; i < G.n; ++i)
    for (size_t j = 0; j < G.n; ++j) {
      for (int which = 0; which < 2; ++which) {
        const Presentation& P = which ? *D.P : *A.P;
        std::vector<Letter> xs;
        for (const auto& k : G.coords) xs.push_back(P.find(k));
        Element b = P.gen_element(odd_vector_letter(G.coords[i]), which ? -1 : 1);
        Element c = P.gen_element(form_letter(G.coords[j]));
        Element got = P.graded_commutator(b, c);
        Element want = poly_element(P, hess[i][j], xs);
        (which ? gd : ga).check(got == want, "{" + P.render(b) + ", " + P.render(c) + "}", P.render(want), P.render(got));
      }
    }
  rep.add(ga.record());
  rep.add(gd.record());
  if (!perturb) {
    // The Clifford algebra is a consistent presentation and sits inside A_{G/G_ad} by name.
    Tally sub{prefix + "/subalgebra", "every rewrite rule of Cl(G) holds in A_{G/G_ad}", anchor};
    const Presentation &C = *Cl.P, &Q = *A.P;
    auto map = [&](const Element& e) {
      Element out;
      for (const auto& [w, c] : e) {
        Word u;
        for (Letter l : w) u.push_back(Q.find(C.gen(l).name));
        out += Q.normal_form(u) * c;
      }
      return out;
    };
    for (auto [a, b] : C.rule_pairs()) {
      Element l = map(Element::word({a, b})), r = map(*C.rule(a, b));
      sub.check(l == r, C.render(Word{a, b}), Q.render(r), Q.render(l));
    }
    rep.add(sub.record());
    (void)opt;
  }
  return rep;
}

}  // namespace gh
