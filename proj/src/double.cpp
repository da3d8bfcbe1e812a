#include "gh/double.hpp"

#include "gh/confluence.hpp"

namespace gh {

namespace {

Element W(const Word& w, const Scalar& c = 1) { return Element::word(w, c); }
Element one() { return Element::unit(); }
Tensor t2(const Element& a, const Element& b) { return Tensor::pure({a, b}); }
Tensor primitive(Letter l) { return t2(W({l}), one()) + t2(one(), W({l})); }

Word shift(const Word& w, Letter by) {
  Word out = w;
  for (auto& l : out)
    if (!Presentation::is_point(l)) l += by;
  return out;
}

Element double_product_raw(const HopfPairing& pairing, const Word& alpha, const Word& a, Letter nA) {
  const HopfStructure &H = pairing.left(), &K = pairing.right();
  const Presentation &A = H.P(), &B = K.P();
  Tensor da = H.apply_delta(H.coproduct(a), 0);
  // (Δ'⊗1)Δ' with Δ' = Δ_{H*}^op, the coproduct D carries on H*.
  Slots ks = K.slots(2);
  Tensor dal(3);
  for (const auto& [k, c] : swap_slots(ks, K.coproduct(alpha), 0))
    for (const auto& [k2, c2] : swap_slots(ks, K.coproduct(k[0]), 0)) dal.add({k2[0], k2[1], k[1]}, c * c2);
  Element out;
  for (const auto& [ka, ca] : da) {
    int a1 = A.parity(ka[0]), a2 = A.parity(ka[1]), a3 = A.parity(ka[2]);
    Element s1 = H.antipode_inv(W(ka[0]));
    for (const auto& [kb, cb] : dal) {
      int b1 = B.parity(kb[0]), b2 = B.parity(kb[1]), b3 = B.parity(kb[2]);
      Scalar right = pairing.eval(ka[2], kb[2]);
      if (right == 0) continue;
      Scalar left = pairing.eval(s1, W(kb[0]));
      if (left == 0) continue;
      int xi = a1 * (b1 + b2 + b3) + a2 * (b2 + b3) + a3 * b3;
      out.add(concat(ka[1], shift(kb[1], nA)), ca * cb * left * right * sign_of(xi));
    }
  }
  return out;
}

}  // namespace

Element DoubleAlgebra::embed(const Element& e, bool dual) const {
  if (!dual) return e;
  Element out;
  Letter n = (Letter)H->P().size();
  for (const auto& [w, c] : e) out.add(shift(w, n), c);
  return out;
}

Tensor DoubleAlgebra::embed(const Tensor& t, bool dual) const {
  if (!dual) return t;
  Tensor out(t.arity());
  Letter n = (Letter)H->P().size();
  for (const auto& [k, c] : t) {
    TKey key;
    for (const auto& w : k) key.push_back(shift(w, n));
    out.add(key, c);
  }
  return out;
}

Element double_product(const HopfPairing& pairing, const Word& alpha, const Word& a, const DoubleAlgebra& D) {
  return D.P->normal_form(double_product_raw(pairing, alpha, a, (Letter)D.H->P().size()));
}

DoubleAlgebra build_double(const std::string& name, std::shared_ptr<const HopfPairing> pairing) {
  DoubleAlgebra D;
  D.name = name;
  D.H = pairing->left_ptr();
  D.Hs = pairing->right_ptr();
  D.pairing = pairing;
  const Presentation &A = D.H->P(), &B = D.Hs->P();
  Letter nA = (Letter)A.size(), nB = (Letter)B.size();
  auto P = std::make_shared<Presentation>(name);
  for (const auto& g : A.generators()) P->add_generator(g);
  for (const auto& g : B.generators()) P->add_generator(g);
  if (A.has_points()) {
    P->set_points(A.points(), A.point_rank());
  } else if (B.has_points()) {
    P->set_points(B.points(), B.point_rank() + nA);
    D.points_on_dual = true;
  }
  for (auto [a, b] : A.rule_pairs()) P->set_rule(a, b, *A.rule(a, b));
  for (auto [a, b] : B.rule_pairs()) {
    Element r;
    for (const auto& [w, c] : *B.rule(a, b)) r.add(shift(w, nA), c);
    P->set_rule(a + nA, b + nA, r);
  }
  for (Letter al = 0; al < nB; ++al)
    for (Letter a = 0; a < nA; ++a) P->set_rule(al + nA, a, double_product_raw(*pairing, {al}, {a}, nA));

  bool pd = D.points_on_dual;
  HopfPtr H = D.H, Hs = D.Hs;
  P->set_dynamic_rule([H, Hs, pairing, nA, pd](Letter a, Letter b) {
    auto dual = [&](Letter l) { return Presentation::is_point(l) ? pd : l >= nA; };
    auto back = [&](Letter l) { return Presentation::is_point(l) ? l : l - nA; };
    bool da = dual(a), db = dual(b);
    if (da && !db) return double_product_raw(*pairing, {back(a)}, {b}, nA);
    if (!da && !db) {
      const Element* r = H->P().rule(a, b);
      if (!r) throw Error("double: no rule for an out-of-order pair");
      return *r;
    }
    if (da && db) {
      const Element* r = Hs->P().rule(back(a), back(b));
      if (!r) throw Error("double: no rule for an out-of-order pair");
      Element out;
      for (const auto& [w, c] : *r) out.add(shift(w, nA), c);
      return out;
    }
    throw Error("double: H letter after H* letter in the order");
  });
  P->finalize();
  D.P = P;

  auto h = std::make_shared<HopfStructure>(P);
  for (Letter l = 0; l < nA; ++l)
    h->set(l, D.H->delta_letter(l), D.H->eps_letter(l), D.H->antipode_letter(l, false),
           D.H->antipode_letter(l, true));
  for (Letter l = 0; l < nB; ++l) {
    Tensor cop = swap_slots(D.Hs->slots(2), D.Hs->delta_letter(l), 0);
    h->set(l + nA, D.embed(cop, true), D.Hs->eps_letter(l), D.embed(D.Hs->antipode_letter(l, true), true),
           D.embed(D.Hs->antipode_letter(l, false), true));
  }
  D.hopf = h;
  return D;
}

AlgebraInstance build_dist_T1G(const UnipotentGroup& G0, bool with_delta) {
  auto Gp = std::make_shared<const UnipotentGroup>(G0);
  const UnipotentGroup& G = *Gp;
  size_t n = G.n;
  std::string name = std::string(with_delta ? "Dist(T[1]G)+δ*" : "Dist(T[1]G)") + "(" + G.id + ")";
  auto P = std::make_shared<Presentation>(name);
  P->set_points(G.points, 0);
  std::vector<Letter> e, b;
  for (size_t k = 0; k < n; ++k) e.push_back(P->add_generator({lie_letter(G.coords[k]), 0, -G.weights[k], Sort::Distribution}));
  for (size_t k = 0; k < n; ++k)
    b.push_back(P->add_generator({odd_vector_letter(G.coords[k]), -1, -G.weights[k], Sort::Vector}));
  Letter ds = with_delta ? P->add_generator({"δ*_dR", -1, 0, Sort::Delta}) : -1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (j > i) {
        Element rhs = W({e[i], e[j]});
        for (size_t k = 0; k < n; ++k) rhs.add({e[k]}, G.f[k][j][i]);
        P->set_rule(e[j], e[i], rhs);
      }
      Element rhs = W({e[i], b[j]});
      for (size_t k = 0; k < n; ++k) rhs.add({b[k]}, -G.f[k][i][j]);
      P->set_rule(b[j], e[i], rhs);
    }
  Presentation* raw = P.get();
  P->set_dynamic_rule([raw, Gp, e, b, ds](Letter a, Letter p) {
    const Point& g = raw->points()->point(p);
    if (a == ds) return W({p, ds});
    Element out;
    for (size_t i = 0; i < Gp->n; ++i)
      if (a == e[i] || a == b[i])
        for (size_t k = 0; k < Gp->n; ++k) out.add({p, a == e[i] ? e[k] : b[k]}, Gp->ad_inv[k][i].eval(g));
    return out;
  });
  P->finalize();
  auto h = std::make_shared<HopfStructure>(P);
  for (Letter l : e) h->set(l, primitive(l), 0, W({l}, -1), W({l}, -1));
  for (size_t i = 0; i < n; ++i) {
    Tensor d = primitive(b[i]);
    if (with_delta) d += t2(W({ds}), W({e[i]}));
    h->set_coalgebra(b[i], d, 0);
  }
  if (with_delta) h->set(ds, primitive(ds), 0, W({ds}, -1), W({ds}, -1));
  h->derive_antipodes();
  return {"Dist_T1G", name, G.id, P, h};
}

AlgebraInstance build_H_G_dual(const UnipotentGroup& G) {
  size_t n = G.n;
  std::string name = "H_G*(" + G.id + ")";
  auto P = std::make_shared<Presentation>(name);
  std::vector<Letter> x, b;
  for (size_t k = 0; k < n; ++k) x.push_back(P->add_generator({G.coords[k], 0, G.weights[k], Sort::Function}));
  for (size_t k = 0; k < n; ++k)
    b.push_back(P->add_generator({odd_vector_letter(G.coords[k]), -1, -G.weights[k], Sort::Vector}));
  Letter ds = P->add_generator({"δ*", -1, 0, Sort::Delta});
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      // b_i f → f b_i − ξ^L_i(f) δ*
      Element rhs = W({x[k], b[i]});
      for (const auto& [w, c] : poly_element(*P, G.xi_l[i][k], x)) rhs.add(concat(w, {ds}), -c);
      P->set_rule(b[i], x[k], rhs);
    }
  P->finalize();
  auto h = std::make_shared<HopfStructure>(P);
  for (size_t k = 0; k < n; ++k) {
    Element s = poly_element(*P, G.inv[k], x);
    h->set(x[k], poly_tensor(*P, G.mult[k], x), 0, s, s);
  }
  for (size_t i = 0; i < n; ++i) {
    Tensor d = t2(W({b[i]}), one());
    for (size_t j = 0; j < n; ++j) d += t2(poly_element(*P, G.ad_inv[j][i], x), W({b[j]}));
    h->set_coalgebra(b[i], d, 0);
  }
  h->set(ds, primitive(ds), 0, W({ds}, -1), W({ds}, -1));
  h->derive_antipodes();
  return {"H_G_dual", name, G.id, P, h};
}

AlgebraInstance build_finite_functions(const FiniteGroup& G) {
  std::string name = "O(" + G.id + ")";
  auto P = std::make_shared<Presentation>(name);
  std::vector<Letter> e(G.order(), -1);
  for (int h = 0; h < (int)G.order(); ++h)
    if (h != G.identity) e[(size_t)h] = P->add_generator({"e[" + G.names[(size_t)h] + "]", 0, 0, Sort::Function});
  for (int h = 0; h < (int)G.order(); ++h)
    for (int k = 0; k < (int)G.order(); ++k) {
      if (h == G.identity || k == G.identity) continue;
      P->set_rule(e[(size_t)h], e[(size_t)k], h == k ? W({e[(size_t)h]}) : Element());
    }
  P->finalize();
  auto E = [&](int h) {
    if (h != G.identity) return W({e[(size_t)h]});
    Element u = one();
    for (int k = 0; k < (int)G.order(); ++k)
      if (k != G.identity) u.add({e[(size_t)k]}, -1);
    return u;
  };
  auto hs = std::make_shared<HopfStructure>(P);
  for (int h = 0; h < (int)G.order(); ++h) {
    if (h == G.identity) continue;
    Tensor d(2);
    for (int a = 0; a < (int)G.order(); ++a) d += t2(E(a), E(G.mul(G.inverse[(size_t)a], h)));
    Element s = E(G.inverse[(size_t)h]);
    hs->set(e[(size_t)h], d, 0, s, s);
  }
  return {"O_G", name, G.id, P, hs};
}

AlgebraInstance build_group_algebra(const FiniteGroup& G) {
  std::string name = "C[" + G.id + "]";
  auto P = std::make_shared<Presentation>(name);
  P->set_points(G.points, 0);
  P->finalize();
  return {"C_G", name, G.id, P, std::make_shared<HopfStructure>(P)};
}

std::shared_ptr<const HopfPairing> pairing_forms(const AlgebraInstance& forms, const AlgebraInstance& dist,
                                                 const UnipotentGroup& G, int bound) {
  const Presentation &A = *forms.P, &B = *dist.P;
  size_t n = G.n;
  std::vector<Letter> x, c, e, b;
  for (size_t k = 0; k < n; ++k) {
    x.push_back(A.find(G.coords[k]));
    c.push_back(A.find(form_letter(G.coords[k])));
    e.push_back(B.find(lie_letter(G.coords[k])));
    b.push_back(B.find(odd_vector_letter(G.coords[k])));
  }
  auto d = A.try_find("δ_dR");
  auto ds = B.try_find("δ*_dR");
  auto pts = G.points;
  auto values = [x, c, e, b, d, ds, pts](Letter l, Letter m) -> Scalar {
    for (size_t k = 0; k < x.size(); ++k) {
      if (l == x[k]) {
        if (Presentation::is_point(m)) return pts->point(m)[k];
        return m == e[k] ? 1 : 0;
      }
      if (l == c[k]) return m == b[k] ? 1 : 0;
    }
    if (d && l == *d) return ds && m == *ds ? 1 : 0;
    return 0;
  };
  return std::make_shared<HopfPairing>(forms.hopf, dist.hopf, values, bound);
}

std::shared_ptr<const HopfPairing> pairing_H_G(const AlgebraInstance& hg, const AlgebraInstance& dual,
                                               const UnipotentGroup& G, int bound) {
  const Presentation &A = *hg.P, &B = *dual.P;
  size_t n = G.n;
  std::vector<Letter> e, c, x, b;
  for (size_t k = 0; k < n; ++k) {
    e.push_back(A.find(lie_letter(G.coords[k])));
    c.push_back(A.find(form_letter(G.coords[k])));
    x.push_back(B.find(G.coords[k]));
    b.push_back(B.find(odd_vector_letter(G.coords[k])));
  }
  Letter d = A.find("δ"), ds = B.find("δ*");
  auto pts = G.points;
  auto values = [e, c, x, b, d, ds, pts](Letter l, Letter m) -> Scalar {
    for (size_t k = 0; k < x.size(); ++k) {
      if (m == x[k]) {
        if (Presentation::is_point(l)) return pts->point(l)[k];
        return l == e[k] ? 1 : 0;
      }
      if (m == b[k]) return l == c[k] ? 1 : 0;
    }
    return l == d && m == ds ? 1 : 0;
  };
  return std::make_shared<HopfPairing>(hg.hopf, dual.hopf, values, bound);
}

std::shared_ptr<const HopfPairing> pairing_finite(const AlgebraInstance& fun, const AlgebraInstance& grp,
                                                  const FiniteGroup& G) {
  std::vector<int> elem(fun.P->size());
  for (Letter l = 0; l < (Letter)fun.P->size(); ++l) {
    const std::string& nm = fun.P->gen(l).name;
    elem[(size_t)l] = G.index(nm.substr(2, nm.size() - 3));
  }
  auto pts = G.points;
  auto values = [elem, pts](Letter l, Letter m) -> Scalar {
    if (!Presentation::is_point(m) || Presentation::is_point(l)) return 0;
    return elem[(size_t)l] == FiniteGroup::element(pts->point(m)) ? 1 : 0;
  };
  return std::make_shared<HopfPairing>(fun.hopf, grp.hopf, values, 1 << 20);
}

DoubleAlgebra build_double_AG(const UnipotentGroup& G, int bound) {
  auto A = build_A_G(G);
  auto B = build_dist_T1G(G, true);
  return build_double("D(A_G)(" + G.id + ")", pairing_forms(A, B, G, bound));
}

DoubleAlgebra build_double_OmegaG(const UnipotentGroup& G, int bound) {
  auto A = build_Omega_G(G);
  auto B = build_dist_T1G(G, false);
  return build_double("D(Omega_G)(" + G.id + ")", pairing_forms(A, B, G, bound));
}

DoubleAlgebra build_double_HG(const UnipotentGroup& G, int bound) {
  GroupModel m;
  m.id = G.id;
  m.unipotent = std::make_shared<const UnipotentGroup>(G);
  auto A = build_H_G(m);
  auto B = build_H_G_dual(G);
  return build_double("D(H_G)(" + G.id + ")", pairing_H_G(A, B, G, bound));
}

DoubleAlgebra build_double_OG(const FiniteGroup& G) {
  auto A = build_finite_functions(G);
  auto B = build_group_algebra(G);
  return build_double("D(O_G)(" + G.id + ")", pairing_finite(A, B, G));
}

Report check_double(const DoubleAlgebra& D, const AxiomOptions& opt, const std::string& prefix) {
  const std::string anchor = "signed Drinfeld double";
  const Presentation& P = *D.P;
  const HopfStructure &H = *D.H, &K = *D.Hs;
  Rng rng(opt.seed ^ 0xd00b1eull);
  int len = std::max(1, opt.degree_bound / 2);
  auto ha = sample_alphabet(H.P(), rng, opt.points), ka = sample_alphabet(K.P(), rng, opt.points);
  auto hw = sample_words(H.P(), ha, rng, len, opt.samples), kw = sample_words(K.P(), ka, rng, len, opt.samples);
  Tally sub{prefix + "/subalgebras", "H → D(H) and H* → D(H) preserve products", anchor};
  Tally cosub{prefix + "/sub-coalgebras", "Δ_D restricts to Δ_H on H and to Δ_{H*}^op on H*", anchor};
  Tally cross{prefix + "/cross-product", "α·a = Σ ±⟨S⁻¹a⁽¹⁾, α⁽¹⁾⟩ a⁽²⁾α⁽²⁾ ⟨a⁽³⁾, α⁽³⁾⟩ on random words", anchor};
  Slots s2 = D.hopf->slots(2);
  for (size_t i = 0; i + 1 < hw.size(); i += 2) {
    const Word &u = hw[i], &v = hw[i + 1];
    Element l = H.P().mul(u, v), r = P.mul(u, v);
    sub.check(l == r, H.P().render(u) + " · " + H.P().render(v), H.P().render(l), P.render(r));
    Tensor a = H.coproduct(u), b = D.hopf->coproduct(u);
    cosub.check(a == b, H.P().render(u), render(s2, a), render(s2, b));
  }
  for (size_t i = 0; i + 1 < kw.size(); i += 2) {
    const Word &u = kw[i], &v = kw[i + 1];
    Element l = D.embed(K.P().mul(u, v), true);
    Element r = P.mul(D.embed(Element::word(u), true), D.embed(Element::word(v), true));
    sub.check(l == r, K.P().render(u) + " · " + K.P().render(v), P.render(l), P.render(r));
    Tensor a = D.embed(swap_slots(K.slots(2), K.coproduct(u), 0), true);
    Tensor b = D.hopf->coproduct(D.embed(Element::word(u), true));
    cosub.check(a == b, K.P().render(u), render(s2, a), render(s2, b));
  }
  size_t m = std::min<size_t>(std::min(hw.size(), kw.size()), (size_t)std::max(1, opt.samples / 4));
  for (size_t i = 0; i < m; ++i) {
    const Word &a = hw[i], &al = kw[i];
    if ((int)(a.size() + al.size()) > std::max(2, opt.degree_bound / 2) + 1) continue;
    Element l = P.mul(D.embed(Element::word(al), true), Element::word(a));
    Element r = double_product(*D.pairing, al, a, D);
    cross.check(l == r, K.P().render(al) + " · " + H.P().render(a), P.render(r), P.render(l));
  }
  Report rep;
  rep.add(sub.record());
  rep.add(cosub.record());
  rep.add(cross.record());
  rep.merge(check_local_confluence(P, opt, prefix, anchor));
  rep.merge(check_associativity(P, opt, prefix, anchor));
  rep.merge(check_hopf_axioms(*D.hopf, opt, prefix, anchor));
  return rep;
}

}  // namespace gh
