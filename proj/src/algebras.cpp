#include "gh/algebras.hpp"

namespace gh {

namespace {

Tensor t2(const Element& a, const Element& b) { return Tensor::pure({a, b}); }
Element W(const Word& w, const Scalar& c = 1) { return Element::word(w, c); }
Element one() { return Element::unit(); }

Tensor primitive(Letter l) { return t2(W({l}), one()) + t2(one(), W({l})); }

void set_primitive(HopfStructure& h, Letter l) {
  h.set(l, primitive(l), 0, W({l}, -1), W({l}, -1));
}

std::vector<Letter> add_letters(Presentation& P, const std::vector<std::string>& names, const std::vector<int>& weights,
                                std::string (*fmt)(const std::string&), int degree, int weight_sign, Sort sort) {
  std::vector<Letter> out;
  for (size_t k = 0; k < names.size(); ++k)
    out.push_back(P.add_generator({fmt ? fmt(names[k]) : names[k], degree, weight_sign * weights[k], sort}));
  return out;
}

std::string same(const std::string& s) { return s; }

// e_j e_i → e_i e_j + Σ_k f^k_{ji} e_k (j > i)
void add_lie_rules(Presentation& P, const std::vector<std::vector<std::vector<Scalar>>>& f, const std::vector<Letter>& e,
                   Letter hbar = -1) {
  size_t n = e.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Element rhs = W({e[i], e[j]});
      for (size_t k = 0; k < n; ++k) {
        if (f[k][j][i] == 0) continue;
        rhs.add(hbar >= 0 ? Word{hbar, e[k]} : Word{e[k]}, f[k][j][i]);
      }
      P.set_rule(e[j], e[i], rhs);
    }
}

// c^j e_i → e_i c^j − Σ_k f^j_{ki} c^k
void add_coadjoint_rules(Presentation& P, const std::vector<std::vector<std::vector<Scalar>>>& f,
                         const std::vector<Letter>& e, const std::vector<Letter>& c) {
  size_t n = e.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Element rhs = W({e[i], c[j]});
      for (size_t k = 0; k < n; ++k) rhs.add({c[k]}, -f[j][k][i]);
      P.set_rule(c[j], e[i], rhs);
    }
}

// δ c^i → −c^i δ − Σ_{j<k} f^i_{jk} c^j c^k
void add_ce_rules(Presentation& P, const std::vector<std::vector<std::vector<Scalar>>>& f, Letter d,
                  const std::vector<Letter>& c) {
  size_t n = c.size();
  for (size_t i = 0; i < n; ++i) {
    Element rhs = W({c[i], d}, -1);
    for (size_t j = 0; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) rhs.add({c[j], c[k]}, -f[i][j][k]);
    P.set_rule(d, c[i], rhs);
  }
}

void require_jacobi(const LieData& g) {
  if (auto d = jacobi_defect(g)) throw JacobiViolation(g.id + ": " + *d);
}

// Coordinates, c and (optionally) δ_dR with the relations and coproducts of forms on G.
struct FormLetters {
  std::vector<Letter> x, c;
  Letter d = -1;
};

void add_form_rules(Presentation& P, const UnipotentGroup& G, const FormLetters& L) {
  size_t n = G.n;
  if (L.d >= 0) {
    for (size_t k = 0; k < n; ++k) {
      Element rhs = W({L.x[k], L.d});
      for (size_t i = 0; i < n; ++i)
        for (const auto& [w, cf] : poly_element(P, G.frame[k][i], L.x)) rhs.add(concat(w, {L.c[i]}), cf);
      P.set_rule(L.d, L.x[k], rhs);
    }
    add_ce_rules(P, G.f, L.d, L.c);
  }
}

void set_form_coproducts(HopfStructure& h, const UnipotentGroup& G, const FormLetters& L) {
  const Presentation& P = h.P();
  size_t n = G.n;
  for (size_t k = 0; k < n; ++k) {
    Element s = poly_element(P, G.inv[k], L.x);
    h.set(L.x[k], poly_tensor(P, G.mult[k], L.x), 0, s, s);
  }
  for (size_t i = 0; i < n; ++i) {
    Tensor d = t2(one(), W({L.c[i]}));
    for (size_t k = 0; k < n; ++k) d += t2(W({L.c[k]}), poly_element(P, G.ad_inv[i][k], L.x));
    h.set_coalgebra(L.c[i], d, 0);
  }
  if (L.d >= 0) h.set_coalgebra(L.d, primitive(L.d), 0);
}

}  // namespace

Element poly_element(const Presentation& P, const Poly& p, const std::vector<Letter>& vars) {
  Element e;
  for (const auto& [m, c] : p.terms()) {
    Word w;
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) w.push_back(vars.at(i));
    e.add(w, c);
  }
  (void)P;
  return e;
}

Tensor poly_tensor(const Presentation& P, const Poly& p, const std::vector<Letter>& vars) {
  size_t n = vars.size();
  Tensor t(2);
  for (const auto& [m, c] : p.terms()) {
    Word a, b;
    for (size_t i = 0; i < n; ++i) {
      for (int k = 0; k < m[i]; ++k) a.push_back(vars[i]);
      for (int k = 0; k < m[n + i]; ++k) b.push_back(vars[i]);
    }
    t.add({a, b}, c);
  }
  return tensor_normalize(same_slots(P, 2), t);
}

Poly element_poly(const Element& e, const std::vector<Letter>& vars) {
  size_t n = vars.size();
  Poly p(n);
  for (const auto& [w, c] : e) {
    Poly::Mono m(n, 0);
    for (Letter l : w) {
      auto it = std::find(vars.begin(), vars.end(), l);
      if (it == vars.end()) throw MalformedDefinition("word is not a polynomial in the given letters");
      ++m[(size_t)(it - vars.begin())];
    }
    p.add_term(m, c);
  }
  return p;
}

AlgebraInstance build_CE(const LieData& g, const CEOptions& opt) {
  if (!opt.unchecked) require_jacobi(g);
  auto P = std::make_shared<Presentation>("CE(" + g.id + ")");
  auto c = add_letters(*P, g.names, g.weights, form_letter, 1, 1, Sort::Form);
  Letter d = P->add_generator({"δ_CE", 1, 0, Sort::Delta});
  add_ce_rules(*P, g.f, d, c);
  P->finalize();
  return {"CE", P->name(), g.id, P, nullptr};
}

AlgebraInstance build_H_lie(const LieData& g, const HLieOptions& opt) {
  if (!opt.unchecked) require_jacobi(g);
  std::string name = "H_lie(" + g.id + ")";
  if (opt.zero_r) name += "[r=0]";
  if (opt.keep_delta_square) name += "[δ²≠0]";
  auto P = std::make_shared<Presentation>(name);
  auto e = add_letters(*P, g.names, g.weights, lie_letter, 0, -1, Sort::Distribution);
  auto c = add_letters(*P, g.names, g.weights, form_letter, 1, 1, Sort::Form);
  Letter d = P->add_generator({"δ", 1, 0, Sort::Delta});
  add_lie_rules(*P, g.f, e);
  add_coadjoint_rules(*P, g.f, e, c);
  add_ce_rules(*P, g.f, d, c);
  if (opt.keep_delta_square) P->keep_square(d);
  P->finalize();

  auto h = std::make_shared<HopfStructure>(P);
  for (Letter l : e) set_primitive(*h, l);
  for (Letter l : c) set_primitive(*h, l);
  Tensor dd = primitive(d);
  Element s = W({d}, -1), si = W({d}, -1);
  if (!opt.zero_r)
    for (size_t i = 0; i < e.size(); ++i) {
      dd += t2(W({e[i]}), W({c[i]}));
      s += P->normal_form(W({e[i], c[i]}));
      si += P->normal_form(W({c[i], e[i]}));
    }
  h->set(d, dd, 0, s, si);
  return {"H_lie", name, g.id, P, h};
}

AlgebraInstance build_H_G(const GroupModel& model) {
  std::string name = "H_G(" + model.id + ")";
  auto P = std::make_shared<Presentation>(name);
  if (!model.is_unipotent()) {
    P->set_points(model.finite->points, 0);
    P->finalize();
    return {"H_G", name, model.id, P, std::make_shared<HopfStructure>(P)};
  }
  auto Gp = model.unipotent;
  const UnipotentGroup& G = *Gp;
  P->set_points(G.points, 0);
  auto e = add_letters(*P, G.coords, G.weights, lie_letter, 0, -1, Sort::Distribution);
  auto c = add_letters(*P, G.coords, G.weights, form_letter, 1, 1, Sort::Form);
  Letter d = P->add_generator({"δ", 1, 0, Sort::Delta});
  add_lie_rules(*P, G.f, e);
  add_coadjoint_rules(*P, G.f, e, c);
  add_ce_rules(*P, G.f, d, c);
  Presentation* raw = P.get();
  P->set_dynamic_rule([raw, Gp, e, c, d](Letter a, Letter b) {
    const Point& g = raw->points()->point(b);
    Element out;
    if (a == d) return W({b, d});
    size_t n = Gp->n;
    for (size_t i = 0; i < n; ++i) {
      if (a == e[i])
        for (size_t k = 0; k < n; ++k) out.add({b, e[k]}, Gp->ad_inv[k][i].eval(g));
      if (a == c[i])
        for (size_t k = 0; k < n; ++k) out.add({b, c[k]}, Gp->ad[i][k].eval(g));
    }
    return out;
  });
  P->finalize();

  auto h = std::make_shared<HopfStructure>(P);
  for (Letter l : e) set_primitive(*h, l);
  for (Letter l : c) set_primitive(*h, l);
  Tensor dd = primitive(d);
  Element s = W({d}, -1), si = W({d}, -1);
  for (size_t i = 0; i < e.size(); ++i) {
    dd += t2(W({e[i]}), W({c[i]}));
    s += P->normal_form(W({e[i], c[i]}));
    si += P->normal_form(W({c[i], e[i]}));
  }
  h->set(d, dd, 0, s, si);
  return {"H_G", name, model.id, P, h};
}

static AlgebraInstance build_forms(const UnipotentGroup& G, bool with_delta) {
  std::string tag = with_delta ? "A_G" : "Omega_G";
  std::string name = tag + "(" + G.id + ")";
  auto P = std::make_shared<Presentation>(name);
  FormLetters L;
  L.x = add_letters(*P, G.coords, G.weights, same, 0, 1, Sort::Function);
  L.c = add_letters(*P, G.coords, G.weights, form_letter, 1, 1, Sort::Form);
  if (with_delta) L.d = P->add_generator({"δ_dR", 1, 0, Sort::Delta});
  add_form_rules(*P, G, L);
  P->finalize();
  auto h = std::make_shared<HopfStructure>(P);
  set_form_coproducts(*h, G, L);
  h->derive_antipodes();
  return {tag, name, G.id, P, h};
}

AlgebraInstance build_Omega_G(const UnipotentGroup& G) { return build_forms(G, false); }
AlgebraInstance build_A_G(const UnipotentGroup& G) { return build_forms(G, true); }

AlgebraInstance build_A_GGad(const UnipotentGroup& G0) {
  std::string name = "A_GGad(" + G0.id + ")";
  auto Gp = std::make_shared<const UnipotentGroup>(G0);
  const UnipotentGroup& G = *Gp;
  size_t n = G.n;
  auto P = std::make_shared<Presentation>(name);
  P->set_points(G.points, 0);
  auto e = add_letters(*P, G.coords, G.weights, lie_letter, 0, -1, Sort::Distribution);
  FormLetters L;
  L.x = add_letters(*P, G.coords, G.weights, same, 0, 1, Sort::Function);
  auto b = add_letters(*P, G.coords, G.weights, odd_vector_letter, -1, -1, Sort::Vector);
  L.c = add_letters(*P, G.coords, G.weights, form_letter, 1, 1, Sort::Form);
  L.d = P->add_generator({"δ_dR", 1, 0, Sort::Delta});

  add_lie_rules(*P, G.f, e);
  add_coadjoint_rules(*P, G.f, e, L.c);
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      // f e_i → e_i f − ξ^ad_i(f)
      Element rhs = W({e[i], L.x[k]}) - poly_element(*P, G.apply(G.adjoint_field(i), G.coord(k)), L.x);
      P->set_rule(L.x[k], e[i], rhs);
    }
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      // b_j e_i → e_i b_j − Σ_k f^k_{ij} b_k
      Element rhs = W({e[i], b[j]});
      for (size_t k = 0; k < n; ++k) rhs.add({b[k]}, -G.f[k][i][j]);
      P->set_rule(b[j], e[i], rhs);
      // c^j b_i → −b_i c^j + ⟨ξ^ad_i, c^j⟩
      P->set_rule(L.c[j], b[i], W({b[i], L.c[j]}, -1) + poly_element(*P, G.adjoint_pairing(i, j), L.x));
    }
  for (size_t i = 0; i < n; ++i) P->set_rule(L.d, b[i], W({b[i], L.d}, -1) + W({e[i]}));
  add_form_rules(*P, G, L);

  // f(g h g⁻¹) as a polynomial in h, per coordinate and point.
  Presentation* raw = P.get();
  P->set_dynamic_rule([raw, Gp, e, b, L](Letter a, Letter p) {
    const Point& g = raw->points()->point(p);
    const UnipotentGroup& G = *Gp;
    size_t n = G.n;
    if (a == L.d) return W({p, L.d});
    Element out;
    for (size_t i = 0; i < n; ++i) {
      if (a == e[i])
        for (size_t k = 0; k < n; ++k) out.add({p, e[k]}, G.ad_inv[k][i].eval(g));
      if (a == b[i])
        for (size_t k = 0; k < n; ++k) out.add({p, b[k]}, G.ad_inv[k][i].eval(g));
      if (a == L.c[i])
        for (size_t k = 0; k < n; ++k) out.add({p, L.c[k]}, G.ad[i][k].eval(g));
      if (a == L.x[i]) {
        Point ginv = G.inverse_point(g);
        std::vector<Poly> sub(2 * n);
        for (size_t k = 0; k < n; ++k) {
          sub[k] = Poly::constant(n, ginv[k]);
          sub[n + k] = G.coord(k);
        }
        Poly f = G.conjugation_pullback(G.coord(i)).substitute(sub);
        for (const auto& [m, cf] : f.terms()) {
          Word w{p};
          for (size_t k = 0; k < n; ++k)
            for (int r = 0; r < m[k]; ++r) w.push_back(L.x[k]);
          out.add(w, cf);
        }
      }
    }
    return out;
  });
  P->finalize();

  auto h = std::make_shared<HopfStructure>(P);
  for (Letter l : e) set_primitive(*h, l);
  for (Letter l : b) set_primitive(*h, l);
  set_form_coproducts(*h, G, L);
  h->derive_antipodes();
  return {"A_GGad", name, G.id, P, h};
}

std::vector<std::vector<Poly>> clifford_hessian(const UnipotentGroup& G) {
  size_t n = G.n, N = 3 * n;
  Poly w(N);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly coef = -G.ad_inv[j][i].embed(N, 0);
      if (i == j) coef += Poly::constant(N, 1);
      w += coef * Poly::var(N, n + i) * Poly::var(N, 2 * n + j);
    }
  std::vector<std::vector<Poly>> hess(n, std::vector<Poly>(n, Poly(n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly d = w.derivative(n + i).derivative(2 * n + j);
      for (const auto& [m, c] : d.terms()) {
        for (size_t k = n; k < N; ++k)
          if (m[k]) throw MalformedDefinition("Hessian of W depends on b or c");
        hess[i][j].add_term(Poly::Mono(m.begin(), m.begin() + (long)n), c);
      }
    }
  return hess;
}

AlgebraInstance build_Clifford(const UnipotentGroup& G) {
  std::string name = "Cl(" + G.id + ")";
  auto P = std::make_shared<Presentation>(name);
  auto x = add_letters(*P, G.coords, G.weights, same, 0, 1, Sort::Function);
  auto b = add_letters(*P, G.coords, G.weights, odd_vector_letter, -1, -1, Sort::Vector);
  auto c = add_letters(*P, G.coords, G.weights, form_letter, 1, 1, Sort::Form);
  auto hess = clifford_hessian(G);
  for (size_t i = 0; i < G.n; ++i)
    for (size_t j = 0; j < G.n; ++j)
      P->set_rule(c[j], b[i], W({b[i], c[j]}, -1) + poly_element(*P, hess[i][j], x));
  P->finalize();
  return {"Cl", name, G.id, P, nullptr};
}

AlgebraInstance build_Weyl_hbar(const UnipotentGroup& G) {
  std::string name = "Weyl_hbar(" + G.id + ")";
  auto P = std::make_shared<Presentation>(name);
  Letter hbar = P->add_generator({"ℏ", 0, -1, Sort::Auxiliary});
  std::vector<int> zero(G.n, 0), minus(G.n, 1);
  auto x = add_letters(*P, G.coords, zero, same, 0, 1, Sort::Function);
  std::vector<Letter> dx;
  for (size_t k = 0; k < G.n; ++k) dx.push_back(P->add_generator({"∂" + G.coords[k], 0, -1, Sort::Vector}));
  for (size_t k = 0; k < G.n; ++k) P->set_rule(dx[k], x[k], W({x[k], dx[k]}) + W({hbar}));
  P->finalize();
  return {"Weyl_hbar", name, G.id, P, nullptr};
}

AlgebraInstance build_U_hbar(const LieData& g) {
  std::string name = "U_hbar(" + g.id + ")";
  auto P = std::make_shared<Presentation>(name);
  Letter hbar = P->add_generator({"ℏ", 0, -1, Sort::Auxiliary});
  std::vector<Letter> e;
  for (const auto& s : g.names) e.push_back(P->add_generator({lie_letter(s), 0, -1, Sort::Distribution}));
  add_lie_rules(*P, g.f, e, hbar);
  P->finalize();
  return {"U_hbar", name, g.id, P, nullptr};
}

const std::vector<AlgebraInfo>& algebra_registry() {
  static const std::vector<AlgebraInfo> r = {
      {"CE", "Chevalley-Eilenberg algebra of 𝔤 with inner differential δ_CE", "Chevalley-Eilenberg algebra"},
      {"H_lie", "Hopf algebra of the 1-shifted Lie bialgebra T*[−1]𝔤, modulo δ²", "1-shifted Hopf algebra H_g"},
      {"H_G", "smash product Dist(G) ⋉ CE(𝔤)", "smash product H_G"},
      {"Omega_G", "differential forms on G as functions on T[1]G", "forms on G"},
      {"A_G", "forms on G with the de Rham differential δ_dR adjoined", "de Rham Hopf algebra A_G"},
      {"A_GGad", "Hopf model of D-modules on the adjoint quotient", "adjoint quotient algebra"},
      {"Cl", "Clifford algebra over 𝒪_G with {b, c} the Hessian of W", "Clifford relation"},
      {"Weyl_hbar", "Rees Weyl algebra of differential operators on G", "Rees Weyl algebra"},
  };
  return r;
}

AlgebraInstance build_algebra(const std::string& tag, const std::string& group) {
  if (tag == "CE") return build_CE(load_lie(group));
  if (tag == "H_lie") return build_H_lie(load_lie(group));
  bool known = false;
  for (const auto& a : algebra_registry()) known |= a.tag == tag;
  if (!known) throw UnknownSuite("unknown algebra '" + tag + "'");
  GroupModel g = load_group(group);
  if (tag == "H_G") return build_H_G(g);
  if (!g.is_unipotent()) throw UnsupportedGroup(tag + " needs a unipotent group; " + group + " is finite");
  const UnipotentGroup& G = *g.unipotent;
  if (tag == "Omega_G") return build_Omega_G(G);
  if (tag == "A_G") return build_A_G(G);
  if (tag == "A_GGad") return build_A_GGad(G);
  if (tag == "Cl") return build_Clifford(G);
  return build_Weyl_hbar(G);
}

}  // namespace gh
