#include "gh/braiding.hpp"

#include <algorithm>
#include <set>

namespace gh {

namespace {

const char* kBraid = "R-matrix cocycle and Yang-Baxter";
const char* kFactor = "R-matrix factorization";
const char* kRibbon = "ribbon element";
const char* kTwist = "twist equivalence";
const char* kDual = "dual bases";

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "×" + std::to_string(m.cols()); }

// Short description of an operator mismatch.
std::string diff(const Matrix& a, const Matrix& b) {
  size_t n = 0;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) ++n;
  return std::to_string(n) + " of " + std::to_string(a.rows() * a.cols()) + " entries differ";
}

void check_eq(Tally& t, const Matrix& got, const Matrix& want, const std::string& in) {
  bool ok = got == want;
  t.check(ok, in, "equal " + shape(want) + " operators", ok ? "equal" : diff(got, want));
}

// Δ^op(a) on M⊗N, through N⊗M and the flips.
Matrix op_coproduct(const HopfStructure& h, const FiniteModule& M, const FiniteModule& N, Letter l) {
  return flip(N, M) * tensor_module(h, N, M).letter(l) * flip(M, N);
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string pair_name(const FiniteModule& M, const FiniteModule& N) { return M.name + "⊗" + N.name; }
std::string triple_name(const FiniteModule& M, const FiniteModule& N, const FiniteModule& P) {
  return M.name + "⊗" + N.name + "⊗" + P.name;
}

std::vector<Letter> static_letters(const Presentation& P) {
  std::vector<Letter> out;
  for (Letter l = 0; l < (Letter)P.size(); ++l) out.push_back(l);
  return out;
}

std::vector<Letter> finite_letters(const DoubleAlgebra& D, const FiniteGroup& G) {
  auto out = static_letters(*D.P);
  for (int g = 0; g < (int)G.order(); ++g)
    if (auto l = D.P->points()->letter(G.point(g))) out.push_back(*l);
  return out;
}

Matrix kron3_first(const Matrix& a, size_t dim) { return kron(a, Matrix::identity(dim)); }
Matrix kron3_last(size_t dim, const Matrix& a) { return kron(Matrix::identity(dim), a); }

struct TripleChecks {
  Tally delta1, delta2, ybe;
  TripleChecks(const std::string& prefix, const std::string& what)
      : delta1{prefix + "/cocycle-left", what + ": (Δ⊗1)R = R¹³R²³ on M⊗N⊗P", kBraid},
        delta2{prefix + "/cocycle-right", what + ": (1⊗Δ)R = R¹³R¹² on M⊗N⊗P", kBraid},
        ybe{prefix + "/yang-baxter", what + ": R¹²R¹³R²³ = R²³R¹³R¹² on M⊗N⊗P", kBraid} {}

  void run(const DualBasisTable& B, const HopfStructure& h, const FiniteModule& M, const FiniteModule& N,
           const FiniteModule& P) {
    std::vector<const FiniteModule*> m{&M, &N, &P};
    std::string in = triple_name(M, N, P);
    Matrix r12 = r_slots(B, m, 0, 1), r13 = r_slots(B, m, 0, 2), r23 = r_slots(B, m, 1, 2);
    FiniteModule MN = tensor_module(h, M, N), NP = tensor_module(h, N, P);
    check_eq(delta1, r_matrix(B, MN, P), r13 * r23, in);
    check_eq(delta2, r_matrix(B, M, NP), r13 * r12, in);
    check_eq(ybe, r12 * r13 * r23, r23 * r13 * r12, in);
  }
  void add(Report& rep) const {
    rep.add(delta1.record());
    rep.add(delta2.record());
    rep.add(ybe.record());
  }
};

LetterFilter by_name(const Presentation& P, const std::vector<std::string>& names) {
  std::set<std::string> s(names.begin(), names.end());
  return [&P, s](Letter l) { return s.count(P.gen(l).name) > 0; };
}

DualBasisTable rg_table(const DoubleAlgebra& D, const UnipotentGroup& G, int N) {
  std::vector<std::string> es;
  for (const auto& k : G.coords) es.push_back(lie_letter(k));
  return build_dual_basis(D, N, by_name(*D.P, G.coords), by_name(*D.P, es));
}

// Σ cⁱ⊗b_i and δ_dR⊗δ*_dR as operators on slots (i, j) of the given modules.
Matrix cb_operator(const DoubleAlgebra& D, const UnipotentGroup& G, const std::vector<const FiniteModule*>& m,
                   size_t i, size_t j) {
  Matrix out = identity_on(m) * Scalar(0);
  std::vector<Element> f(m.size(), Element::unit());
  for (const auto& k : G.coords) {
    f[i] = D.gen(form_letter(k));
    f[j] = D.gen(odd_vector_letter(k));
    out += act_tensor(m, f);
  }
  return out;
}
Matrix dd_operator(const DoubleAlgebra& D, const std::vector<const FiniteModule*>& m, size_t i, size_t j) {
  std::vector<Element> f(m.size(), Element::unit());
  f[i] = D.gen("δ_dR");
  f[j] = D.gen("δ*_dR");
  return act_tensor(m, f);
}

std::vector<std::vector<size_t>> triples(const std::vector<FiniteModule>& mods, size_t cap) {
  std::vector<std::vector<size_t>> out;
  for (size_t a = 0; a < mods.size(); ++a)
    for (size_t b = 0; b < mods.size(); ++b)
      for (size_t c = 0; c < mods.size(); ++c)
        if (mods[a].dim() * mods[b].dim() * mods[c].dim() <= cap) out.push_back({a, b, c});
  return out;
}

}  // namespace

Report verify_dual_basis(const DoubleAlgebra& D, const DualBasisTable& B, const std::string& prefix, bool perturb) {
  Letter nA = (Letter)D.H->P().size();
  auto native = [&](const Element& e) {
    Element out;
    for (const auto& [w, c] : e) {
      Word n = w;
      for (Letter& l : n)
        if (!Presentation::is_point(l)) l -= nA;
      out.add(n, c);
    }
    return out;
  };
  std::vector<Element> ws;
  for (const auto& e : B.entries) ws.push_back(native(e.w));
  if (perturb && !ws.empty()) ws.back() *= Scalar(2);
  Tally t{prefix + "/pairing-identity", "⟨f_i, w_j⟩ = δ_ij on each (weight, degree) block", kDual};
  for (size_t i = 0; i < B.entries.size(); ++i)
    for (size_t j = 0; j < B.entries.size(); ++j) {
      const auto &a = B.entries[i], &b = B.entries[j];
      if (a.weight != b.weight || a.degree != b.degree) continue;
      Scalar v = D.pairing->eval(a.f, ws[j]);
      Scalar want = i == j ? 1 : 0;
      t.check(v == want, D.P->render(a.f) + " | " + D.P->render(B.entries[j].w), want.get_str(), v.get_str());
    }
  Report rep;
  rep.add(t.record());
  Tally n{prefix + "/block-count", "every (weight, degree) block of H has a dual block of the same size", kDual};
  n.check(B.blocks > 0, D.name, "at least one block", std::to_string(B.blocks) + " blocks");
  rep.add(n.record());
  return rep;
}

Report verify_delta_pairing_sign(const DoubleAlgebra& D, int max_weight, const std::string& prefix) {
  const Presentation &H = D.H->P(), &S = D.Hs->P();
  Letter d = H.find("δ_dR"), ds = S.find("δ*_dR");
  std::vector<Letter> a, b;
  for (Letter l = 0; l < (Letter)H.size(); ++l)
    if (l != d) a.push_back(l);
  for (Letter l = 0; l < (Letter)S.size(); ++l)
    if (l != ds) b.push_back(l);
  Tally t{prefix + "/delta-pairing-sign", "⟨u·δ_dR, v·δ*_dR⟩ = (−1)^{|v|}⟨u, v⟩", kDual};
  for (const Word& u : enumerate_words(H, a, max_weight))
    for (const Word& v : enumerate_words(S, b, max_weight)) {
      if (H.weight(u) + S.weight(v) != 0 || H.degree(u) + S.degree(v) != 0) continue;
      Scalar base = D.pairing->eval(u, v);
      Scalar got = D.pairing->eval(concat(u, {d}), concat(v, {ds}));
      Scalar want = base * Scalar(sign_of(S.degree(v)));
      t.check(got == want, H.render(u) + "·δ_dR | " + S.render(v) + "·δ*_dR", want.get_str(), got.get_str());
    }
  Report rep;
  rep.add(t.record());
  return rep;
}

Report verify_finite_braiding(const FiniteGroup& G, const std::string& prefix, bool corrupt) {
  auto D = build_double_OG(G);
  const HopfStructure& h = *D.hopf;
  auto mods = finite_double_irreps(D, G);
  auto B = build_dual_basis_finite(D, G);
  if (corrupt) B.entries.back().w *= Scalar(2);
  auto letters = finite_letters(D, G);
  Report rep;
  Tally inter{prefix + "/intertwining", "R∘Δ(a) = Δ^op(a)∘R on M⊗N for every generator and group element a", kBraid};
  Tally oracle{prefix + "/finite-double-oracle", "τ∘R(m⊗n) = (g·n)⊗m for m of grading g", kBraid};
  for (const auto& M : mods)
    for (const auto& N : mods) {
      FiniteModule MN = tensor_module(h, M, N);
      Matrix R = r_matrix(B, M, N);
      for (Letter l : letters)
        check_eq(inter, R * MN.letter(l), op_coproduct(h, M, N, l) * R, pair_name(M, N) + ", " + D.P->render(Word{l}));
      Matrix c(M.dim() * N.dim(), M.dim() * N.dim());
      for (size_t i = 0; i < M.dim(); ++i) {
        Matrix g = N.point_action(G.point(M.grading[i]));
        for (size_t j = 0; j < N.dim(); ++j)
          for (size_t k = 0; k < N.dim(); ++k) c(k * M.dim() + i, i * N.dim() + j) = g(k, j);
      }
      check_eq(oracle, flip(M, N) * R, c, pair_name(M, N));
      if (!corrupt) rep.attach(prefix + "/braiding/" + pair_name(M, N), matrix_json(flip(M, N) * R));
    }
  rep.add(inter.record());
  rep.add(oracle.record());
  TripleChecks tc(prefix, "D(𝒪_" + G.id + ")");
  for (const auto& M : mods)
    for (const auto& N : mods)
      for (const auto& P : mods) tc.run(B, h, M, N, P);
  tc.add(rep);
  Tally cnt{prefix + "/simple-modules", "Σ dim(V)²/dim End(V) over the simple modules equals |G|²", kBraid};
  Scalar s = 0;
  for (const auto& M : mods) {
    size_t d = M.dim();
    Matrix eq(letters.size() * d * d, d * d);
    for (size_t a = 0; a < letters.size(); ++a) {
      Matrix A = M.letter(letters[a]);
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
          for (size_t k = 0; k < d; ++k) {
            eq(a * d * d + i * d + j, k * d + j) += A(i, k);
            eq(a * d * d + i * d + j, i * d + k) -= A(k, j);
          }
    }
    s += Scalar((long)(d * d)) / Scalar((long)(d * d - rank(eq)));
  }
  Scalar want((long)(G.order() * G.order()));
  cnt.check(s == want, G.id, want.get_str(), s.get_str());
  rep.add(cnt.record());
  return rep;
}

Report verify_unipotent_braiding(const UnipotentGroup& G, int N, const std::string& prefix, bool corrupt,
                                 size_t max_triple) {
  auto D = build_double_AG(G);
  const HopfStructure& h = *D.hopf;
  auto mods = unipotent_probing_modules(D, G);
  auto B = build_dual_basis(D, N);
  auto BG = rg_table(D, G, N);
  auto letters = static_letters(*D.P);
  Report rep;
  Tally inter{prefix + "/intertwining", "R∘Δ(a) = Δ^op(a)∘R on M⊗N for every generator a", kBraid};
  Tally fact{prefix + "/factorization", "R = R_G∘exp(−Σcⁱ⊗b_i)∘exp(−δ_dR⊗δ*_dR) on M⊗N", kFactor};
  Tally deg0{prefix + "/degree-zero-restriction", "R = R_G on modules where only 𝒪_G acts", kFactor};
  for (const auto& M : mods)
    for (const auto& N : mods) {
      std::vector<const FiniteModule*> m{&M, &N};
      FiniteModule MN = tensor_module(h, M, N);
      Matrix RG = r_matrix(BG, M, N);
      Matrix lhs = RG * nilpotent_exp(cb_operator(D, G, m, 0, 1) * Scalar(-1));
      if (!corrupt) lhs = lhs * nilpotent_exp(dd_operator(D, m, 0, 1) * Scalar(-1));
      Matrix R = corrupt ? lhs : r_matrix(B, M, N);
      for (Letter l : letters)
        check_eq(inter, R * MN.letter(l), op_coproduct(h, M, N, l) * R, pair_name(M, N) + ", " + D.P->render(Word{l}));
      check_eq(fact, r_matrix(B, M, N), lhs, pair_name(M, N));
      bool only_functions = true;
      for (const auto* X : m)
        for (Letter l : letters)
          if (!X->gens[(size_t)l].is_zero() &&
              std::find(G.coords.begin(), G.coords.end(), D.P->gen(l).name) == G.coords.end())
            only_functions = false;
      if (only_functions) check_eq(deg0, R, RG, pair_name(M, N));
    }
  rep.add(inter.record());
  rep.add(fact.record());
  rep.add(deg0.record());
  TripleChecks tc(prefix, "D(𝒜_" + G.id + ")");
  TripleChecks tg(prefix + "/R_G", "R_G");
  for (const auto& t : triples(mods, max_triple)) {
    tc.run(B, h, mods[t[0]], mods[t[1]], mods[t[2]]);
    std::vector<const FiniteModule*> m{&mods[t[0]], &mods[t[1]], &mods[t[2]]};
    Matrix r12 = r_slots(BG, m, 0, 1), r13 = r_slots(BG, m, 0, 2), r23 = r_slots(BG, m, 1, 2);
    check_eq(tg.ybe, r12 * r13 * r23, r23 * r13 * r12, triple_name(*m[0], *m[1], *m[2]));
  }
  tc.add(rep);
  rep.add(tg.ybe.record());
  return rep;
}

namespace {

struct RibbonChecks {
  Tally unit, natural, coproduct;
  RibbonChecks(const std::string& prefix)
      : unit{prefix + "/theta-trivial", "θ acts as 1 on the trivial module", kRibbon},
        natural{prefix + "/theta-natural", "θ_M commutes with the action of every generator", kRibbon},
        coproduct{prefix + "/theta-coproduct", "θ_{M⊗N} = (R²¹R)⁻¹(θ_M⊗θ_N)", kRibbon} {}

  void run(const DualBasisTable& B, const HopfStructure& h, const std::vector<FiniteModule>& mods,
           const std::vector<Letter>& letters, const Presentation& P, const Scalar& scale) {
    auto theta = [&](const FiniteModule& M) { return theta_matrix(B, h, M) * scale; };
    FiniteModule T = trivial_module(mods[0].P, h);
    check_eq(unit, theta(T), Matrix::identity(1), "T");
    for (const auto& M : mods) {
      Matrix t = theta(M);
      for (Letter l : letters) check_eq(natural, t * M.letter(l), M.letter(l) * t, M.name + ", " + P.render(Word{l}));
    }
    for (const auto& M : mods)
      for (const auto& N : mods) {
        std::vector<const FiniteModule*> m{&M, &N};
        Matrix rr = r_slots(B, m, 1, 0) * r_slots(B, m, 0, 1);
        check_eq(coproduct, theta(tensor_module(h, M, N)), inverse(rr) * kron(theta(M), theta(N)), pair_name(M, N));
      }
  }
  void add(Report& rep) const {
    rep.add(unit.record());
    rep.add(natural.record());
    rep.add(coproduct.record());
  }
};

}  // namespace

Report verify_finite_ribbon(const FiniteGroup& G, const std::string& prefix, bool corrupt) {
  auto D = build_double_OG(G);
  auto mods = finite_double_irreps(D, G);
  FiniteModule reg = finite_regular_module(D, G);
  auto B = build_dual_basis_finite(D, G);
  Scalar scale = corrupt ? -1 : 1;
  Report rep;
  RibbonChecks rc(prefix);
  rc.run(B, *D.hopf, mods, finite_letters(D, G), *D.P, scale);
  rc.add(rep);
  Tally inv{prefix + "/theta-inverse", "θ(m) = g⁻¹·m for m of grading g, on the simple and the regular modules", kRibbon};
  auto all = mods;
  all.push_back(reg);
  for (const auto& M : all) {
    Matrix want(M.dim(), M.dim());
    for (size_t i = 0; i < M.dim(); ++i) {
      Matrix g = M.point_action(G.point(G.inverse[(size_t)M.grading[i]]));
      for (size_t k = 0; k < M.dim(); ++k) want(k, i) = g(k, i);
    }
    check_eq(inv, theta_matrix(B, *D.hopf, M) * scale, want, M.name);
  }
  rep.add(inv.record());
  return rep;
}

Report verify_unipotent_ribbon(const UnipotentGroup& G, int N, const std::string& prefix, bool corrupt) {
  auto D = build_double_AG(G);
  Letter ds = D.P->find("δ*_dR");
  std::vector<FiniteModule> mods;
  for (auto& M : unipotent_probing_modules(D, G))
    if (M.gens[(size_t)ds].is_zero()) mods.push_back(std::move(M));
  auto B = build_dual_basis(D, N);
  Report rep;
  RibbonChecks rc(prefix);
  rc.run(B, *D.hopf, mods, static_letters(*D.P), *D.P, corrupt ? Scalar(-1) : Scalar(1));
  rc.add(rep);
  return rep;
}

Report verify_twist_equivalence(const UnipotentGroup& G, int N, const std::string& prefix, bool corrupt,
                                size_t max_triple) {
  auto D = build_double_AG(G);
  auto DH = build_double_HG(G);
  const Presentation &P = *D.P, &Q = *DH.P;
  const HopfStructure& h = *D.hopf;
  auto BG = rg_table(D, G, N);
  Slots s2 = h.slots(2);
  Report rep;

  auto map_letter = [&](Letter l) -> Letter {
    if (Presentation::is_point(l)) return l;
    std::string n = Q.gen(l).name;
    if (n == "δ") n = "δ_dR";
    if (n == "δ*") n = "δ*_dR";
    return P.find(n);
  };
  auto map_word = [&](Word w) {
    for (Letter& l : w) l = map_letter(l);
    return w;
  };
  auto map_elem = [&](const Element& e) {
    Element out;
    for (const auto& [w, c] : e) out += P.normal_form(map_word(w)) * c;
    return out;
  };

  // F = Σ w_i⊗S(f_i) and F⁻¹ = Σ w_i⊗f_i over the entries of R_G, truncated at total weight N.
  std::vector<std::pair<Tensor, int>> F, Finv;
  for (const auto& e : BG.entries) {
    F.push_back({Tensor::pure({e.w, h.antipode(e.f)}), e.weight});
    Finv.push_back({Tensor::pure({e.w, e.f}), e.weight});
  }
  Tally cop{prefix + "/twisted-coproduct", "FΔ(a)F⁻¹ = Δ_{D(H_G)}(a) under the generator dictionary", kTwist};
  for (Letter q = 0; q < (Letter)Q.size(); ++q) {
    Letter l = map_letter(q);
    Tensor d = h.delta_letter(l);
    int maxw = -1000;
    for (const auto& [k, c] : d) maxw = std::max(maxw, P.weight(k[0]));
    Tensor tw(2);
    if (corrupt)
      tw = d;
    else
      for (const auto& [f, wi] : F)
        for (const auto& [g, wj] : Finv)
          if (wi + wj <= N) tw += tensor_mul(s2, tensor_mul(s2, f, d), g);
    Tensor want(2);
    for (const auto& [k, c] : DH.hopf->delta_letter(q)) {
      Element a = P.normal_form(map_word(k[0])), b = P.normal_form(map_word(k[1]));
      for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) want.add({u, v}, c * x * y);
    }
    // Terms of F⁻¹ past the truncation only reach slot-one weights below maxw − N.
    auto cut = [&](const Tensor& t) {
      Tensor o(2);
      for (const auto& [k, c] : t)
        if (P.weight(k[0]) >= maxw - N) o.add(k, c);
      return o;
    };
    Tensor a = cut(tw), b = cut(want);
    cop.check(a == b, "Δ^F(" + Q.gen(q).name + ")", render(s2, b), render(s2, a));
  }
  rep.add(cop.record());

  Tally dict{prefix + "/generator-dictionary", "ab in D(H_G) maps to the product of the images in D(𝒜_G), ε agrees", kTwist};
  for (Letter a = 0; a < (Letter)Q.size(); ++a) {
    dict.check(DH.hopf->eps_letter(a) == h.eps_letter(map_letter(a)), "ε(" + Q.gen(a).name + ")",
               DH.hopf->eps_letter(a).get_str(), h.eps_letter(map_letter(a)).get_str());
    for (Letter b = 0; b < (Letter)Q.size(); ++b) {
      Element l = map_elem(Q.normal_form(Word{a, b})), r = P.normal_form(Word{map_letter(a), map_letter(b)});
      dict.check(l == r, Q.render(Word{a, b}), P.render(r), P.render(l));
    }
  }
  rep.add(dict.record());

  auto mods = unipotent_probing_modules(D, G);
  auto B = build_dual_basis(D, N);
  auto f_op = [&](const FiniteModule& M, const FiniteModule& N2) { return inverse(r_slots(BG, {&M, &N2}, 1, 0)); };
  Tally cocycle{prefix + "/twist-cocycle", "F₁₂F_{(12)3} = F₂₃F_{1(23)} on M⊗N⊗P", kTwist};
  for (const auto& t : triples(mods, max_triple)) {
    const FiniteModule &M = mods[t[0]], &N2 = mods[t[1]], &R = mods[t[2]];
    Matrix lhs = kron3_first(f_op(M, N2), R.dim()) * f_op(tensor_module(h, M, N2), R);
    Matrix rhs = kron3_last(M.dim(), f_op(N2, R)) * f_op(M, tensor_module(h, N2, R));
    check_eq(cocycle, lhs, rhs, triple_name(M, N2, R));
  }
  rep.add(cocycle.record());

  Tally rf{prefix + "/twisted-r-matrix", "F₂₁RF⁻¹ = exp(−Σcⁱ⊗b_i)exp(−δ_dR⊗δ*_dR)R_G²¹ on M⊗N", kTwist};
  for (const auto& M : mods)
    for (const auto& N2 : mods) {
      std::vector<const FiniteModule*> m{&M, &N2};
      Matrix RG21 = r_slots(BG, m, 1, 0);
      Matrix got = inverse(r_slots(BG, m, 0, 1)) * r_matrix(B, M, N2) * RG21;
      Matrix want = nilpotent_exp(cb_operator(D, G, m, 0, 1) * Scalar(-1)) *
                    nilpotent_exp(dd_operator(D, m, 0, 1) * Scalar(-1)) * (corrupt ? r_slots(BG, m, 0, 1) : RG21);
      check_eq(rf, got, want, pair_name(M, N2));
    }
  rep.add(rf.record());
  return rep;
}

}  // namespace gh
