#include "doctest.h"

#include "gh/double.hpp"
#include "gh/koszul.hpp"
#include "gh/verifiers.hpp"

using namespace gh;

namespace {

Element L(const Presentation& P, const char* name) { return P.gen_element(name); }
Tensor t2(const Element& a, const Element& b) { return Tensor::pure({a, b}); }

AxiomOptions small() {
  AxiomOptions o;
  o.degree_bound = 4;
  o.samples = 40;
  return o;
}

}  // namespace

TEST_CASE("coproduct of δ in H_lie(heis3)") {
  auto h = build_H_lie(load_lie("heis3"));
  const Presentation& P = *h.P;
  Element one = Element::unit();
  Tensor want = t2(L(P, "δ"), one) + t2(one, L(P, "δ"));
  for (const char* k : {"x", "y", "z"})
    want += t2(L(P, ("e_" + std::string(k)).c_str()), L(P, ("c^" + std::string(k)).c_str()));
  CHECK(h.hopf->delta_letter(P.find("δ")) == want);
  // not cocommutative
  CHECK(!(h.hopf->op(want) == want));
}

TEST_CASE("coproducts in A_G") {
  auto heis = load_group("heis3");
  auto A = build_A_G(*heis.unipotent);
  const Presentation& P = *A.P;
  Element one = Element::unit();
  CHECK(A.hopf->delta_letter(P.find("z")) ==
        t2(L(P, "z"), one) + t2(one, L(P, "z")) + t2(L(P, "x"), L(P, "y")));
  CHECK(A.hopf->delta_letter(P.find("δ_dR")) == t2(L(P, "δ_dR"), one) + t2(one, L(P, "δ_dR")));
  // {δ_dR, z} = c^z + x·c^y
  CHECK(P.graded_commutator(L(P, "δ_dR"), L(P, "z")) == L(P, "c^z") + P.mul(L(P, "x"), L(P, "c^y")));

  auto ga = load_group("ga");
  auto B = build_A_G(*ga.unipotent);
  const Presentation& Q = *B.P;
  CHECK(B.hopf->delta_letter(Q.find("c^u")) == t2(L(Q, "c^u"), one) + t2(one, L(Q, "c^u")));
  CHECK(Q.graded_commutator(L(Q, "δ_dR"), L(Q, "u")) == L(Q, "c^u"));
}

TEST_CASE("Hopf axioms and their controls") {
  CHECK(check_hopf_axioms(*build_H_lie(load_lie("sl2")).hopf, small(), "sl2", "t").ok());
  auto heis = load_group("heis3");
  CHECK(check_hopf_axioms(*build_A_GGad(*heis.unipotent).hopf, small(), "ad", "t").ok());
  HLieOptions zero;
  zero.zero_r = true;
  zero.unchecked = true;
  CHECK(!check_hopf_axioms(*build_H_lie(load_lie("heis3"), zero).hopf, small(), "r0", "t").ok());
}

TEST_CASE("pairing of functions and distributions on G_a") {
  auto gm = load_group("ga");
  const UnipotentGroup& G = *gm.unipotent;
  auto forms = build_Omega_G(G);
  auto dist = build_dist_T1G(G, false);
  auto hp = pairing_forms(forms, dist, G, 4);
  Letter u = forms.P->find("u"), du = dist.P->find("e_u");
  CHECK(hp->eval(Word{u, u}, Word{du, du}) == 2);
  CHECK(hp->eval(Word{}, Word{}) == 1);
  CHECK(hp->eval(Word{}, Word{du}) == 0);
  CHECK(check_pairing(*hp, small(), "ga", "t").ok());
}

TEST_CASE("cross relations of the doubles over G_a") {
  auto gm = load_group("ga");
  const UnipotentGroup& G = *gm.unipotent;
  auto DA = build_double_AG(G, 4);
  const Presentation& P = *DA.P;
  // b·f = f·b − ξ^L_b(f)δ*_dR with ξ^L_b(u) = 1
  CHECK(P.mul(L(P, "b_u"), L(P, "u")) - P.mul(L(P, "u"), L(P, "b_u")) == -L(P, "δ*_dR"));
  for (Letter l = 0; l < (Letter)P.size(); ++l)
    CHECK(P.graded_commutator(L(P, "δ*_dR"), Element::word({l})).is_zero());

  auto DH = build_double_HG(G, 4);
  const Presentation& Q = *DH.P;
  CHECK(Q.mul(L(Q, "b_u"), L(Q, "u")) - Q.mul(L(Q, "u"), L(Q, "b_u")) == -L(Q, "δ*"));
}

TEST_CASE("Clifford relation and central extension") {
  auto heis = load_group("heis3");
  const UnipotentGroup& G = *heis.unipotent;
  auto hess = clifford_hessian(G);
  CHECK(hess[0][2] == -G.coord(1));
  AxiomOptions o = small();
  CHECK(verify_clifford(G, o, "cl").ok());
  CHECK(!verify_clifford(G, o, "cl", true).ok());
  CHECK(verify_central_extension(G, o, "ce").ok());
  CHECK(!verify_central_extension(G, o, "ce", +1).ok());
  CHECK(verify_bc_coproduct(G, "bc").ok());
}

TEST_CASE("Koszul complexes square to zero") {
  auto ga = load_group("ga");
  CHECK(check_DR_hbar(*ga.unipotent, 4, "ga").ok());
  CHECK(!check_DR_hbar(*ga.unipotent, 4, "ga", KoszulCorruption::FrameCoefficient).ok());
  auto h = load_lie("heis3");
  CHECK(check_DR_hK(h, h, 4, "hk").ok());
  CHECK(!check_DR_hK(h, h, 4, "hk", KoszulCorruption::HbarSign).ok());
}

TEST_CASE("one-shifted triple") {
  CHECK(verify_1shifted(load_lie("sl2"), "sl2").ok());
  CHECK(verify_1shifted(load_lie("ab2"), "ab2").ok());
  CHECK(!verify_1shifted(load_lie("heis3"), "heis3", 2).ok());
}
