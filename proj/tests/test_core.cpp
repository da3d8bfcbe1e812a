#include "doctest.h"

#include "gh/algebras.hpp"
#include "gh/confluence.hpp"
#include "gh/lie.hpp"

using namespace gh;

TEST_CASE("koszul signs") {
  CHECK(koszul_sign({1}, {1}) == -1);
  CHECK(koszul_sign({0}, {1}) == 1);
  CHECK(koszul_sign({1, 1}, {1}) == 1);
}

TEST_CASE("scalar round trip") {
  CHECK(to_string(parse_scalar("-3/6")) == "-1/2");
  CHECK(parse_scalar("4") == Scalar(4));
}

TEST_CASE("normal forms in CE(heis3)") {
  auto ce = build_CE(load_lie("heis3"));
  const Presentation& P = *ce.P;
  Letter cx = P.find("c^x"), cy = P.find("c^y"), cz = P.find("c^z"), d = P.find("δ_CE");
  CHECK(P.normal_form(Word{cx, cx}).is_zero());
  // δ c^i = −c^i δ − ½ f^i_{jk} c^j c^k, summed over both orders of (x, y)
  Element want = Element::word({cz, d}, -1) - Element::word({cx, cy});
  CHECK(P.normal_form(Word{d, cz}) == want);
  CHECK(P.normal_form(P.normal_form(Word{d, cz})) == want);
}

TEST_CASE("abelian H_lie: δ and c anticommute") {
  auto ab = load_lie("ab2");
  auto h = build_H_lie(ab);
  const Presentation& P = *h.P;
  Letter c = P.find(form_letter(ab.names[0]));
  Letter d = P.find("δ");
  CHECK(P.normal_form(Word{d, c}) == Element::word({c, d}, -1));
}

TEST_CASE("confluence and Jacobi") {
  AxiomOptions opt;
  opt.degree_bound = 4;
  opt.samples = 40;
  auto sl2 = load_lie("sl2");
  CHECK(!jacobi_defect(sl2));
  CHECK(check_local_confluence(*build_CE(sl2).P, opt, "sl2", "t").ok());
  auto bad = corrupt_jacobi(sl2);
  REQUIRE(bad);
  CHECK(jacobi_defect(*bad));
  CHECK(!check_local_confluence(*build_CE(*bad, CEOptions{true}).P, opt, "bad", "t").ok());

  auto ext = std::make_shared<Presentation>("ext");
  ext->add_generator({"t", 1, 0, Sort::Form});
  ext->finalize();
  CHECK(check_local_confluence(*ext, opt, "ext", "t").ok());
  CHECK(ext->normal_form(Word{0, 0}).is_zero());
}

TEST_CASE("associativity on every registered algebra over heis3") {
  AxiomOptions opt;
  opt.degree_bound = 4;
  opt.samples = 30;
  for (const auto& info : algebra_registry()) {
    auto inst = build_algebra(info.tag, "heis3");
    CHECK_MESSAGE(check_associativity(*inst.P, opt, info.tag, "t").ok(), info.tag);
  }
}

TEST_CASE("registries") { CHECK(algebra_registry().size() == 8); }
