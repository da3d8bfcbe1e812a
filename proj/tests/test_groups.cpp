#include "doctest.h"

#include "gh/group.hpp"

using namespace gh;

namespace {

// Upper-triangular 3×3 matrices with entries (x, y, z) in a ring of 6 variables.
PolyMatrix heis_matrix(size_t offset) {
  auto v = [&](size_t k) { return Poly::var(6, offset + k); };
  PolyMatrix m = poly_identity(3, 6);
  m[0][1] = v(0);
  m[1][2] = v(1);
  m[0][2] = v(2);
  return m;
}

}  // namespace

TEST_CASE("heis3 multiplication against matrix product") {
  auto gm = load_group("heis3");
  const UnipotentGroup& G = *gm.unipotent;
  PolyMatrix prod = poly_matmul(heis_matrix(0), heis_matrix(3));
  CHECK(G.mult[0] == prod[0][1]);
  CHECK(G.mult[1] == prod[1][2]);
  CHECK(G.mult[2] == prod[0][2]);
  CHECK(!G.abelian());
}

TEST_CASE("additive group") {
  auto gm = load_group("ga");
  const UnipotentGroup& G = *gm.unipotent;
  CHECK(G.abelian());
  for (size_t k = 0; k < G.n; ++k) {
    CHECK(G.mult[k] == Poly::var(2 * G.n, k) + Poly::var(2 * G.n, G.n + k));
    for (size_t i = 0; i < G.n; ++i)
      for (size_t j = 0; j < G.n; ++j) CHECK(G.f[k][i][j] == 0);
    for (size_t j = 0; j < G.n; ++j) CHECK(G.adjoint_pairing(k, j).is_zero());
  }
}

TEST_CASE("invariant vector fields on heis3") {
  auto gm = load_group("heis3");
  const UnipotentGroup& G = *gm.unipotent;
  Poly x = G.coord(0);
  // left-invariant e_y = ∂_y + x∂_z, right-invariant e_y = ∂_y
  CHECK(G.xi_r[1][0].is_zero());
  CHECK(G.xi_r[1][1] == G.one());
  CHECK(G.xi_r[1][2] == x);
  CHECK(G.xi_l[1][0].is_zero());
  CHECK(G.xi_l[1][1] == G.one());
  CHECK(G.xi_l[1][2].is_zero());
}

TEST_CASE("adjoint pairing on heis3") {
  auto gm = load_group("heis3");
  const UnipotentGroup& G = *gm.unipotent;
  CHECK(G.adjoint_pairing(0, 2) == -G.coord(1));
  for (size_t j = 0; j < 3; ++j) CHECK(G.adjoint_pairing(2, j).is_zero());
}

TEST_CASE("S3 from its table") {
  auto gm = load_group("s3");
  const FiniteGroup& G = *gm.finite;
  CHECK(G.order() == 6);
  CHECK(!G.abelian());
  std::vector<size_t> sizes;
  for (const auto& c : G.conjugacy_classes()) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 3});
  for (int a = 0; a < 6; ++a) CHECK(G.mul(a, G.inverse[(size_t)a]) == G.identity);
}

TEST_CASE("corpus and malformed documents") {
  CHECK(corpus_ids().size() == 6);
  for (const auto& id : corpus_ids()) CHECK_MESSAGE(check_group_model(load_group(id), id).ok(), id);
  CHECK_THROWS_AS(load_group("nope"), UnknownGroup);
  std::string broken =
      "name = bad\nkind = unipotent\ncoordinates = x, y\nweights = 1, 1\n"
      "mult.x = x1 + x2\nmult.y = y1 + y2 + x1*x1*x2\ninverse.x = -x\ninverse.y = -y\n";
  CHECK_THROWS_AS(load_group_text(broken, "inline"), GroupAxiomViolation);
}

TEST_CASE("first-order group law") {
  auto gm = load_group("heis3");
  CHECK(t1g_group_law_check(*gm.unipotent, 50, 3, false, "heis3").ok());
  CHECK(!t1g_group_law_check(*gm.unipotent, 50, 3, true, "heis3").ok());
}
