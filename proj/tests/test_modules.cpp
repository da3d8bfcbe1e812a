#include "doctest.h"

#include <random>

#include "gh/braiding.hpp"
#include "gh/suites.hpp"

using namespace gh;

namespace {

Matrix random_matrix(size_t r, size_t c, std::mt19937& gen) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = Scalar(d(gen), 1 + (d(gen) & 1));
  return m;
}

}  // namespace

TEST_CASE("parallel kernels agree with serial references") {
  std::mt19937 gen(5);
  for (int t = 0; t < 4; ++t) {
    Matrix a = random_matrix(7, 5, gen), b = random_matrix(5, 6, gen), c = random_matrix(3, 4, gen);
    CHECK(matmul(a, b) == matmul_serial(a, b));
    CHECK(kron(a, c) == kron_serial(a, c));
  }
}

TEST_CASE("exact linear algebra") {
  std::mt19937 gen(9);
  Matrix a = random_matrix(5, 5, gen) + Matrix::identity(5) * Scalar(10);
  CHECK((a * inverse(a)).is_identity());
  Matrix n(3, 3);
  n(0, 1) = 1;
  n(1, 2) = 1;
  Matrix e = nilpotent_exp(n);
  CHECK(e(0, 2) == Scalar(1, 2));
  CHECK(rank(n) == 2);
  CHECK_THROWS_AS(inverse(n), DegeneratePairing);
}

TEST_CASE("finite doubles") {
  auto z2 = load_group("z2");
  auto D = build_double_OG(*z2.finite);
  auto B = build_dual_basis_finite(D, *z2.finite);
  FiniteModule T = trivial_module(D.P, *D.hopf);
  CHECK(r_matrix(B, T, T).is_identity());
  CHECK(verify_dual_basis(D, B, "z2").ok());
  CHECK(!verify_dual_basis(D, B, "z2", true).ok());
  CHECK(verify_finite_braiding(*z2.finite, "z2").ok());

  auto s3 = load_group("s3");
  Report r = verify_finite_braiding(*s3.finite, "s3");
  CHECK(r.ok());
  CHECK(r.body().contains("artifacts"));
  CHECK(!verify_finite_braiding(*s3.finite, "s3", true).ok());
  CHECK(verify_finite_ribbon(*s3.finite, "s3").ok());
  CHECK(!verify_finite_ribbon(*s3.finite, "s3", true).ok());
}

TEST_CASE("additive group double on probing modules") {
  auto ga = load_group("ga");
  CHECK(verify_unipotent_braiding(*ga.unipotent, 4, "ga").ok());
  CHECK(!verify_unipotent_braiding(*ga.unipotent, 4, "ga", true).ok());
  CHECK(verify_twist_equivalence(*ga.unipotent, 4, "ga").ok());
}

TEST_CASE("suite registry and deterministic reports") {
  CHECK(suite_registry().size() == 12);
  SuiteSpec s;
  s.suite = "group-laws";
  s.group = "heis3";
  s.samples = 20;
  s.seed = 7;
  Report a = run_suite(s), b = run_suite(s);
  CHECK(a.ok());
  CHECK(a.body().dump() == b.body().dump());
  const auto& recs = a.records();
  for (size_t i = 1; i < recs.size(); ++i) CHECK(recs[i - 1].id < recs[i].id);
  s.group = "nope";
  CHECK_THROWS_AS(run_suite(s), UnknownGroup);
  s.group = "heis3";
  s.suite = "nope";
  CHECK_THROWS_AS(run_suite(s), UnknownSuite);
}
