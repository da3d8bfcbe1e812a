#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gh/algebra.hpp"
#include "gh/matrix.hpp"
#include "gh/poly.hpp"
#include "gh/report.hpp"

namespace gh {

using Field = std::vector<Poly>;  // Σ_k field[k] ∂_k

// Unipotent group in global polynomial coordinates with identity at the origin.
struct UnipotentGroup {
  std::string id, description;
  size_t n = 0;
  std::vector<std::string> coords;
  std::vector<int> weights;
  std::vector<Poly> mult;  // 2n variables: left factor first
  std::vector<Poly> inv;
  std::vector<std::vector<std::vector<Scalar>>> f;  // f[k][i][j]: [e_i, e_j] = Σ_k f^k_{ij} e_k
  std::vector<Field> xi_r;                          // left-invariant fields
  std::vector<Field> xi_l;                          // right-invariant fields
  PolyMatrix ad, ad_inv;                            // (Ad_g)_{ki}, (Ad_{g⁻¹})_{ki}
  PolyMatrix frame, frame_inv;                      // frame[k][i] = ξ^R_i(x_k)
  std::shared_ptr<PointFamily> points;

  Poly coord(size_t k) const { return Poly::var(n, k); }
  Poly one() const { return Poly::constant(n, 1); }
  Point mul_points(const Point& a, const Point& b) const;
  Point inverse_point(const Point& a) const;
  Poly apply(const Field& v, const Poly& p) const;
  Field adjoint_field(size_t i) const;
  // Coefficients of a field in the left-invariant frame.
  std::vector<Poly> frame_coefficients(const Field& v) const;
  // ⟨ξ^ad_{e_i}, c^j⟩ as a polynomial on G.
  Poly adjoint_pairing(size_t i, size_t j) const;
  // Polynomial in 2n variables: f ∘ m.
  Poly pullback_mult(const Poly& p) const;
  // Pullback of p under h ↦ g⁻¹hg with g symbolic: variables (g, h).
  Poly conjugation_pullback(const Poly& p) const;
  bool abelian() const;
};

struct FiniteGroup {
  std::string id, description;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  std::vector<int> inverse;
  int identity = 0;
  std::vector<std::string> generators;
  std::map<std::string, std::vector<Matrix>> declared_irreps;
  std::shared_ptr<PointFamily> points;

  size_t order() const { return names.size(); }
  int mul(int a, int b) const { return table[(size_t)a][(size_t)b]; }
  int index(const std::string& name) const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  std::vector<int> centralizer(int g) const;
  bool abelian() const;
  Point point(int g) const { return {Scalar(g)}; }
  static int element(const Point& p) { return (int)p.at(0).get_num().get_si(); }
};

// Rational irreducible representation of a subgroup, one matrix per subgroup element.
struct SubgroupIrrep {
  std::string name;
  std::vector<int> elements;
  std::vector<Matrix> images;
  size_t dim() const { return images.empty() ? 0 : images[0].rows(); }
  const Matrix& of(int g) const;
};

// Rational irreducibles of a subgroup: declared ones for the whole group, cyclotomic
// companion forms for cyclic subgroups.
std::vector<SubgroupIrrep> rational_irreps(const FiniteGroup& g, const std::vector<int>& subgroup);

struct GroupModel {
  std::string id;
  std::shared_ptr<const UnipotentGroup> unipotent;
  std::shared_ptr<const FiniteGroup> finite;
  bool is_unipotent() const { return (bool)unipotent; }
  std::string description() const { return unipotent ? unipotent->description : finite->description; }
};

GroupModel load_group_text(const std::string& text, const std::string& origin);
GroupModel load_group_file(const std::string& path);
std::string corpus_dir();
std::vector<std::string> corpus_ids();
GroupModel load_group(const std::string& id);

// Parity-free structure checks verified on load, reported separately.
Report check_group_model(const GroupModel& g, const std::string& prefix);
// ∂_t f(g₁e^{tv₁}·g₂e^{tv₂}) = ∂_t f(g₁g₂e^{t(Ad_{g₂⁻¹}v₁+v₂)}) at t = 0 on random samples.
Report t1g_group_law_check(const UnipotentGroup& g, int samples, uint64_t seed, bool drop_conjugation,
                           const std::string& prefix);

}  // namespace gh
