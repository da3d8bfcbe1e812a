// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact over ℚ; the only
// numeric tolerance is the wall-clock budget of the Hopf axiom sweep.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gh/braiding.hpp"
#include "gh/koszul.hpp"
#include "gh/suites.hpp"
#include "gh/verifiers.hpp"

using namespace gh;

namespace {

constexpr double kHopfBudgetSeconds = 120.0;
constexpr int kDegree = 6;
constexpr int kSamples = 200;
constexpr int kBound = 4;
constexpr int kLawSamples = 50;
constexpr size_t kMaxPairDim = 81;
constexpr size_t kBcPairs = 9;

struct Outcome {
  bool pass = true;
  std::string detail;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const CheckRecord* find(const Report& r, const std::string& id) {
  for (const auto& c : r.records())
    if (c.id == id) return &c;
  return nullptr;
}

void need_record(Outcome& o, const Report& r, const std::string& id) {
  const CheckRecord* c = find(r, id);
  o.need(c != nullptr, "missing " + id);
  if (c) o.need(c->pass, id + ": " + c->got);
}

void need_report(Outcome& o, const Report& r, const std::string& what) {
  const CheckRecord* f = r.first_failure();
  o.need(r.ok(), what + (f ? " (" + f->id + ": " + f->got + ")" : ""));
}

AxiomOptions axioms() {
  AxiomOptions a;
  a.degree_bound = kDegree;
  a.samples = kSamples;
  return a;
}

const UnipotentGroup& unipotent(const std::string& id) {
  static std::vector<GroupModel> keep;
  keep.push_back(load_group(id));
  return *keep.back().unipotent;
}
const FiniteGroup& finite(const std::string& id) {
  static std::vector<GroupModel> keep;
  keep.push_back(load_group(id));
  return *keep.back().finite;
}

Outcome hopf_sweep() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<AlgebraInstance> inst;
  for (const char* l : {"ab2", "heis3", "sl2"}) inst.push_back(build_H_lie(load_lie(l)));
  for (const char* g : {"ga", "heis3", "z3", "s3"}) inst.push_back(build_H_G(load_group(g)));
  for (const char* g : {"ga", "heis3", "u4"}) inst.push_back(build_A_G(unipotent(g)));
  for (const char* g : {"ga", "heis3"}) inst.push_back(build_A_GGad(unipotent(g)));
  for (const auto& a : inst) need_report(o, check_hopf_axioms(*a.hopf, axioms(), a.name, "t"), a.name);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.need(secs < kHopfBudgetSeconds, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(inst.size()) + " instances in " + std::to_string((int)secs) + " s";
  return o;
}

Outcome delta_ideal() {
  Outcome o;
  for (const char* l : {"heis3", "sl2"}) {
    SuiteSpec s;
    s.suite = "hopf-axioms";
    s.group = l;
    s.algebra = "H_lie";
    Report r = run_suite(s);
    std::string pre = "hopf-axioms/" + std::string(l);
    need_record(o, r, pre + "/H_lie/delta-square-hopf-ideal");
    need_record(o, r, pre + "/control/zero-r");
    need_report(o, r, l);
  }
  return o;
}

Outcome group_laws() {
  Outcome o;
  for (const char* g : {"heis3", "u4"})
    need_report(o, t1g_group_law_check(unipotent(g), kLawSamples, 1, false, g), g);
  o.need(!t1g_group_law_check(unipotent("heis3"), kLawSamples, 1, true, "c").ok(), "drop-conjugation accepted");
  return o;
}

Outcome bc_coproduct() {
  Outcome o;
  const UnipotentGroup& G = unipotent("heis3");
  Report r = verify_bc_coproduct(G, "bc");
  need_report(o, r, "heis3");
  o.need(G.n * G.n == kBcPairs, "pair count");
  return o;
}

Outcome central_extension() {
  Outcome o;
  for (const char* g : {"ga", "heis3"}) {
    need_report(o, verify_central_extension(unipotent(g), axioms(), g), g);
    o.need(!verify_central_extension(unipotent(g), axioms(), g, +1).ok(), std::string(g) + ": b ↦ +b accepted");
  }
  return o;
}

Outcome factorization() {
  Outcome o;
  const UnipotentGroup& G = unipotent("heis3");
  auto D = build_double_AG(G);
  for (const auto& M : unipotent_probing_modules(D, G))
    o.need(M.dim() * M.dim() <= kMaxPairDim, M.name + " too large");
  Report r = verify_unipotent_braiding(G, kBound, "heis3");
  need_record(o, r, "heis3/factorization");
  need_report(o, r, "heis3");
  o.need(!verify_unipotent_braiding(G, kBound, "heis3", true).ok(), "dropped δ_dR⊗δ*_dR factor accepted");
  return o;
}

Outcome finite_braiding() {
  Outcome o;
  for (const char* g : {"z2", "z3", "s3"}) {
    Report r = verify_finite_braiding(finite(g), g);
    need_record(o, r, std::string(g) + "/finite-double-oracle");
    need_record(o, r, std::string(g) + "/yang-baxter");
    need_report(o, r, g);
    o.need(!verify_finite_braiding(finite(g), g, true).ok(), std::string(g) + ": corrupted R accepted");
  }
  return o;
}

Outcome ribbon() {
  Outcome o;
  Report f = verify_finite_ribbon(finite("s3"), "s3");
  need_record(o, f, "s3/theta-inverse");
  need_report(o, f, "s3");
  need_report(o, verify_unipotent_ribbon(unipotent("heis3"), kBound, "heis3"), "heis3");
  o.need(!verify_finite_ribbon(finite("s3"), "s3", true).ok(), "negated θ accepted");
  return o;
}

Outcome twist() {
  Outcome o;
  const UnipotentGroup& G = unipotent("heis3");
  Report r = verify_twist_equivalence(G, kBound, "heis3");
  for (const char* id : {"twisted-coproduct", "twist-cocycle", "twisted-r-matrix"})
    need_record(o, r, "heis3/" + std::string(id));
  need_report(o, r, "heis3");
  o.need(!verify_twist_equivalence(G, kBound, "heis3", true).ok(), "untwisted data accepted");
  return o;
}

Outcome koszul() {
  Outcome o;
  LieData h = load_lie("heis3");
  for (const char* g : {"ga", "heis3"}) {
    need_report(o, check_DR_hbar(unipotent(g), kBound, g), std::string("DR_hbar ") + g);
    o.need(!check_DR_hbar(unipotent(g), kBound, g, KoszulCorruption::FrameCoefficient).ok(),
           std::string(g) + ": corrupted frame accepted");
  }
  need_report(o, check_DR_hK(h, h, kBound, "hK"), "DR_hK");
  o.need(!check_DR_hK(h, h, kBound, "hK", KoszulCorruption::HbarSign).ok(), "opposite ℏ sign accepted");
  return o;
}

Outcome clifford() {
  Outcome o;
  for (const char* g : {"heis3", "u4"}) {
    need_report(o, verify_clifford(unipotent(g), axioms(), g), g);
    o.need(!verify_clifford(unipotent(g), axioms(), g, true).ok(), std::string(g) + ": perturbed Hessian accepted");
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  SuiteSpec a;
  a.suite = "central-extension";
  a.group = "heis3";
  a.seed = 7;
  SuiteSpec b;
  b.suite = "braiding";
  b.group = "s3";
  for (const auto& s : {a, b}) {
    Report r1 = run_suite(s), r2 = run_suite(s);
    o.need(report_document(s, r1, 0)["body"].dump() == report_document(s, r2, 1)["body"].dump(),
           s.suite + " bodies differ");
    need_report(o, r1, s.suite);
  }
  o.need(run_suite(a).records().size() >= 20, "fewer than 20 records");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hopf axioms at degree 6 on the instance sweep", hopf_sweep},
      {"Δ(δ) multiplicative and (δ²) a Hopf ideal; 𝐫 = 0 rejected", delta_ideal},
      {"first-order group law on heis3 and u4", group_laws},
      {"Δ[b,c] = [Δb,Δc] with the two-point expansion on heis3", bc_coproduct},
      {"central extension D(𝒜_G)/(δ*_dR) ≅ A_{G/G_ad}; b ↦ +b rejected", central_extension},
      {"R = R_G∘exp∘exp on heis3 probing pairs", factorization},
      {"braiding of D(𝒪_G) on simple modules against the finite-double formula", finite_braiding},
      {"ribbon element, θ = g⁻¹ on the regular module", ribbon},
      {"twist equivalence D(H_G) ≃ D(𝒜_G)^F at N = 4", twist},
      {"d² = 0 for DR_ℏ and DR_{𝔥,K}; corruptions rejected", koszul},
      {"{b_i, c^j} equals the Hessian of W", clifford},
      {"deterministic reports", determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s [%2zu] %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.empty() ? "" : " | ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", (int)criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
