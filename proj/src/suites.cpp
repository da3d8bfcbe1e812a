#include "gh/suites.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "gh/braiding.hpp"
#include "gh/confluence.hpp"
#include "gh/koszul.hpp"
#include "gh/verifiers.hpp"

namespace gh {

namespace {

bool in(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

AxiomOptions axioms(const SuiteSpec& s) {
  AxiomOptions o;
  o.degree_bound = s.degree;
  o.samples = s.samples;
  o.seed = s.seed;
  return o;
}

std::vector<std::string> unipotent_ids() {
  std::vector<std::string> out;
  for (const auto& id : corpus_ids())
    if (load_group(id).is_unipotent()) out.push_back(id);
  return out;
}

// Lie ids that are not corpus groups (built-in Lie algebras).
std::vector<std::string> lie_only_ids() {
  std::vector<std::string> out, groups = corpus_ids();
  for (const auto& id : lie_ids())
    if (!in(groups, id)) out.push_back(id);
  return out;
}

std::vector<std::string> concat_ids(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// The same Hopf structure with ε shifted by one on its first static letter.
HopfPtr shift_counit(const HopfStructure& h) {
  auto out = std::make_shared<HopfStructure>(h.ptr());
  for (Letter l = 0; l < (Letter)h.P().size(); ++l)
    out->set(l, h.delta_letter(l), h.eps_letter(l) + Scalar(l == 0 ? 1 : 0), h.antipode_letter(l, false),
             h.antipode_letter(l, true));
  return out;
}

LieData lie_of(const std::string& id) {
  if (in(corpus_ids(), id)) {
    GroupModel g = load_group(id);
    if (!g.is_unipotent()) throw UnsupportedGroup(id + " is finite; its Lie algebra is zero");
    return lie_from_group(*g.unipotent);
  }
  return load_lie(id);
}

// Δ(δ²), ε(δ²) and S(δ²) computed without δ² = 0 vanish in the quotient by δ².
Report delta_square_ideal(const LieData& l, const std::string& prefix, bool zero_r) {
  HLieOptions free_opt;
  free_opt.keep_delta_square = true;
  free_opt.zero_r = zero_r;
  free_opt.unchecked = zero_r;
  auto F = build_H_lie(l, free_opt);
  HLieOptions q_opt;
  q_opt.zero_r = zero_r;
  q_opt.unchecked = zero_r;
  auto Q = build_H_lie(l, q_opt);
  const Presentation &P = *F.P, &R = *Q.P;
  Letter d = P.find("δ");
  Element sq = P.normal_form(Word{d, d});
  auto proj = [&](const Element& e) {
    Element out;
    for (const auto& [w, c] : e) out += R.normal_form(w) * c;
    return out;
  };
  Tally t{prefix + "/delta-square-hopf-ideal", "Δ(δ²) ∈ I⊗H + H⊗I, ε(δ²) = 0 and S(δ²) ∈ I for I = (δ²)",
          "1-shifted bialgebra quantization"};
  Tensor dsq = F.hopf->coproduct(sq);
  Slots s2 = Q.hopf->slots(2);
  Tensor img(2);
  for (const auto& [k, c] : dsq) {
    Element a = proj(Element::word(k[0])), b = proj(Element::word(k[1]));
    for (const auto& [u, x] : a)
      for (const auto& [v, y] : b) img.add({u, v}, c * x * y);
  }
  t.check(img.is_zero(), "Δ(δ²) mod δ²", "0", render(s2, img));
  t.check(F.hopf->counit(sq) == 0, "ε(δ²)", "0", F.hopf->counit(sq).get_str());
  Element s = proj(F.hopf->antipode(sq));
  t.check(s.is_zero(), "S(δ²) mod δ²", "0", R.render(s));
  Report rep;
  rep.add(t.record());
  return rep;
}

// Group definition with its multiplication broken: a cubic term in the first coordinate, or two
// entries swapped in a row of the table.
std::string corrupted_group_text(const std::string& id) {
  std::ifstream f(std::filesystem::path(corpus_dir()) / (id + ".group"));
  std::stringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str(), out;
  std::istringstream lines(text);
  bool done = false;
  for (std::string line; std::getline(lines, line);) {
    if (!done && line.rfind("mult.", 0) == 0) {
      std::string k = line.substr(5, line.find(' ') - 5);
      line += " + " + k + "1*" + k + "1*" + k + "2";
      done = true;
    } else if (!done && line.rfind("row.", 0) == 0) {
      auto eq = line.find('=');
      auto comma = line.find(',', eq);
      if (comma != std::string::npos) {
        std::string a = line.substr(eq + 1, comma - eq - 1), rest = line.substr(comma + 1);
        auto c2 = rest.find(',');
        std::string b = c2 == std::string::npos ? rest : rest.substr(0, c2);
        std::string tail = c2 == std::string::npos ? "" : rest.substr(c2);
        line = line.substr(0, eq + 1) + " " + std::regex_replace(b, std::regex("^ +"), "") + ", " +
               std::regex_replace(a, std::regex("^ +"), "") + tail;
        done = true;
      }
    }
    out += line + "\n";
  }
  return out;
}

using Runner = Report (*)(const SuiteSpec&, const std::string& target);

// ---- suites ----

Report run_hopf_axioms(const SuiteSpec& s, const std::string& t) {
  const std::string anchor = "graded Hopf algebra axioms";
  std::string pre = "hopf-axioms/" + t;
  AxiomOptions o = axioms(s);
  Report rep;
  std::vector<std::string> tags;
  bool group = in(corpus_ids(), t);
  GroupModel g;
  if (group) g = load_group(t);
  if (!group || g.is_unipotent()) tags.push_back("H_lie");
  if (group) tags.push_back("H_G");
  if (group && g.is_unipotent())
    for (const char* x : {"Omega_G", "A_G", "A_GGad"}) tags.push_back(x);
  if (!s.algebra.empty()) {
    bool known = false;
    for (const auto& a : algebra_registry()) known |= a.tag == s.algebra;
    if (!known) throw UnknownSuite("unknown algebra '" + s.algebra + "'");
    if (!in(tags, s.algebra)) throw UnsupportedGroup(s.algebra + " has no Hopf structure over " + t);
    tags = {s.algebra};
  }
  LieData l;
  if (in(tags, "H_lie")) l = lie_of(t);
  for (const auto& tag : tags) {
    AlgebraInstance a = tag == "H_lie" ? build_H_lie(l) : build_algebra(tag, t);
    rep.merge(check_hopf_axioms(*a.hopf, o, pre + "/" + tag, anchor));
  }
  if (in(tags, "H_lie")) rep.merge(delta_square_ideal(l, pre + "/H_lie", false));
  if (group && g.is_unipotent() && (s.algebra.empty() || s.algebra == "A_GGad"))
    rep.merge(verify_bc_coproduct(*g.unipotent, pre + "/A_GGad"));
  if (group && !g.is_unipotent() && s.algebra.empty()) {
    auto fun = build_finite_functions(*g.finite);
    rep.merge(check_hopf_axioms(*fun.hopf, o, pre + "/O_G", anchor));
  }

  // Control: Δ(δ) without 𝐫 when 𝔤 is nonabelian, otherwise a shifted counit.
  AxiomOptions oc = o;
  oc.degree_bound = std::min(o.degree_bound, 4);
  if (in(tags, "H_lie") && !l.abelian()) {
    HLieOptions z;
    z.zero_r = true;
    auto bad = build_H_lie(l, z);
    Report c = check_hopf_axioms(*bad.hopf, oc, pre + "/H_lie[r=0]", anchor);
    c.merge(delta_square_ideal(l, pre + "/H_lie[r=0]", true));
    rep.add_control(pre + "/control/zero-r", "Δ(δ) = δ⊗1 + 1⊗δ without 𝐫 is rejected", anchor, c);
  } else {
    AlgebraInstance a = group && !g.is_unipotent() ? build_finite_functions(*g.finite)
                        : tags[0] == "H_lie"            ? build_H_lie(l)
                                                        : build_algebra(tags[0], t);
    rep.add_control(pre + "/control/shifted-counit", "a counit shifted on one generator is rejected", anchor,
                    check_hopf_axioms(*shift_counit(*a.hopf), oc, pre + "/shifted-counit", anchor));
  }
  return rep;
}

Report run_confluence(const SuiteSpec& s, const std::string& t) {
  const std::string anchor = "normal forms and confluence";
  std::string pre = "confluence/" + t;
  AxiomOptions o = axioms(s);
  Report rep;
  bool group = in(corpus_ids(), t);
  GroupModel g;
  if (group) g = load_group(t);
  std::vector<std::string> tags;
  if (!group || g.is_unipotent()) tags = {"CE", "H_lie"};
  if (group) tags.push_back("H_G");
  if (group && g.is_unipotent())
    for (const char* x : {"Omega_G", "A_G", "A_GGad", "Cl", "Weyl_hbar"}) tags.push_back(x);
  if (!s.algebra.empty()) {
    bool known = false;
    for (const auto& a : algebra_registry()) known |= a.tag == s.algebra;
    if (!known) throw UnknownSuite("unknown algebra '" + s.algebra + "'");
    if (!in(tags, s.algebra)) throw UnsupportedGroup(s.algebra + " is not defined over " + t);
    tags = {s.algebra};
  }
  LieData l;
  if (!group || g.is_unipotent()) l = lie_of(t);
  for (const auto& tag : tags) {
    AlgebraInstance a = tag == "CE" ? build_CE(l) : tag == "H_lie" ? build_H_lie(l) : build_algebra(tag, t);
    rep.merge(check_local_confluence(*a.P, o, pre + "/" + tag + "/overlaps", anchor));
    rep.merge(check_associativity(*a.P, o, pre + "/" + tag + "/associativity", anchor));
  }
  if (!group || g.is_unipotent()) rep.merge(check_jacobi(l, pre + "/jacobi"));

  // Control: CE on structure constants that violate Jacobi (heis₃ when 𝔤 admits no such perturbation).
  auto bad = corrupt_jacobi(l.dim() ? l : load_lie("heis3"));
  if (!bad) bad = corrupt_jacobi(load_lie("heis3"));
  CEOptions u;
  u.unchecked = true;
  auto ce = build_CE(*bad, u);
  rep.add_control(pre + "/control/broken-jacobi", "CE on structure constants violating Jacobi has unresolved overlaps",
                  anchor, check_local_confluence(*ce.P, o, pre + "/CE[broken]", anchor));
  return rep;
}

Report run_dual_basis(const SuiteSpec& s, const std::string& t) {
  std::string pre = "dual-basis/" + t;
  GroupModel g = load_group(t);
  AxiomOptions o = axioms(s);
  o.degree_bound = 2;
  Report rep;
  if (!g.is_unipotent()) {
    auto D = build_double_OG(*g.finite);
    auto B = build_dual_basis_finite(D, *g.finite);
    rep.merge(verify_dual_basis(D, B, pre + "/O_G"));
    rep.merge(check_pairing(*D.pairing, o, pre + "/O_G/pairing", "dual bases"));
    rep.add_control(pre + "/control/perturbed", "a rescaled dual element is rejected", "dual bases",
                    verify_dual_basis(D, B, pre + "/O_G[perturbed]", true));
    return rep;
  }
  const UnipotentGroup& G = *g.unipotent;
  auto DO = build_double_OmegaG(G);
  rep.merge(verify_dual_basis(DO, build_dual_basis(DO, std::min(s.bound, 2)), pre + "/Omega_G"));
  auto D = build_double_AG(G);
  auto B = build_dual_basis(D, s.bound);
  rep.merge(verify_dual_basis(D, B, pre + "/A_G"));
  rep.merge(verify_delta_pairing_sign(D, s.bound, pre + "/A_G"));
  rep.merge(check_pairing(*D.pairing, o, pre + "/A_G/pairing", "dual bases"));
  rep.add_control(pre + "/control/perturbed", "a rescaled dual element is rejected", "dual bases",
                  verify_dual_basis(D, B, pre + "/A_G[perturbed]", true));
  return rep;
}

Report run_central_extension(const SuiteSpec& s, const std::string& t) {
  std::string pre = "central-extension/" + t;
  GroupModel gm = load_group(t);
  const UnipotentGroup& G = *gm.unipotent;
  AxiomOptions o = axioms(s);
  Report rep = verify_central_extension(G, o, pre);
  AxiomOptions od = o;
  od.degree_bound = std::min(o.degree_bound, 4);
  rep.merge(check_double(build_double_AG(G), od, pre + "/double"));
  rep.add_control(pre + "/control/b-plus", "the identification b ↦ +b is rejected", "central extension by δ*_dR",
                  verify_central_extension(G, o, pre + "/b-plus", +1));
  return rep;
}

Report run_braiding(const SuiteSpec& s, const std::string& t) {
  std::string pre = "braiding/" + t;
  GroupModel g = load_group(t);
  Report rep;
  if (!g.is_unipotent()) {
    rep = verify_finite_braiding(*g.finite, pre);
    rep.add_control(pre + "/control/doubled-term", "R with one term doubled is rejected", "R-matrix cocycle and Yang-Baxter",
                    verify_finite_braiding(*g.finite, pre + "/doubled-term", true));
    return rep;
  }
  rep = verify_unipotent_braiding(*g.unipotent, s.bound, pre);
  rep.add_control(pre + "/control/drop-dd", "R_G∘exp(−Σcⁱ⊗b_i) without the δ_dR⊗δ*_dR factor is rejected",
                  "R-matrix factorization", verify_unipotent_braiding(*g.unipotent, s.bound, pre + "/drop-dd", true, 0));
  return rep;
}

Report run_ribbon(const SuiteSpec& s, const std::string& t) {
  std::string pre = "ribbon/" + t;
  GroupModel g = load_group(t);
  Report rep;
  if (!g.is_unipotent()) {
    rep = verify_finite_ribbon(*g.finite, pre);
    rep.add_control(pre + "/control/negated", "−θ is rejected", "ribbon element",
                    verify_finite_ribbon(*g.finite, pre + "/negated", true));
    return rep;
  }
  rep = verify_unipotent_ribbon(*g.unipotent, s.bound, pre);
  rep.add_control(pre + "/control/negated", "−θ is rejected", "ribbon element",
                  verify_unipotent_ribbon(*g.unipotent, s.bound, pre + "/negated", true));
  return rep;
}

Report run_twist(const SuiteSpec& s, const std::string& t) {
  std::string pre = "twist-equivalence/" + t;
  GroupModel gm = load_group(t);
  const UnipotentGroup& G = *gm.unipotent;
  Report rep = verify_twist_equivalence(G, s.bound, pre);
  rep.add_control(pre + "/control/untwisted", "the untwisted coproduct and R_G in place of R_G²¹ are rejected",
                  "twist equivalence", verify_twist_equivalence(G, s.bound, pre + "/untwisted", true, 0));
  return rep;
}

Report run_koszul(const SuiteSpec& s, const std::string& t) {
  std::string pre = "koszul-complexes/" + t;
  GroupModel gm = load_group(t);
  const UnipotentGroup& G = *gm.unipotent;
  LieData h = lie_from_group(G);
  Report rep = check_DR_hbar(G, s.bound, pre + "/DR_hbar");
  rep.merge(check_DR_hK(h, h, s.bound, pre + "/DR_hK"));
  rep.add_control(pre + "/control/frame", "a corrupted frame coefficient gives d² ≠ 0", "Koszul complex differential",
                  check_DR_hbar(G, s.bound, pre + "/DR_hbar[frame]", KoszulCorruption::FrameCoefficient));
  if (!h.abelian())
    rep.add_control(pre + "/control/hbar-sign", "the opposite sign of ℏ⊗δ_CE gives d² ≠ 0",
                    "Koszul complex differential",
                    check_DR_hK(h, h, s.bound, pre + "/DR_hK[hbar]", KoszulCorruption::HbarSign));
  return rep;
}

Report run_one_shifted(const SuiteSpec&, const std::string& t) {
  std::string pre = "one-shifted/" + t;
  LieData l = lie_of(t);
  Report rep = verify_1shifted(l, pre);
  rep.merge(check_jacobi(l, pre));
  // κ rescaling is invisible on an abelian 𝔤; the control then runs on heis₃.
  LieData lc = l.abelian() ? load_lie("heis3") : l;
  rep.add_control(pre + "/control/kappa", "κ rescaled on one basis pair of " + lc.id + " is rejected",
                  "1-shifted Lie bialgebra", verify_1shifted(lc, pre + "/kappa", 2));
  return rep;
}

Report run_group_laws(const SuiteSpec& s, const std::string& t) {
  std::string pre = "group-laws/" + t;
  GroupModel g = load_group(t);
  Report rep = check_group_model(g, pre);
  if (g.is_unipotent()) rep.merge(t1g_group_law_check(*g.unipotent, s.samples, s.seed, false, pre + "/t1g"));
  Report bad;
  CheckRecord r;
  r.id = pre + "/corrupted/load";
  r.identity = "a corrupted multiplication is refused at load";
  r.anchor = "group models";
  try {
    load_group_text(corrupted_group_text(t), t + "[corrupted]");
    r.pass = true;
    r.got = "loaded";
  } catch (const GroupAxiomViolation& e) {
    r.pass = false;
    r.got = e.what();
  }
  bad.add(r);
  rep.add_control(pre + "/control/corrupted-multiplication", "a corrupted multiplication law is rejected",
                  "group models", bad);
  if (g.is_unipotent() && !lie_from_group(*g.unipotent).abelian())
    rep.add_control(pre + "/control/drop-conjugation", "(g₁g₂, v₁ + v₂) is rejected", "tangent group law",
                    t1g_group_law_check(*g.unipotent, s.samples, s.seed, true, pre + "/t1g[no-conj]"));
  return rep;
}

Report run_clifford(const SuiteSpec& s, const std::string& t) {
  std::string pre = "clifford/" + t;
  GroupModel gm = load_group(t);
  const UnipotentGroup& G = *gm.unipotent;
  AxiomOptions o = axioms(s);
  Report rep = verify_clifford(G, o, pre);
  rep.add_control(pre + "/control/perturbed-hessian", "a Hessian with one perturbed entry is rejected",
                  "Clifford relation", verify_clifford(G, o, pre + "/perturbed", true));
  return rep;
}

struct Entry {
  SuiteInfo info;
  Runner run;
  std::vector<std::string> (*targets)();
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{"hopf-axioms", "coassociativity, counit, bialgebra and antipode identities of every Hopf instance",
        "graded Hopf algebra axioms"},
       run_hopf_axioms,
       [] { return concat_ids(corpus_ids(), lie_only_ids()); }},
      {{"confluence", "overlap resolution, associativity and Jacobi for every presentation",
        "normal forms and confluence"},
       run_confluence,
       [] { return concat_ids(corpus_ids(), lie_only_ids()); }},
      {{"dual-basis", "dual bases of the paired Hopf algebras and the δ-pairing sign", "dual bases"},
       run_dual_basis, corpus_ids},
      {{"central-extension", "D(A_G) modulo δ*_dR against A_{G/G_ad}, and the double itself",
        "central extension by δ*_dR"},
       run_central_extension, unipotent_ids},
      {{"braiding", "R-matrix intertwining, cocycles, Yang-Baxter and factorization on finite modules",
        "R-matrix cocycle and Yang-Baxter"},
       run_braiding, corpus_ids},
      {{"ribbon", "ribbon element: trivial module, naturality, coproduct, g ↦ g⁻¹", "ribbon element"},
       run_ribbon, corpus_ids},
      {{"twist-equivalence", "D(A_G) twisted by R_G^{21,−1} against D(H_G)", "twist equivalence"},
       run_twist, unipotent_ids},
      {{"koszul-complexes", "d² = 0 for the ℏ-de Rham and relative Chevalley-Eilenberg complexes",
        "Koszul complex differential"},
       run_koszul, unipotent_ids},
      {{"one-shifted", "1-shifted Lie bialgebra identities of the canonical Manin triple", "1-shifted Lie bialgebra"},
       run_one_shifted,
       [] { return concat_ids(unipotent_ids(), lie_only_ids()); }},
      {{"group-laws", "group model invariants and the tangent group law", "group models"}, run_group_laws,
       corpus_ids},
      {{"clifford", "{b_i, c^j} against the Hessian of W", "Clifford relation"}, run_clifford, unipotent_ids},
  };
  return e;
}

const Entry* find_entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return &e;
  return nullptr;
}

Report run_one(const Entry& e, const SuiteSpec& s, bool strict) {
  std::vector<std::string> targets = e.targets();
  if (!s.group.empty()) {
    if (!in(targets, s.group)) {
      if (strict) throw UnsupportedGroup("suite " + e.info.name + " does not apply to " + s.group);
      return {};
    }
    targets = {s.group};
  }
  Report rep;
  for (const auto& t : targets) rep.merge(e.run(s, t));
  return rep;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> r = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    v.push_back({"all", "every suite on every applicable target", "all topics"});
    return v;
  }();
  return r;
}

std::vector<std::string> suite_targets(const std::string& suite) {
  if (suite == "all") return concat_ids(corpus_ids(), lie_only_ids());
  const Entry* e = find_entry(suite);
  if (!e) throw UnknownSuite("unknown suite '" + suite + "'");
  return e->targets();
}

Report run_suite(const SuiteSpec& spec) {
  if (!spec.group.empty() && !in(corpus_ids(), spec.group) && !in(lie_ids(), spec.group))
    throw UnknownGroup("unknown group '" + spec.group + "'");
  Report rep;
  if (spec.suite == "all") {
    for (const auto& e : entries()) {
      if (!spec.algebra.empty() && e.info.name != "hopf-axioms" && e.info.name != "confluence") continue;
      rep.merge(run_one(e, spec, false));
    }
  } else {
    const Entry* e = find_entry(spec.suite);
    if (!e) throw UnknownSuite("unknown suite '" + spec.suite + "'");
    if (!spec.algebra.empty() && spec.suite != "hopf-axioms" && spec.suite != "confluence")
      throw UnknownSuite("--algebra applies to hopf-axioms and confluence only");
    rep = run_one(*e, spec, true);
  }
  rep.sort();
  return rep;
}

nlohmann::ordered_json spec_json(const SuiteSpec& s) {
  nlohmann::ordered_json j;
  j["suite"] = s.suite;
  j["group"] = s.group;
  j["algebra"] = s.algebra;
  j["bound"] = s.bound;
  j["degree"] = s.degree;
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  return j;
}

nlohmann::ordered_json report_document(const SuiteSpec& spec, const Report& rep, double seconds) {
  nlohmann::ordered_json d;
  d["schema"] = kReportSchema;
  d["spec"] = spec_json(spec);
  d["body"] = rep.body();
  nlohmann::ordered_json timing;
  timing["seconds"] = seconds;
  d["timing"] = timing;
  nlohmann::ordered_json env;
  env["corpus"] = corpus_dir();
#ifdef _OPENMP
  env["openmp"] = true;
#else
  env["openmp"] = false;
#endif
  d["environment"] = env;
  return d;
}

}  // namespace gh
