#include "gh/confluence.hpp"

#include <algorithm>

namespace gh {

Report check_local_confluence(const Presentation& P, const AxiomOptions& opt, const std::string& prefix,
                              const std::string& anchor) {
  Rng rng(opt.seed);
  auto alphabet = sample_alphabet(P, rng, opt.points);
  Tally t{prefix + "/local-confluence", "nf(rhs(ab)·c) = nf(a·rhs(bc)) on every overlap abc", anchor};
  for (Letter a : alphabet)
    for (Letter b : alphabet) {
      const Element* ab = P.rule(a, b);
      if (!ab) continue;
      for (Letter c : alphabet) {
        const Element* bc = P.rule(b, c);
        if (!bc) continue;
        Element left, right;
        for (const auto& [w, k] : *ab) left += P.normal_form(concat(w, {c})) * k;
        for (const auto& [w, k] : *bc) right += P.normal_form(concat({a}, w)) * k;
        t.check(left == right, P.render(Word{a, b, c}), P.render(left), P.render(right));
      }
    }
  Report r;
  r.add(t.record());
  return r;
}

Report check_associativity(const Presentation& P, const AxiomOptions& opt, const std::string& prefix,
                           const std::string& anchor) {
  Rng rng(opt.seed + 1);
  auto alphabet = sample_alphabet(P, rng, opt.points);
  int len = std::max(1, opt.degree_bound / 2);
  auto us = sample_words(P, alphabet, rng, len, opt.samples);
  auto vs = sample_words(P, alphabet, rng, len, opt.samples);
  auto ws = sample_words(P, alphabet, rng, len, opt.samples);
  Tally assoc{prefix + "/associativity", "nf(nf(uv)w) = nf(u nf(vw))", anchor};
  Tally idem{prefix + "/normal-form-idempotent", "nf(nf(uv)) = nf(uv) and every output word is normal", anchor};
  Tally grade{prefix + "/grading", "degree of nf(uv) equals that of uv, and so does the weight when uv has no point letters",
              anchor};
  for (size_t s = 0; s < us.size(); ++s) {
    Element u = Element::word(us[s]), v = Element::word(vs[s]), w = Element::word(ws[s]);
    std::string in = P.render(us[s]) + " | " + P.render(vs[s]) + " | " + P.render(ws[s]);
    Element l = P.mul(P.mul(u, v), w), r = P.mul(u, P.mul(v, w));
    assoc.check(l == r, in, P.render(l), P.render(r));
    Element uv = P.mul(u, v);
    bool normal = true, graded = true;
    Word raw = concat(us[s], vs[s]);
    bool weighted = std::none_of(raw.begin(), raw.end(), Presentation::is_point);
    for (const auto& [x, c] : uv) {
      normal = normal && P.is_normal(x);
      graded = graded && P.degree(x) == P.degree(raw) && (!weighted || P.weight(x) == P.weight(raw));
    }
    idem.check(normal && P.normal_form(uv) == uv, in, P.render(uv), P.render(P.normal_form(uv)));
    grade.check(graded, in, std::to_string(P.degree(raw)) + "/" + std::to_string(P.weight(raw)), P.render(uv));
  }
  Report r;
  r.add(assoc.record());
  r.add(idem.record());
  r.add(grade.record());
  return r;
}

}  // namespace gh
