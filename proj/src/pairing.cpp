#include "gh/pairing.hpp"

namespace gh {

HopfPairing::HopfPairing(HopfPtr left, HopfPtr right, LetterPairing values, int bound)
    : l_(std::move(left)), r_(std::move(right)), values_(std::move(values)), bound_(bound) {}

Scalar HopfPairing::eval(const Word& a, const Word& alpha, Path path) const {
  const Presentation &L = l_->P(), &R = r_->P();
  if (L.degree(a) + R.degree(alpha) != 0) return 0;
  if (a.empty()) return r_->counit(alpha);
  if (alpha.empty()) return l_->counit(a);
  if ((int)a.size() > bound_ || (int)alpha.size() > bound_)
    throw FiltrationExceeded("pairing of " + L.render(a) + " with " + R.render(alpha) + " exceeds N = " +
                             std::to_string(bound_));
  if (a.size() == 1 && alpha.size() == 1) return values_(a[0], alpha[0]);
  int which = path == Path::SplitLeft ? 0 : 1;
  Word key = a;
  key.push_back(-1);
  key.insert(key.end(), alpha.begin(), alpha.end());
  {
    std::shared_lock lock(mu_);
    auto it = memo_[which].find(key);
    if (it != memo_[which].end()) return it->second;
  }
  bool split_left = a.size() >= 2 && (path == Path::SplitLeft || alpha.size() < 2);
  Scalar out = 0;
  if (split_left) {
    Word head(a.begin(), a.begin() + 1), tail(a.begin() + 1, a.end());
    int ptail = L.parity(tail);
    for (const auto& [k, c] : r_->coproduct(alpha)) {
      Scalar x = eval(head, k[0], path);
      if (x == 0) continue;
      Scalar y = eval(tail, k[1], path);
      if (y == 0) continue;
      out += c * x * y * sign_of(ptail * R.parity(k[0]));
    }
  } else {
    Word head(alpha.begin(), alpha.begin() + 1), tail(alpha.begin() + 1, alpha.end());
    int phead = R.parity(head);
    for (const auto& [k, c] : l_->coproduct(a)) {
      Scalar x = eval(k[0], head, path);
      if (x == 0) continue;
      Scalar y = eval(k[1], tail, path);
      if (y == 0) continue;
      out += c * x * y * sign_of(L.parity(k[1]) * phead);
    }
  }
  std::unique_lock lock(mu_);
  memo_[which].try_emplace(key, out);
  return out;
}

Scalar HopfPairing::eval(const Element& a, const Element& alpha, Path path) const {
  Scalar s = 0;
  for (const auto& [w, c] : a)
    for (const auto& [v, d] : alpha) s += c * d * eval(w, v, path);
  return s;
}

Report check_pairing(const HopfPairing& hp, const AxiomOptions& opt, const std::string& prefix,
                     const std::string& anchor) {
  const HopfStructure &H = hp.left(), &K = hp.right();
  const Presentation &L = H.P(), &R = K.P();
  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
  int len = std::max(1, std::min(opt.degree_bound, hp.bound()) / 2);
  auto la = sample_alphabet(L, rng, opt.points), ra = sample_alphabet(R, rng, opt.points);
  auto lw = sample_words(L, la, rng, len, opt.samples), rw = sample_words(R, ra, rng, len, opt.samples);

  auto mk = [&](const std::string& name, const std::string& identity) {
    Tally t;
    t.id = prefix + "/" + name;
    t.identity = identity;
    t.anchor = anchor;
    return t;
  };
  Tally dual_l = mk("dualization-left", "⟨ab, α⟩ = ⟨a⊗b, Δα⟩");
  Tally dual_r = mk("dualization-right", "⟨a, αβ⟩ = ⟨Δa, α⊗β⟩");
  Tally rel_l = mk("relations-left", "⟨lhs − rhs, α⟩ = 0 for every rewrite rule of the left algebra");
  Tally rel_r = mk("relations-right", "⟨a, lhs − rhs⟩ = 0 for every rewrite rule of the right algebra");
  Tally anti = mk("antipode", "⟨Sa, α⟩ = ⟨a, Sα⟩");
  Tally unit = mk("unit-counit", "⟨1, α⟩ = ε(α) and ⟨a, 1⟩ = ε(a)");
  using P = HopfPairing::Path;

  auto tensor_pair = [&](const Tensor& t, const Word& x, const Word& y) {
    Scalar s = 0;
    for (const auto& [k, c] : t) s += c * sign_of(L.parity(k[1]) * R.parity(x)) * hp.eval(k[0], x) * hp.eval(k[1], y);
    return s;
  };
  auto tensor_pair_r = [&](const Word& a, const Word& b, const Tensor& t) {
    Scalar s = 0;
    for (const auto& [k, c] : t) s += c * sign_of(L.parity(b) * R.parity(k[0])) * hp.eval(a, k[0]) * hp.eval(b, k[1]);
    return s;
  };

  for (size_t i = 0; i + 1 < lw.size() && i + 1 < rw.size(); i += 2) {
    const Word &a = lw[i], &b = lw[i + 1], &al = rw[i], &be = rw[i + 1];
    Element ab = L.mul(a, b);
    Scalar lhs = hp.eval(ab, Element::word(al), P::SplitLeft);
    Scalar rhs = tensor_pair_r(a, b, K.coproduct(al));
    Scalar alt = hp.eval(ab, Element::word(al), P::SplitRight);
    std::string in = "a=" + L.render(a) + ", b=" + L.render(b) + ", α=" + R.render(al);
    dual_l.check(lhs == rhs && lhs == alt, in, rhs.get_str(), lhs.get_str() + " / " + alt.get_str());
    Element albe = R.mul(al, be);
    Scalar l2 = hp.eval(Element::word(a), albe, P::SplitRight);
    Scalar r2 = tensor_pair(H.coproduct(a), al, be);
    Scalar alt2 = hp.eval(Element::word(a), albe, P::SplitLeft);
    in = "a=" + L.render(a) + ", α=" + R.render(al) + ", β=" + R.render(be);
    dual_r.check(l2 == r2 && l2 == alt2, in, r2.get_str(), l2.get_str() + " / " + alt2.get_str());
    Scalar s1 = hp.eval(H.antipode(Element::word(a)), Element::word(al));
    Scalar s2 = hp.eval(Element::word(a), K.antipode(Element::word(al)));
    anti.check(s1 == s2, "a=" + L.render(a) + ", α=" + R.render(al), s2.get_str(), s1.get_str());
    Scalar u1 = hp.eval(Word{}, al), u2 = hp.eval(a, Word{});
    unit.check(u1 == K.counit(al) && u2 == H.counit(a), "a=" + L.render(a) + ", α=" + R.render(al),
               K.counit(al).get_str() + ", " + H.counit(a).get_str(), u1.get_str() + ", " + u2.get_str());
  }

  std::vector<Word> rprobe = rw, lprobe = lw;
  for (Letter l : ra) rprobe.push_back({l});
  for (Letter l : la) lprobe.push_back({l});
  auto rule_list = [](const Presentation& p, const std::vector<Letter>& alph) {
    std::vector<std::pair<Word, Element>> out;
    for (auto [a, b] : p.rule_pairs()) out.emplace_back(Word{a, b}, *p.rule(a, b));
    for (Letter a : alph)
      for (Letter b : alph)
        if (Presentation::is_point(a) || Presentation::is_point(b))
          if (const Element* r = p.rule(a, b)) out.emplace_back(Word{a, b}, *r);
    return out;
  };
  for (const auto& [lhs, rhs] : rule_list(L, la)) {
    for (size_t j = 0; j < rprobe.size(); j += 3) {
      const Word& al = rprobe[j];
      Scalar x = hp.eval(lhs, al), y = hp.eval(Element(rhs), Element::word(al));
      rel_l.check(x == y, L.render(lhs) + " → " + L.render(rhs) + " against " + R.render(al), y.get_str(), x.get_str());
    }
  }
  for (const auto& [lhs, rhs] : rule_list(R, ra)) {
    for (size_t j = 0; j < lprobe.size(); j += 3) {
      const Word& a = lprobe[j];
      Scalar x = hp.eval(a, lhs), y = hp.eval(Element::word(a), rhs);
      rel_r.check(x == y, L.render(a) + " against " + R.render(lhs) + " → " + R.render(rhs), y.get_str(), x.get_str());
    }
  }
  Report rep;
  for (const Tally* t : {&dual_l, &dual_r, &rel_l, &rel_r, &anti, &unit}) rep.add(t->record());
  return rep;
}

}  // namespace gh
