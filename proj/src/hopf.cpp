#include "gh/hopf.hpp"

#include <algorithm>

namespace gh {

HopfStructure::HopfStructure(PresentationPtr p) : p_(std::move(p)) {
  size_t n = p_->size();
  delta_.resize(n);
  eps_.resize(n);
  s_.resize(n);
  s_inv_.resize(n);
  set_.assign(n, false);
  s_set_.assign(n, false);
}

void HopfStructure::set(Letter l, const Tensor& delta, const Scalar& eps, const Element& s,
                        const Element& s_inv) {
  delta_.at((size_t)l) = tensor_normalize(slots(2), delta);
  eps_[(size_t)l] = eps;
  s_[(size_t)l] = p_->normal_form(s);
  s_inv_[(size_t)l] = p_->normal_form(s_inv);
  set_[(size_t)l] = true;
  s_set_[(size_t)l] = true;
}

void HopfStructure::set_coalgebra(Letter l, const Tensor& delta, const Scalar& eps) {
  delta_.at((size_t)l) = tensor_normalize(slots(2), delta);
  eps_[(size_t)l] = eps;
  set_[(size_t)l] = true;
}

void HopfStructure::derive_antipodes() {
  size_t n = p_->size();
  auto known = [&](const Word& w, Letter self) {
    for (Letter l : w)
      if (!Presentation::is_point(l) && (l == self || !s_set_[(size_t)l])) return false;
    return true;
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (Letter l = 0; l < (Letter)n; ++l) {
      if (s_set_[(size_t)l]) continue;
      if (!set_[(size_t)l]) throw UnregisteredGenerator("no coproduct for " + p_->gen(l).name);
      const Tensor& d = delta_[(size_t)l];
      bool ready = true, lead = false;
      for (const auto& [k, c] : d) {
        if (k[0] == Word{l} && k[1].empty()) {
          lead = c == 1;
          continue;
        }
        if (!known(k[0], l)) ready = false;
      }
      if (!lead) throw MalformedDefinition("coproduct of " + p_->gen(l).name + " lacks the term l⊗1");
      if (!ready) continue;
      Element s = Element::unit(eps_[(size_t)l]), si = Element::unit(eps_[(size_t)l]);
      for (const auto& [k, c] : d) {
        if (k[0] == Word{l} && k[1].empty()) continue;
        s -= p_->mul(antipode_word(k[0], false), Element::word(k[1])) * c;
        int sg = sign_of(p_->degree(k[0]) * p_->degree(k[1]));
        si -= p_->mul(Element::word(k[1]), antipode_word(k[0], true)) * Scalar(c * sg);
      }
      s_[(size_t)l] = p_->normal_form(s);
      s_inv_[(size_t)l] = p_->normal_form(si);
      s_set_[(size_t)l] = true;
      progress = true;
    }
  }
  for (Letter l = 0; l < (Letter)n; ++l)
    if (!s_set_[(size_t)l]) throw MalformedDefinition("antipode of " + p_->gen(l).name + " has circular dependencies");
  std::unique_lock lock(mu_);
  memo_.clear();
}

bool HopfStructure::complete() const {
  for (size_t l = 0; l < set_.size(); ++l)
    if (!set_[l] || !s_set_[l]) return false;
  return true;
}

Tensor HopfStructure::delta_letter(Letter l) const {
  if (Presentation::is_point(l)) {
    Tensor t(2);
    t.add({{l}, {l}}, 1);
    return t;
  }
  if (!set_.at((size_t)l)) throw UnregisteredGenerator("no coproduct for " + p_->gen(l).name);
  return delta_[(size_t)l];
}

Scalar HopfStructure::eps_letter(Letter l) const {
  if (Presentation::is_point(l)) return 1;
  return eps_.at((size_t)l);
}

Element HopfStructure::antipode_letter(Letter l, bool inverse) const {
  if (Presentation::is_point(l)) {
    const auto& fam = *p_->points();
    return p_->point_element(fam.inv(fam.point(l)));
  }
  if (!s_set_.at((size_t)l)) throw UnregisteredGenerator("no antipode for " + p_->gen(l).name);
  return inverse ? s_inv_[(size_t)l] : s_[(size_t)l];
}

const Tensor& HopfStructure::coproduct(const Word& w) const {
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  Tensor out(2);
  if (w.empty()) {
    out.add({{}, {}}, 1);
  } else if (w.size() == 1) {
    out = delta_letter(w[0]);
  } else {
    size_t h = w.size() / 2;
    Word a(w.begin(), w.begin() + (long)h), b(w.begin() + (long)h, w.end());
    out = tensor_mul(slots(2), coproduct(a), coproduct(b));
  }
  std::unique_lock lock(mu_);
  auto [it, fresh] = memo_.try_emplace(w, std::move(out));
  return it->second;
}

Tensor HopfStructure::coproduct(const Element& e) const {
  Tensor out(2);
  for (const auto& [w, c] : e) out += coproduct(w) * c;
  return out;
}

Scalar HopfStructure::counit(const Word& w) const {
  Scalar s = 1;
  for (Letter l : w) {
    s *= eps_letter(l);
    if (s == 0) break;
  }
  return s;
}

Scalar HopfStructure::counit(const Element& e) const {
  Scalar s = 0;
  for (const auto& [w, c] : e) s += c * counit(w);
  return s;
}

Element HopfStructure::antipode_word(const Word& w, bool inverse) const {
  Element out = Element::unit();
  int e = 0, seen = 0;
  for (Letter l : w) {
    int d = p_->degree(l) & 1;
    e += d * seen;
    seen += d;
  }
  for (size_t i = w.size(); i-- > 0;) out = p_->mul(out, antipode_letter(w[i], inverse));
  return out * Scalar(sign_of(e));
}

Element HopfStructure::antipode(const Element& e) const {
  Element out;
  for (const auto& [w, c] : e) out += antipode_word(w, false) * c;
  return out;
}

Element HopfStructure::antipode_inv(const Element& e) const {
  Element out;
  for (const auto& [w, c] : e) out += antipode_word(w, true) * c;
  return out;
}

Tensor HopfStructure::apply_delta(const Tensor& t, size_t slot) const {
  Tensor out(t.arity() + 1);
  for (const auto& [k, c] : t)
    for (const auto& [dk, dc] : coproduct(k[slot])) {
      TKey nk;
      nk.reserve(k.size() + 1);
      nk.insert(nk.end(), k.begin(), k.begin() + (long)slot);
      nk.push_back(dk[0]);
      nk.push_back(dk[1]);
      nk.insert(nk.end(), k.begin() + (long)slot + 1, k.end());
      out.add(nk, c * dc);
    }
  return out;
}

Tensor HopfStructure::apply_counit(const Tensor& t, size_t slot) const {
  Tensor out(t.arity() - 1);
  for (const auto& [k, c] : t) {
    Scalar e = counit(k[slot]);
    if (e == 0) continue;
    TKey nk = k;
    nk.erase(nk.begin() + (long)slot);
    out.add(nk, c * e);
  }
  return out;
}

Tensor HopfStructure::apply_antipode(const Tensor& t, size_t slot) const {
  Tensor out(t.arity());
  for (const auto& [k, c] : t)
    for (const auto& [w, d] : antipode_word(k[slot], false)) {
      TKey nk = k;
      nk[slot] = w;
      out.add(nk, c * d);
    }
  return out;
}

Element HopfStructure::multiply(const Tensor& t) const {
  Element out;
  for (const auto& [k, c] : t) out += p_->mul(k[0], k[1]) * c;
  return out;
}

std::vector<Letter> sample_alphabet(const Presentation& p, Rng& rng, int points) {
  std::vector<Letter> a;
  for (Letter l = 0; l < (Letter)p.size(); ++l) a.push_back(l);
  if (p.has_points()) {
    const auto& fam = *p.points();
    for (int i = 0, got = 0; got < points && i < 8 * points; ++i)
      if (auto l = fam.letter(fam.sample(rng))) {
        a.push_back(*l);
        ++got;
      }
  }
  return a;
}

std::vector<Word> sample_words(const Presentation& p, const std::vector<Letter>& alphabet, Rng& rng,
                               int max_len, int count) {
  std::vector<Word> out;
  if (alphabet.empty()) return {Word{}};
  for (int s = 0; s < count; ++s) {
    int len = 1 + (int)rng.below((size_t)std::max(1, max_len));
    Word raw;
    for (int i = 0; i < len; ++i) raw.push_back(alphabet[rng.below(alphabet.size())]);
    std::stable_sort(raw.begin(), raw.end(),
                     [&](Letter a, Letter b) { return p.order_key(a) < p.order_key(b); });
    Word w;
    for (Letter l : raw)
      if (w.empty() || !p.rule(w.back(), l)) w.push_back(l);
    out.push_back(w);
  }
  return out;
}

namespace {

std::string show(const HopfStructure& h, const Tensor& t) { return render(h.slots(t.arity()), t); }

Tensor as_tensor(const Element& e) {
  Tensor t(1);
  for (const auto& [w, c] : e) t.add({w}, c);
  return t;
}

}  // namespace

Report check_hopf_axioms(const HopfStructure& h, const AxiomOptions& opt, const std::string& prefix,
                         const std::string& anchor) {
  const Presentation& P = h.P();
  Rng rng(opt.seed);
  auto alphabet = sample_alphabet(P, rng, opt.points);
  std::vector<Word> words;
  for (Letter l : alphabet) words.push_back({l});
  auto sampled = sample_words(P, alphabet, rng, opt.degree_bound, opt.samples);
  words.insert(words.end(), sampled.begin(), sampled.end());

  std::vector<std::pair<Word, Element>> rules;
  for (auto [a, b] : P.rule_pairs()) rules.emplace_back(Word{a, b}, *P.rule(a, b));
  for (Letter a : alphabet)
    for (Letter b : alphabet) {
      if (!Presentation::is_point(a) && !Presentation::is_point(b)) continue;
      if (const Element* r = P.rule(a, b)) rules.emplace_back(Word{a, b}, *r);
    }

  auto mk = [&](const std::string& name, const std::string& identity) {
    Tally t;
    t.id = prefix + "/" + name;
    t.identity = identity;
    t.anchor = anchor;
    return t;
  };
  Tally coassoc = mk("coassociativity", "(Δ⊗1)Δ(w) = (1⊗Δ)Δ(w)");
  Tally counit = mk("counit", "(ε⊗1)Δ(w) = w = (1⊗ε)Δ(w)");
  Tally drule = mk("delta-on-relations", "Δ(a)Δ(b) = Δ(rhs) for every rewrite rule ab → rhs");
  Tally dmul = mk("delta-multiplicative", "Δ(nf(uv)) = Δ(u)Δ(v) on random normal words");
  Tally erule = mk("counit-multiplicative", "ε(a)ε(b) = ε(rhs) on rules and ε(nf(uv)) = ε(u)ε(v)");
  Tally sleft = mk("antipode-left", "∇(S⊗1)Δ(w) = ε(w)1");
  Tally sright = mk("antipode-right", "∇(1⊗S)Δ(w) = ε(w)1");
  Tally srule = mk("antipode-on-relations", "S(rhs) = (−1)^{|a||b|} S(b)S(a), same for S⁻¹, on every rule");
  Tally sinv = mk("antipode-inverse", "S⁻¹(S(w)) = w = S(S⁻¹(w))");

  Slots s1 = h.slots(1), s2 = h.slots(2);
  for (const Word& w : words) {
    Element we = Element::word(w);
    std::string in = P.render(w);
    const Tensor& d = h.coproduct(w);
    Tensor l3 = h.apply_delta(d, 0), r3 = h.apply_delta(d, 1);
    coassoc.check(l3 == r3, in, show(h, l3), show(h, r3));
    Tensor wt = as_tensor(we);
    Tensor cl = h.apply_counit(d, 0), cr = h.apply_counit(d, 1);
    counit.check(cl == wt && cr == wt, in, in, show(h, cl) + " | " + show(h, cr));
    Element unit = Element::unit(h.counit(w));
    Element al = h.multiply(h.apply_antipode(d, 0));
    Element ar = h.multiply(h.apply_antipode(d, 1));
    sleft.check(al == unit, in, P.render(unit), P.render(al));
    sright.check(ar == unit, in, P.render(unit), P.render(ar));
    Element back = h.antipode_inv(h.antipode(we)), fwd = h.antipode(h.antipode_inv(we));
    sinv.check(back == we && fwd == we, in, in, P.render(back) + " | " + P.render(fwd));
  }
  for (const auto& [lhs, rhs] : rules) {
    std::string in = P.render(lhs) + " → " + P.render(rhs);
    Tensor dl = tensor_mul(s2, h.delta_letter(lhs[0]), h.delta_letter(lhs[1]));
    Tensor dr = h.coproduct(rhs);
    drule.check(dl == dr, in, show(h, dl), show(h, dr));
    Scalar el = h.eps_letter(lhs[0]) * h.eps_letter(lhs[1]), er = h.counit(rhs);
    erule.check(el == er, in, el.get_str(), er.get_str());
    int sg = sign_of(P.degree(lhs[0]) * P.degree(lhs[1]));
    for (bool inv : {false, true}) {
      Element sl = P.mul(h.antipode_letter(lhs[1], inv), h.antipode_letter(lhs[0], inv)) * Scalar(sg);
      Element sr = inv ? h.antipode_inv(rhs) : h.antipode(rhs);
      srule.check(sl == sr, in + (inv ? " (S⁻¹)" : " (S)"), P.render(sl), P.render(sr));
    }
  }
  for (size_t i = 0; i + 1 < sampled.size(); i += 2) {
    const Word &u = sampled[i], &v = sampled[i + 1];
    Element uv = P.mul(u, v);
    std::string in = P.render(u) + " · " + P.render(v);
    Tensor dl = h.coproduct(uv), dr = tensor_mul(s2, h.coproduct(u), h.coproduct(v));
    dmul.check(dl == dr, in, show(h, dr), show(h, dl));
    Scalar el = h.counit(uv), er = h.counit(u) * h.counit(v);
    erule.check(el == er, in, er.get_str(), el.get_str());
  }
  Report rep;
  for (const Tally* t : {&coassoc, &counit, &drule, &dmul, &erule, &sleft, &sright, &srule, &sinv})
    rep.add(t->record());
  return rep;
}

}  // namespace gh
