#include "gh/module.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gh {

int FiniteModule::weight_range() const {
  if (weight.empty()) return 0;
  auto [lo, hi] = std::minmax_element(weight.begin(), weight.end());
  return *hi - *lo;
}

Matrix FiniteModule::letter(Letter l) const {
  if (Presentation::is_point(l)) {
    if (!point_action) throw MalformedDefinition(name + ": point letters are not represented");
    return point_action(P->points()->point(l));
  }
  return gens.at((size_t)l);
}

Matrix FiniteModule::act(const Word& w) const {
  if (w.empty()) return Matrix::identity(dim());
  Matrix m = letter(w[0]);
  for (size_t i = 1; i < w.size(); ++i) m = m * letter(w[i]);
  return m;
}

Matrix FiniteModule::act(const Element& e) const {
  Matrix m(dim(), dim());
  for (const auto& [w, c] : e) m += act(w) * c;
  return m;
}

namespace {

bool has_point(const Element& e) {
  for (const auto& [w, c] : e)
    for (Letter l : w)
      if (Presentation::is_point(l)) return true;
  return false;
}

std::string short_matrix(const Matrix& m) {
  std::string s = m.str();
  return s.size() > 240 ? s.substr(0, 240) + "…" : s;
}

}  // namespace

Report check_module(const FiniteModule& M, const AxiomOptions& opt, const std::string& prefix,
                    const std::string& anchor) {
  const Presentation& P = *M.P;
  Report rep;
  Tally shape{prefix + "/shape", "one square matrix of the module dimension per static letter", anchor};
  bool ok = M.gens.size() == P.size() && M.weight.size() == M.dim();
  for (const auto& g : M.gens) ok = ok && g.rows() == M.dim() && g.cols() == M.dim();
  shape.check(ok, M.name, std::to_string(P.size()), std::to_string(M.gens.size()));
  rep.add(shape.record());
  if (!ok) return rep;

  Tally hom{prefix + "/homogeneous", "letters shift parity by their degree and weight by their weight", anchor};
  for (Letter l = 0; l < (Letter)P.size(); ++l) {
    const Matrix& g = M.gens[(size_t)l];
    for (size_t i = 0; i < M.dim(); ++i)
      for (size_t j = 0; j < M.dim(); ++j) {
        if (g(i, j) == 0) continue;
        bool good = ((M.parity[i] - M.parity[j] - P.degree(l)) & 1) == 0 &&
                    M.weight[i] == M.weight[j] + P.weight(l);
        hom.check(good, P.gen(l).name + " at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                  "homogeneous", "nonzero entry off degree");
      }
  }
  rep.add(hom.record());

  Tally rel{prefix + "/relations", "M(a)M(b) = M(rhs) for every rewrite rule a·b → rhs", anchor};
  for (Letter a = 0; a < (Letter)P.size(); ++a)
    for (Letter b = 0; b < (Letter)P.size(); ++b) {
      const Element* rhs = P.rule(a, b);
      if (!rhs || (has_point(*rhs) && !M.has_points())) continue;
      Matrix l = M.gens[(size_t)a] * M.gens[(size_t)b], r = M.act(*rhs);
      rel.check(l == r, P.render(Word{a, b}) + " → " + P.render(*rhs), short_matrix(r), short_matrix(l));
    }
  rep.add(rel.record());

  if (M.has_points() && P.has_points()) {
    Rng rng(opt.seed ^ 0x60d5ull);
    const auto& fam = *P.points();
    Tally grp{prefix + "/points", "M(δ_p)M(δ_q) = M(δ_pq) and M(δ_e) = 1", anchor};
    Tally dyn{prefix + "/point-rules", "dynamic rules between points and static letters hold in M", anchor};
    grp.check(M.point_action(fam.identity()).is_identity(), "identity", "1", "≠ 1");
    for (int s = 0; s < std::max(2, opt.points * 2); ++s) {
      Point p = fam.sample(rng), q = fam.sample(rng);
      Matrix lhs = M.point_action(p) * M.point_action(q), rhs = M.point_action(fam.mul(p, q));
      grp.check(lhs == rhs, "sampled pair", short_matrix(rhs), short_matrix(lhs));
      auto lp = fam.letter(p);
      if (!lp) continue;
      for (Letter a = 0; a < (Letter)P.size(); ++a)
        for (const Word& w : {Word{a, *lp}, Word{*lp, a}}) {
          Element nf = P.normal_form(w);
          Matrix l = M.act(w), r = M.act(nf);
          dyn.check(l == r, P.render(w), short_matrix(r), short_matrix(l));
        }
    }
    rep.add(grp.record());
    rep.add(dyn.record());
  }
  return rep;
}

FiniteModule trivial_module(PresentationPtr P, const HopfStructure& h) {
  FiniteModule M;
  M.name = "trivial";
  M.P = P;
  M.parity = {0};
  M.weight = {0};
  M.labels = {"1"};
  for (Letter l = 0; l < (Letter)P->size(); ++l) {
    Matrix m(1, 1);
    m(0, 0) = h.eps_letter(l);
    M.gens.push_back(m);
  }
  if (P->has_points()) M.point_action = [](const Point&) { return Matrix::identity(1); };
  return M;
}

std::vector<int> tensor_parity(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() * b.size());
  for (int x : a)
    for (int y : b) out.push_back((x + y) & 1);
  return out;
}

FiniteModule tensor_module(const HopfStructure& h, const FiniteModule& M, const FiniteModule& N) {
  FiniteModule T;
  T.name = M.name + "⊗" + N.name;
  T.P = M.P;
  T.parity = tensor_parity(M.parity, N.parity);
  for (size_t i = 0; i < M.dim(); ++i)
    for (size_t j = 0; j < N.dim(); ++j) {
      T.weight.push_back(M.weight[i] + N.weight[j]);
      T.labels.push_back((M.labels.empty() ? "?" : M.labels[i]) + "⊗" + (N.labels.empty() ? "?" : N.labels[j]));
    }
  const Presentation& P = *M.P;
  for (Letter l = 0; l < (Letter)P.size(); ++l) {
    Matrix g(T.dim(), T.dim());
    for (const auto& [key, c] : h.delta_letter(l))
      g += kron_graded(M.act(key[0]), M.parity, N.act(key[1]), P.degree(key[1])) * c;
    T.gens.push_back(std::move(g));
  }
  if (M.has_points() && N.has_points()) {
    auto mp = M.point_action, np = N.point_action;
    T.point_action = [mp, np](const Point& p) { return kron(mp(p), np(p)); };
  }
  return T;
}

Matrix flip(const FiniteModule& M, const FiniteModule& N) {
  size_t m = M.dim(), n = N.dim();
  Matrix t(m * n, m * n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) t(j * m + i, i * n + j) = sign_of(M.parity[i] * N.parity[j]);
  return t;
}

Matrix identity_on(const std::vector<const FiniteModule*>& mods) {
  size_t d = 1;
  for (auto* m : mods) d *= m->dim();
  return Matrix::identity(d);
}

Matrix act_tensor(const std::vector<const FiniteModule*>& mods, const std::vector<Element>& factors) {
  Matrix out = mods[0]->act(factors[0]);
  std::vector<int> par = mods[0]->parity;
  for (size_t k = 1; k < mods.size(); ++k) {
    const Element& f = factors[k];
    int deg = f.is_zero() ? 0 : mods[k]->P->degree(f.begin()->first);
    out = kron_graded(out, par, mods[k]->act(f), deg);
    par = tensor_parity(par, mods[k]->parity);
  }
  return out;
}

std::vector<Word> enumerate_words(const Presentation& P, const std::vector<Letter>& letters, int bound) {
  int odd_weight = 0, min_even = 0, odd = 0;
  for (Letter l : letters) {
    int w = std::abs(P.weight(l));
    if (P.degree(l) & 1) {
      odd_weight += w;
      ++odd;
    } else if (w == 0) {
      throw MalformedDefinition("weight-zero even letter " + P.gen(l).name + " spans an infinite piece");
    } else {
      min_even = min_even ? std::min(min_even, w) : w;
    }
  }
  int max_len = odd + (min_even ? (bound + odd_weight) / min_even : 0);
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, int wt) -> void {
    if (std::abs(wt) <= bound) out.push_back(cur);
    if ((int)cur.size() >= max_len) return;
    for (Letter l : letters) {
      if (!cur.empty() && P.rule(cur.back(), l)) continue;
      cur.push_back(l);
      self(self, wt + P.weight(l));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), WordLess());
  return out;
}

namespace {

// Incremental row echelon form over sparse vectors; the pivot of a row is its smallest index.
struct Echelon {
  using Vec = std::map<size_t, Scalar>;
  std::map<size_t, Vec> rows;

  void reduce(Vec& v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto r = rows.find(it->first);
      if (r == rows.end()) {
        ++it;
        continue;
      }
      Scalar c = it->second;
      size_t key = it->first;
      for (const auto& [k, x] : r->second) {
        Scalar& y = v[k];
        y -= c * x;
      }
      for (auto jt = v.begin(); jt != v.end();) jt = jt->second == 0 ? v.erase(jt) : std::next(jt);
      it = v.upper_bound(key);
    }
  }
  bool insert(Vec v) {
    reduce(v);
    if (v.empty()) return false;
    Scalar lead = v.begin()->second;
    for (auto& [k, x] : v) x /= lead;
    size_t p = v.begin()->first;
    for (auto& [q, row] : rows) {
      auto it = row.find(p);
      if (it == row.end()) continue;
      Scalar c = it->second;
      for (const auto& [k, x] : v) row[k] -= c * x;
      for (auto jt = row.begin(); jt != row.end();) jt = jt->second == 0 ? row.erase(jt) : std::next(jt);
    }
    rows.emplace(p, std::move(v));
    return true;
  }
};

}  // namespace

FiniteModule cyclic_module(const DoubleAlgebra& D, const std::string& name, const CyclicSpec& spec) {
  const Presentation& P = *D.P;
  Letter nA = (Letter)D.H->P().size();
  std::vector<Letter> side;
  int step = 0;
  for (Letter l = 0; l < (Letter)P.size(); ++l) {
    step = std::max(step, std::abs(P.weight(l)));
    if ((l >= nA) == spec.right) side.push_back(l);
  }
  std::vector<Word> words = enumerate_words(P, side, spec.window + step);
  std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    return std::abs(P.weight(a)) > std::abs(P.weight(b));
  });
  std::map<Word, size_t> index;
  std::vector<Word> window;
  for (const Word& w : words)
    if (std::abs(P.weight(w)) <= spec.window) {
      index[w] = window.size();
      window.push_back(w);
    }
  std::set<Letter> side_set(side.begin(), side.end());

  // Image of a basis word under one letter, projected to the window.
  auto act = [&](Letter l, const Word& w) {
    Echelon::Vec v;
    Element e = spec.right ? P.normal_form(concat(w, {l})) : P.normal_form(concat({l}, w));
    for (const auto& [u, c] : e) {
      size_t cut = 0;
      if (spec.right) {
        while (cut < u.size() && !side_set.count(u[cut])) ++cut;
      } else {
        while (cut < u.size() && side_set.count(u[cut])) ++cut;
      }
      Word keep = spec.right ? Word(u.begin() + (long)cut, u.end()) : Word(u.begin(), u.begin() + (long)cut);
      Word rest = spec.right ? Word(u.begin(), u.begin() + (long)cut) : Word(u.begin() + (long)cut, u.end());
      for (Letter k : keep)
        if (!side_set.count(k)) throw MalformedDefinition(name + ": basis word leaves the induced side");
      Scalar eps = D.hopf->counit(rest);
      if (eps == 0) continue;
      auto it = index.find(keep);
      if (it != index.end()) v[it->second] += c * eps;
    }
    for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
    return v;
  };
  auto act_vec = [&](Letter l, const Echelon::Vec& x) {
    Echelon::Vec out;
    for (const auto& [i, c] : x)
      for (const auto& [j, y] : act(l, window[i])) out[j] += c * y;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  };

  Echelon U;
  std::vector<Echelon::Vec> queue;
  auto push = [&](const Echelon::Vec& v) {
    Echelon::Vec r = v;
    U.reduce(r);
    if (r.empty()) return;
    U.insert(r);
    queue.push_back(r);
  };
  for (const Element& k : spec.kill) {
    Echelon::Vec v;
    for (const auto& [u, c] : P.normal_form(k)) {
      auto it = index.find(u);
      if (it != index.end()) v[it->second] += c;
    }
    push(v);
  }
  for (const Word& w : words)
    if (std::abs(P.weight(w)) > spec.window)
      for (Letter l = 0; l < (Letter)P.size(); ++l) push(act(l, w));
  for (size_t q = 0; q < queue.size(); ++q)
    for (Letter l = 0; l < (Letter)P.size(); ++l) push(act_vec(l, queue[q]));

  std::vector<size_t> basis;
  for (size_t i = 0; i < window.size(); ++i)
    if (!U.rows.count(i)) basis.push_back(i);
  std::reverse(basis.begin(), basis.end());
  std::map<size_t, size_t> pos;
  for (size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = k;

  FiniteModule M;
  M.name = name;
  M.P = D.P;
  for (size_t i : basis) {
    M.parity.push_back(P.parity(window[i]));
    M.weight.push_back(P.weight(window[i]));
    M.labels.push_back(window[i].empty() ? "1" : P.render(window[i]));
  }
  size_t d = basis.size();
  std::vector<Matrix> raw;
  for (Letter l = 0; l < (Letter)P.size(); ++l) {
    Matrix m(d, d);
    for (size_t k = 0; k < d; ++k) {
      Echelon::Vec v = act(l, window[basis[k]]);
      U.reduce(v);
      for (const auto& [i, c] : v) m(pos.at(i), k) = c;
    }
    raw.push_back(std::move(m));
  }
  if (!spec.right) {
    M.gens = std::move(raw);
    return M;
  }
  // v ◁ (u₁…u_k) has matrix ρ(u_k)…ρ(u₁).
  for (Letter l = 0; l < (Letter)P.size(); ++l) {
    Matrix m(d, d);
    for (const auto& [u, c] : D.hopf->antipode_letter(l, false)) {
      Matrix r = Matrix::identity(d);
      for (Letter x : u) {
        if (Presentation::is_point(x)) throw MalformedDefinition(name + ": antipode leaves the static letters");
        r = raw[(size_t)x] * r;
      }
      m += r * c;
    }
    if (P.degree(l) & 1)
      for (size_t j = 0; j < d; ++j)
        if (M.parity[j])
          for (size_t i = 0; i < d; ++i) m(i, j) = -m(i, j);
    M.gens.push_back(std::move(m));
  }
  return M;
}

namespace {

DualBasisTable dual_from_words(const DoubleAlgebra& D, const std::vector<Word>& hw, const std::vector<Word>& sw) {
  const Presentation& P = *D.P;
  Letter nA = (Letter)D.H->P().size();
  auto native = [&](const Word& w) {
    Word out = w;
    for (Letter& l : out)
      if (!Presentation::is_point(l)) l -= nA;
    return out;
  };
  std::map<std::pair<int, int>, std::vector<Word>> hp, sp;
  for (const Word& w : hw) hp[{P.weight(w), P.degree(w)}].push_back(w);
  for (const Word& w : sw) sp[{-P.weight(w), -P.degree(w)}].push_back(w);
  DualBasisTable B;
  for (const auto& [key, hs] : hp) {
    auto it = sp.find(key);
    const std::vector<Word> empty;
    const auto& ss = it == sp.end() ? empty : it->second;
    if (hs.size() != ss.size())
      throw DegeneratePairing("weight " + std::to_string(key.first) + ", degree " + std::to_string(key.second) +
                              ": " + std::to_string(hs.size()) + " words against " + std::to_string(ss.size()));
    Matrix G(hs.size(), hs.size());
    for (size_t k = 0; k < hs.size(); ++k)
      for (size_t l = 0; l < ss.size(); ++l) G(k, l) = D.pairing->eval(hs[k], native(ss[l]));
    Matrix Gi = inverse(G);
    for (size_t j = 0; j < hs.size(); ++j) {
      DualBasisTable::Entry e;
      for (size_t k = 0; k < hs.size(); ++k)
        if (Gi(j, k) != 0) e.f.add(hs[k], Gi(j, k));
      e.w = Element::word(ss[j]);
      e.weight = key.first;
      e.degree = key.second;
      B.entries.push_back(std::move(e));
    }
    ++B.blocks;
  }
  for (const auto& [key, ss] : sp)
    if (!hp.count(key)) throw DegeneratePairing("unpaired dual words of weight " + std::to_string(-key.first));
  return B;
}

}  // namespace

DualBasisTable build_dual_basis(const DoubleAlgebra& D, int max_weight, const LetterFilter& h_letters,
                                const LetterFilter& hs_letters) {
  const Presentation& P = *D.P;
  Letter nA = (Letter)D.H->P().size();
  std::vector<Letter> a, b;
  for (Letter l = 0; l < (Letter)P.size(); ++l) {
    if (l < nA && (!h_letters || h_letters(l))) a.push_back(l);
    if (l >= nA && (!hs_letters || hs_letters(l))) b.push_back(l);
  }
  return dual_from_words(D, enumerate_words(P, a, max_weight), enumerate_words(P, b, max_weight));
}

DualBasisTable build_dual_basis_finite(const DoubleAlgebra& D, const FiniteGroup& G) {
  std::vector<Word> hw{{}}, sw;
  for (Letter l = 0; l < (Letter)D.H->P().size(); ++l) hw.push_back({l});
  for (int g = 0; g < (int)G.order(); ++g) {
    auto l = D.P->points()->letter(G.point(g));
    sw.push_back(l ? Word{*l} : Word{});
  }
  return dual_from_words(D, hw, sw);
}

Matrix r_slots(const DualBasisTable& B, const std::vector<const FiniteModule*>& mods, size_t i, size_t j) {
  int cap = std::min(mods[i]->weight_range(), mods[j]->weight_range());
  size_t dim = identity_on(mods).rows();
  Matrix out(dim, dim);
  std::vector<Element> factors(mods.size(), Element::unit());
  for (const auto& e : B.entries) {
    if (std::abs(e.weight) > cap) continue;
    factors[i] = e.f;
    factors[j] = e.w;
    int s = sign_of(e.degree) * (i > j ? sign_of(e.degree * e.degree) : 1);
    out += act_tensor(mods, factors) * Scalar(s);
  }
  return out;
}

Matrix theta_matrix(const DualBasisTable& B, const HopfStructure& h, const FiniteModule& M) {
  Matrix out(M.dim(), M.dim());
  int cap = M.weight_range();
  for (const auto& e : B.entries) {
    if (std::abs(e.weight) > cap) continue;
    out += M.act(e.f) * M.act(h.antipode(e.w)) * Scalar(sign_of(e.degree));
  }
  return out;
}

}  // namespace gh
