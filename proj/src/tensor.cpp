#include "gh/tensor.hpp"

namespace gh {

Tensor Tensor::pure(const std::vector<Element>& factors) {
  Tensor out(factors.size());
  std::vector<std::pair<TKey, Scalar>> acc{{TKey{}, Scalar(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<TKey, Scalar>> next;
    for (const auto& [k, c] : acc)
      for (const auto& [w, d] : f) {
        TKey nk = k;
        nk.push_back(w);
        next.emplace_back(std::move(nk), c * d);
      }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) out.add(k, c);
  return out;
}

void Tensor::add(const TKey& key, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (k_ == 0) k_ = o.k_;
  for (const auto& [k, c] : o.t_) add(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (k_ == 0) k_ = o.k_;
  for (const auto& [k, c] : o.t_) add(k, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [k, c] : t_) c *= s;
  return *this;
}

Slots same_slots(const Presentation& p, size_t k) { return Slots(k, &p); }

namespace {

void expand(const Slots& s, const std::vector<Word>& raw, const Scalar& coeff, Tensor& out) {
  std::vector<std::pair<TKey, Scalar>> acc{{TKey{}, coeff}};
  for (size_t i = 0; i < raw.size(); ++i) {
    Element nf = s[i]->normal_form(raw[i]);
    if (nf.is_zero()) return;
    std::vector<std::pair<TKey, Scalar>> next;
    next.reserve(acc.size() * nf.size());
    for (const auto& [k, c] : acc)
      for (const auto& [w, d] : nf) {
        TKey nk = k;
        nk.push_back(w);
        next.emplace_back(std::move(nk), c * d);
      }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) out.add(k, c);
}

}  // namespace

Tensor tensor_normalize(const Slots& s, const Tensor& t) {
  Tensor out(t.arity());
  for (const auto& [k, c] : t) expand(s, k, c, out);
  return out;
}

Tensor tensor_mul(const Slots& s, const Tensor& a, const Tensor& b) {
  size_t k = std::max(a.arity(), b.arity());
  Tensor out(k);
  std::vector<int> pa(k);
  std::vector<Word> raw(k);
  for (const auto& [ka, ca] : a) {
    for (size_t i = 0; i < k; ++i) pa[i] = s[i]->parity(ka[i]);
    for (const auto& [kb, cb] : b) {
      int e = 0, tail = 0;
      for (size_t j = k; j-- > 0;) {
        e += s[j]->parity(kb[j]) * tail;
        tail += pa[j];
      }
      for (size_t i = 0; i < k; ++i) raw[i] = concat(ka[i], kb[i]);
      expand(s, raw, ca * cb * sign_of(e), out);
    }
  }
  return out;
}

int tensor_degree(const Slots& s, const Tensor& t) {
  if (t.is_zero()) return 0;
  int d = 0;
  const auto& k = t.begin()->first;
  for (size_t i = 0; i < k.size(); ++i) d += s[i]->degree(k[i]);
  return d;
}

Tensor graded_commutator(const Slots& s, const Tensor& a, const Tensor& b) {
  int da = tensor_degree(s, a), db = tensor_degree(s, b);
  return tensor_mul(s, a, b) - tensor_mul(s, b, a) * Scalar(sign_of(da * db));
}

Tensor swap_slots(const Slots& s, const Tensor& t, size_t i) {
  Tensor out(t.arity());
  for (const auto& [k, c] : t) {
    TKey nk = k;
    std::swap(nk[i], nk[i + 1]);
    out.add(nk, c * sign_of(s[i]->parity(k[i]) * s[i + 1]->parity(k[i + 1])));
  }
  return out;
}

std::string render(const Slots& s, const Tensor& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t) {
    if (first)
      out += c < 0 ? "−" : "";
    else
      out += c < 0 ? " − " : " + ";
    first = false;
    Scalar a = abs(c);
    if (a != 1) out += a.get_str() + "·";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) out += "⊗";
      out += s[i]->render(k[i]);
    }
  }
  return out;
}

}  // namespace gh
