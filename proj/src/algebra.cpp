#include "gh/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace gh {

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Distribution: return "distribution";
    case Sort::Function: return "function";
    case Sort::Vector: return "vector";
    case Sort::Form: return "form";
    case Sort::Delta: return "delta";
    case Sort::Auxiliary: return "auxiliary";
  }
  return "?";
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

void Element::add(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Scalar Element::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Scalar(0) : it->second;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.t_) add(w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [w, c] : t_) c *= s;
  return *this;
}

PointFamily::PointFamily(std::string name, Point identity, Mul mul, Inv inv, Render render, Sample sample)
    : name_(std::move(name)),
      identity_(std::move(identity)),
      mul_(std::move(mul)),
      inv_(std::move(inv)),
      render_(std::move(render)),
      sample_(std::move(sample)) {}

std::optional<Letter> PointFamily::letter(const Point& p) const {
  if (p == identity_) return std::nullopt;
  std::lock_guard lock(mu_);
  auto it = index_.find(p);
  if (it != index_.end()) return it->second;
  Letter l = kPointBase + (Letter)points_.size();
  points_.push_back(p);
  index_.emplace(p, l);
  return l;
}

const Point& PointFamily::point(Letter l) const {
  std::lock_guard lock(mu_);
  return points_.at((size_t)(l - kPointBase));
}

std::string PointFamily::render(Letter l) const { return "δ" + render_(point(l)); }

Letter Presentation::add_generator(const Generator& g) {
  if (final_) throw Error("presentation " + name_ + " is finalized");
  if (by_name_.count(g.name)) throw Error("duplicate generator " + g.name);
  Letter l = (Letter)gens_.size();
  gens_.push_back(g);
  by_name_.emplace(g.name, l);
  return l;
}

void Presentation::set_points(std::shared_ptr<PointFamily> family, int rank) {
  points_ = std::move(family);
  point_rank_ = rank;
}

void Presentation::set_rule(Letter a, Letter b, const Element& rhs) {
  if (final_) throw Error("presentation " + name_ + " is finalized");
  pending_.emplace_back(a, b);
  pending_rhs_.push_back(rhs);
}

void Presentation::finalize() {
  size_t n = gens_.size();
  table_.assign(n * n, std::nullopt);
  explicit_.assign(n * n, false);
  for (size_t k = 0; k < pending_.size(); ++k) {
    auto [a, b] = pending_[k];
    table_[(size_t)a * n + (size_t)b] = pending_rhs_[k];
    explicit_[(size_t)a * n + (size_t)b] = true;
  }
  pending_.clear();
  pending_rhs_.clear();
  for (Letter a = 0; a < (Letter)n; ++a)
    for (Letter b = 0; b < (Letter)n; ++b) {
      auto& slot = table_[(size_t)a * n + (size_t)b];
      if (slot) continue;
      if (a > b)
        slot = Element::word({b, a}, sign_of(degree(a) * degree(b)));
      else if (a == b && (degree(a) & 1) &&
               std::find(kept_squares_.begin(), kept_squares_.end(), a) == kept_squares_.end())
        slot = Element();
    }
  final_ = true;
  for (auto& slot : table_)
    if (slot) {
      Element nf = normal_form(*slot);
      slot = nf;
    }
  std::unique_lock lock(mu_);
  memo_.clear();
}

const Generator& Presentation::gen(Letter l) const {
  if (l < 0 || (size_t)l >= gens_.size()) throw UnregisteredGenerator("letter " + std::to_string(l) + " in " + name_);
  return gens_[(size_t)l];
}

int Presentation::degree(const Word& w) const {
  int d = 0;
  for (Letter l : w) d += degree(l);
  return d;
}

int Presentation::weight(const Word& w) const {
  int d = 0;
  for (Letter l : w) d += weight(l);
  return d;
}

long Presentation::order_key(Letter l) const {
  if (is_point(l)) return 2L * point_rank_;
  return 2L * l + 1;
}

Letter Presentation::find(std::string_view name) const {
  auto l = try_find(name);
  if (!l) throw UnregisteredGenerator("no generator '" + std::string(name) + "' in " + name_);
  return *l;
}

std::optional<Letter> Presentation::try_find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Element Presentation::point_element(const Point& p) const {
  if (!points_) throw UnregisteredGenerator("no point letters in " + name_);
  auto l = points_->letter(p);
  return l ? Element::word({*l}) : Element::unit();
}

const Element* Presentation::rule(Letter a, Letter b) const {
  bool pa = is_point(a), pb = is_point(b);
  size_t n = gens_.size();
  if (!pa && !pb) {
    if ((size_t)a >= n || (size_t)b >= n)
      throw UnregisteredGenerator("letter outside " + name_);
    const auto& r = table_[(size_t)a * n + (size_t)b];
    return r ? &*r : nullptr;
  }
  if (!(pa && pb) && order_key(a) < order_key(b)) return nullptr;
  uint64_t key = ((uint64_t)(uint32_t)a << 32) | (uint32_t)b;
  {
    std::shared_lock lock(mu_);
    auto it = dyn_cache_.find(key);
    if (it != dyn_cache_.end()) return &it->second;
  }
  Element rhs;
  if (pa && pb) {
    Point g = points_->mul(points_->point(a), points_->point(b));
    rhs = point_element(g);
  } else if (dynamic_) {
    rhs = normal_form(dynamic_(a, b));
  } else {
    rhs = Element::word({b, a}, sign_of(degree(a) * degree(b)));
  }
  std::unique_lock lock(mu_);
  auto [it, fresh] = dyn_cache_.try_emplace(key, std::move(rhs));
  return &it->second;
}

bool Presentation::explicit_rule(Letter a, Letter b) const {
  size_t n = gens_.size();
  return !is_point(a) && !is_point(b) && explicit_[(size_t)a * n + (size_t)b];
}

std::vector<std::pair<Letter, Letter>> Presentation::rule_pairs() const {
  std::vector<std::pair<Letter, Letter>> out;
  size_t n = gens_.size();
  for (Letter a = 0; a < (Letter)n; ++a)
    for (Letter b = 0; b < (Letter)n; ++b)
      if (table_[(size_t)a * n + (size_t)b]) out.emplace_back(a, b);
  return out;
}

bool Presentation::is_normal(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (rule(w[i], w[i + 1])) return false;
  return true;
}

const Element& Presentation::nf_word(const Word& w, int depth) const {
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  if ((size_t)depth > depth_limit)
    throw NonTerminating("rewriting in " + name_ + " exceeded depth " + std::to_string(depth_limit) + " at " + render(w));
  Element out;
  size_t i = 0;
  const Element* r = nullptr;
  for (; i + 1 < w.size(); ++i)
    if ((r = rule(w[i], w[i + 1]))) break;
  if (!r) {
    out.add(w, 1);
  } else {
    Word next;
    for (const auto& [rw, rc] : *r) {
      next.assign(w.begin(), w.begin() + (long)i);
      next.insert(next.end(), rw.begin(), rw.end());
      next.insert(next.end(), w.begin() + (long)i + 2, w.end());
      const Element& sub = nf_word(next, depth + 1);
      for (const auto& [sw, sc] : sub) out.add(sw, sc * rc);
    }
  }
  std::unique_lock lock(mu_);
  auto [it, fresh] = memo_.try_emplace(w, std::move(out));
  return it->second;
}

Element Presentation::normal_form(const Word& w) const {
  if (w.size() < 2) return Element::word(w);
  return nf_word(w, 0);
}

Element Presentation::normal_form(const Element& e) const {
  Element out;
  for (const auto& [w, c] : e) {
    if (w.size() < 2) {
      out.add(w, c);
      continue;
    }
    for (const auto& [nw, nc] : nf_word(w, 0)) out.add(nw, nc * c);
  }
  return out;
}

Element Presentation::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = concat(wa, wb);
      if (w.size() < 2) {
        out.add(w, ca * cb);
        continue;
      }
      for (const auto& [nw, nc] : nf_word(w, 0)) out.add(nw, nc * ca * cb);
    }
  return out;
}

Element Presentation::graded_commutator(const Element& a, const Element& b) const {
  int da = a.is_zero() ? 0 : degree(a.begin()->first);
  int db = b.is_zero() ? 0 : degree(b.begin()->first);
  return mul(a, b) - mul(b, a) * Scalar(sign_of(da * db));
}

std::string Presentation::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "·";
    s += is_point(w[i]) ? points_->render(w[i]) : gens_.at((size_t)w[i]).name;
  }
  return s;
}

std::string Presentation::render(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (first)
      s += c < 0 ? "−" : "";
    else
      s += c < 0 ? " − " : " + ";
    first = false;
    Scalar a = abs(c);
    if (w.empty()) {
      s += a.get_str();
      continue;
    }
    if (a != 1) s += a.get_str() + "·";
    s += render(w);
  }
  return s;
}

}  // namespace gh
