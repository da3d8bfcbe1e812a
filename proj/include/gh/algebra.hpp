#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gh/rng.hpp"
#include "gh/scalar.hpp"

namespace gh {

enum class Sort { Distribution, Function, Vector, Form, Delta, Auxiliary };
const char* sort_name(Sort s);

struct Generator {
  std::string name;
  int degree = 0;
  int weight = 0;
  Sort sort = Sort::Auxiliary;
};

using Letter = int32_t;
using Word = std::vector<Letter>;
constexpr Letter kPointBase = 1 << 20;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    for (Letter l : w) h = (h ^ (uint64_t)(uint32_t)l) * 1099511628211ull;
    return (size_t)h;
  }
};

Word concat(const Word& a, const Word& b);

// Finite formal sum of words; zero coefficients are never stored.
class Element {
 public:
  using Map = std::map<Word, Scalar, WordLess>;

  Element() = default;
  static Element unit(const Scalar& c = 1) { return word({}, c); }
  static Element word(const Word& w, const Scalar& c = 1) {
    Element e;
    e.add(w, c);
    return e;
  }

  void add(const Word& w, const Scalar& c);
  Scalar coeff(const Word& w) const;
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  auto begin() const { return t_.begin(); }
  auto end() const { return t_.end(); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) { return a.t_ == b.t_; }

 private:
  Map t_;
};

using Point = std::vector<Scalar>;

// Group elements used as point-mass letters δ_g. Letters are interned on first use in an
// append-only table, so equal points always map to the same letter.
class PointFamily {
 public:
  using Mul = std::function<Point(const Point&, const Point&)>;
  using Inv = std::function<Point(const Point&)>;
  using Render = std::function<std::string(const Point&)>;
  using Sample = std::function<Point(Rng&)>;

  PointFamily(std::string name, Point identity, Mul mul, Inv inv, Render render, Sample sample);

  const std::string& name() const { return name_; }
  const Point& identity() const { return identity_; }
  bool is_identity(const Point& p) const { return p == identity_; }
  // Returns std::nullopt for the identity.
  std::optional<Letter> letter(const Point& p) const;
  const Point& point(Letter l) const;
  Point mul(const Point& a, const Point& b) const { return mul_(a, b); }
  Point inv(const Point& a) const { return inv_(a); }
  std::string render(Letter l) const;
  Point sample(Rng& rng) const { return sample_(rng); }

 private:
  std::string name_;
  Point identity_;
  Mul mul_;
  Inv inv_;
  Render render_;
  Sample sample_;
  mutable std::mutex mu_;
  mutable std::deque<Point> points_;
  mutable std::map<Point, Letter> index_;
};

// Generators, a total order and two-letter rewrite rules. Pairs involving point letters are
// resolved by a dynamic rule; every other out-of-order pair without an explicit rule is a
// Koszul-signed swap, and odd letters square to zero unless told otherwise.
class Presentation {
 public:
  using DynamicRule = std::function<Element(Letter, Letter)>;

  explicit Presentation(std::string name) : name_(std::move(name)) {}
  Presentation(const Presentation&) = delete;
  Presentation& operator=(const Presentation&) = delete;

  Letter add_generator(const Generator& g);
  // Point letters sort just before the static letter with index `rank`.
  void set_points(std::shared_ptr<PointFamily> family, int rank);
  void set_rule(Letter a, Letter b, const Element& rhs);
  void set_dynamic_rule(DynamicRule f) { dynamic_ = std::move(f); }
  // Exempts an odd letter from the default a·a → 0 rule.
  void keep_square(Letter a) { kept_squares_.push_back(a); }
  // Fills default rules and normalizes every right-hand side. No rules may be added after.
  void finalize();

  const std::string& name() const { return name_; }
  size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& gen(Letter l) const;
  bool has_points() const { return (bool)points_; }
  const std::shared_ptr<PointFamily>& points() const { return points_; }
  int point_rank() const { return point_rank_; }
  static bool is_point(Letter l) { return l >= kPointBase; }

  int degree(Letter l) const { return is_point(l) ? 0 : gens_.at((size_t)l).degree; }
  int degree(const Word& w) const;
  int weight(Letter l) const { return is_point(l) ? 0 : gens_.at((size_t)l).weight; }
  int weight(const Word& w) const;
  int parity(const Word& w) const { return degree(w) & 1; }
  long order_key(Letter l) const;

  Letter find(std::string_view name) const;
  std::optional<Letter> try_find(std::string_view name) const;
  Element gen_element(std::string_view name, const Scalar& c = 1) const {
    return Element::word({find(name)}, c);
  }
  Element point_element(const Point& p) const;

  const Element* rule(Letter a, Letter b) const;
  bool explicit_rule(Letter a, Letter b) const;
  // Static letter pairs carrying a rule, in a fixed order.
  std::vector<std::pair<Letter, Letter>> rule_pairs() const;
  bool is_normal(const Word& w) const;

  Element normal_form(const Element& e) const;
  Element normal_form(const Word& w) const;
  Element mul(const Element& a, const Element& b) const;
  Element mul(const Word& a, const Word& b) const { return normal_form(concat(a, b)); }
  // a·b − (−1)^{|a||b|} b·a for homogeneous a, b.
  Element graded_commutator(const Element& a, const Element& b) const;

  std::string render(const Word& w) const;
  std::string render(const Element& e) const;

  size_t depth_limit = 4000;

 private:
  const Element& nf_word(const Word& w, int depth) const;

  std::string name_;
  std::vector<Generator> gens_;
  std::map<std::string, Letter, std::less<>> by_name_;
  std::shared_ptr<PointFamily> points_;
  int point_rank_ = 0;
  std::vector<std::optional<Element>> table_;
  std::vector<bool> explicit_;
  std::vector<std::pair<Letter, Letter>> pending_;
  std::vector<Element> pending_rhs_;
  DynamicRule dynamic_;
  std::vector<Letter> kept_squares_;
  bool final_ = false;

  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, Element, WordHash> memo_;
  mutable std::unordered_map<uint64_t, Element> dyn_cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

}  // namespace gh
