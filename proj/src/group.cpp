#include "gh/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace gh {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::string render_point(const Point& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + ")";
}

Field field_bracket(const UnipotentGroup& g, const Field& a, const Field& b) {
  Field out(g.n, Poly(g.n));
  for (size_t k = 0; k < g.n; ++k)
    for (size_t l = 0; l < g.n; ++l) out[k] += a[l] * b[k].derivative(l) - b[l] * a[k].derivative(l);
  return out;
}

bool field_equal(const Field& a, const Field& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (!(a[k] - b[k]).is_zero()) return false;
  return true;
}

struct Dual {
  Scalar a, b;
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  friend Dual operator*(const Dual& x, const Scalar& s) { return {x.a * s, x.b * s}; }
};

std::vector<Poly> substitute_all(const std::vector<Poly>& ps, const std::vector<Poly>& vals) {
  std::vector<Poly> out;
  for (const auto& p : ps) out.push_back(p.substitute(vals));
  return out;
}

void derive_unipotent(UnipotentGroup& g, const std::map<std::string, std::string>& kv) {
  size_t n = g.n;
  std::vector<Poly> x(n), y(n), z(n);
  size_t n3 = 3 * n;
  for (size_t i = 0; i < n; ++i) {
    x[i] = Poly::var(n3, i);
    y[i] = Poly::var(n3, n + i);
    z[i] = Poly::var(n3, 2 * n + i);
  }
  auto cat = [](std::vector<Poly> a, const std::vector<Poly>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto lhs = substitute_all(g.mult, cat(substitute_all(g.mult, cat(x, y)), z));
  auto rhs = substitute_all(g.mult, cat(x, substitute_all(g.mult, cat(y, z))));
  for (size_t k = 0; k < n; ++k)
    if (!(lhs[k] - rhs[k]).is_zero()) throw GroupAxiomViolation(g.id + ": multiplication is not associative in " + g.coords[k]);
  std::vector<Poly> gx(n), zero(n, Poly(n));
  for (size_t i = 0; i < n; ++i) gx[i] = Poly::var(n, i);
  auto right_unit = substitute_all(g.mult, cat(gx, zero));
  auto left_unit = substitute_all(g.mult, cat(zero, gx));
  auto r_inv = substitute_all(g.mult, cat(gx, g.inv));
  auto l_inv = substitute_all(g.mult, cat(g.inv, gx));
  for (size_t k = 0; k < n; ++k) {
    if (!(right_unit[k] - gx[k]).is_zero() || !(left_unit[k] - gx[k]).is_zero())
      throw GroupAxiomViolation(g.id + ": origin is not a two-sided identity");
    if (!r_inv[k].is_zero() || !l_inv[k].is_zero())
      throw GroupAxiomViolation(g.id + ": inverse fails g·g⁻¹ = e = g⁻¹·g in " + g.coords[k]);
  }
  for (size_t k = 0; k < n; ++k) {
    if (!g.mult[k].homogeneous([&] {
          std::vector<int> w = g.weights;
          w.insert(w.end(), g.weights.begin(), g.weights.end());
          return w;
        }()))
      throw MalformedDefinition(g.id + ": multiplication of " + g.coords[k] + " is not weight-homogeneous");
  }
  g.f.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Poly::Mono a(2 * n, 0), b(2 * n, 0);
        a[i] += 1;
        a[n + j] += 1;
        b[j] += 1;
        b[n + i] += 1;
        g.f[k][i][j] = g.mult[k].coeff(a) - g.mult[k].coeff(b);
      }
  for (const auto& [key, val] : kv) {
    if (key.rfind("bracket.", 0) != 0) continue;
    auto parts = split(key.substr(8), '.');
    if (parts.size() != 2) throw MalformedDefinition(g.id + ": bad key " + key);
    auto idx = [&](const std::string& s) {
      auto it = std::find(g.coords.begin(), g.coords.end(), s);
      if (it == g.coords.end()) throw MalformedDefinition(g.id + ": unknown coordinate " + s);
      return (size_t)(it - g.coords.begin());
    };
    size_t i = idx(parts[0]), j = idx(parts[1]);
    Poly declared = Poly::parse(val, g.coords);
    for (size_t k = 0; k < n; ++k)
      if (declared.coeff([&] {
            Poly::Mono m(n, 0);
            m[k] = 1;
            return m;
          }()) != g.f[k][i][j])
        throw GroupAxiomViolation(g.id + ": declared bracket [" + parts[0] + "," + parts[1] + "] disagrees with the multiplication");
  }
  std::vector<Poly> at_zero_y(2 * n), at_zero_x(2 * n);
  for (size_t i = 0; i < n; ++i) {
    at_zero_y[i] = Poly::var(n, i);
    at_zero_y[n + i] = Poly(n);
    at_zero_x[i] = Poly(n);
    at_zero_x[n + i] = Poly::var(n, i);
  }
  g.xi_r.assign(n, Field(n));
  g.xi_l.assign(n, Field(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      g.xi_r[i][k] = g.mult[k].derivative(n + i).substitute(at_zero_y);
      g.xi_l[i][k] = g.mult[k].derivative(i).substitute(at_zero_x);
    }
  std::vector<Poly> gg(2 * n), hh(2 * n);
  for (size_t i = 0; i < n; ++i) {
    gg[i] = Poly::var(2 * n, i);
    hh[i] = Poly::var(2 * n, n + i);
  }
  std::vector<Poly> gv(gg.begin(), gg.begin() + (long)n), hv(n);
  for (size_t i = 0; i < n; ++i) hv[i] = Poly::var(2 * n, n + i);
  auto gh_ = substitute_all(g.mult, cat(gv, hv));
  auto ginv = substitute_all(g.inv, gv);
  auto conj = substitute_all(g.mult, cat(gh_, ginv));
  std::vector<Poly> h_zero(2 * n);
  for (size_t i = 0; i < n; ++i) {
    h_zero[i] = Poly::var(n, i);
    h_zero[n + i] = Poly(n);
  }
  g.ad.assign(n, std::vector<Poly>(n, Poly(n)));
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) g.ad[k][i] = conj[k].derivative(n + i).substitute(h_zero);
  g.ad_inv.assign(n, std::vector<Poly>(n, Poly(n)));
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) g.ad_inv[k][i] = g.ad[k][i].substitute(g.inv);
  g.frame.assign(n, std::vector<Poly>(n, Poly(n)));
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) g.frame[k][i] = g.xi_r[i][k];
  g.frame_inv = poly_unipotent_inverse(g.frame);
}

std::map<std::string, std::string> parse_kv(const std::string& text, const std::string& origin) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw MalformedDefinition(origin + ":" + std::to_string(no) + ": expected 'key = value'");
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k.empty()) throw MalformedDefinition(origin + ":" + std::to_string(no) + ": empty key");
    if (kv.count(k)) throw MalformedDefinition(origin + ":" + std::to_string(no) + ": duplicate key " + k);
    kv[k] = v;
  }
  return kv;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key,
                        const std::string& origin) {
  auto it = kv.find(key);
  if (it == kv.end()) throw MalformedDefinition(origin + ": missing key '" + key + "'");
  return it->second;
}

Matrix parse_matrix(const std::string& s, const std::string& origin) {
  auto rows = split(s, ';');
  std::vector<std::vector<Scalar>> vals;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    std::istringstream is(r);
    std::string tok;
    while (is >> tok) row.push_back(parse_scalar(tok));
    vals.push_back(row);
  }
  size_t n = vals.size();
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (vals[i].size() != n) throw MalformedDefinition(origin + ": matrix '" + s + "' is not square");
    for (size_t j = 0; j < n; ++j) m(i, j) = vals[i][j];
  }
  return m;
}

std::shared_ptr<UnipotentGroup> load_unipotent(const std::map<std::string, std::string>& kv,
                                               const std::string& origin) {
  auto g = std::make_shared<UnipotentGroup>();
  g->id = need(kv, "name", origin);
  g->description = kv.count("description") ? kv.at("description") : "";
  g->coords = split(need(kv, "coordinates", origin), ',');
  g->n = g->coords.size();
  if (g->n == 0) throw MalformedDefinition(origin + ": no coordinates");
  g->weights.assign(g->n, 1);
  if (kv.count("weights")) {
    auto ws = split(kv.at("weights"), ',');
    if (ws.size() != g->n) throw MalformedDefinition(origin + ": weights do not match coordinates");
    for (size_t i = 0; i < g->n; ++i) g->weights[i] = std::stoi(ws[i]);
  }
  std::vector<std::string> two;
  for (const auto& c : g->coords) two.push_back(c + "1");
  for (const auto& c : g->coords) two.push_back(c + "2");
  for (const auto& c : g->coords) {
    g->mult.push_back(Poly::parse(need(kv, "mult." + c, origin), two));
    g->inv.push_back(Poly::parse(need(kv, "inverse." + c, origin), g->coords));
  }
  derive_unipotent(*g, kv);
  auto raw = std::make_shared<const UnipotentGroup>(*g);
  g->points = std::make_shared<PointFamily>(
      g->id, Point(g->n, Scalar(0)), [raw](const Point& a, const Point& b) { return raw->mul_points(a, b); },
      [raw](const Point& a) { return raw->inverse_point(a); }, render_point,
      [n = g->n](Rng& rng) {
        Point p(n);
        for (auto& x : p) x = rng.small_rational();
        return p;
      });
  return g;
}

std::shared_ptr<FiniteGroup> load_finite(const std::map<std::string, std::string>& kv, const std::string& origin) {
  auto g = std::make_shared<FiniteGroup>();
  g->id = need(kv, "name", origin);
  g->description = kv.count("description") ? kv.at("description") : "";
  g->names = split(need(kv, "elements", origin), ',');
  size_t n = g->names.size();
  g->identity = g->index(need(kv, "identity", origin));
  g->table.assign(n, std::vector<int>(n));
  for (size_t a = 0; a < n; ++a) {
    auto row = split(need(kv, "row." + g->names[a], origin), ',');
    if (row.size() != n) throw MalformedDefinition(origin + ": row." + g->names[a] + " has wrong length");
    for (size_t b = 0; b < n; ++b) g->table[a][b] = g->index(row[b]);
  }
  for (size_t a = 0; a < n; ++a) {
    std::set<int> seen(g->table[a].begin(), g->table[a].end());
    if (seen.size() != n) throw GroupAxiomViolation(g->id + ": row " + g->names[a] + " is not a permutation");
    if (g->mul((int)a, g->identity) != (int)a || g->mul(g->identity, (int)a) != (int)a)
      throw GroupAxiomViolation(g->id + ": identity law fails at " + g->names[a]);
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (g->mul(g->mul((int)a, (int)b), (int)c) != g->mul((int)a, g->mul((int)b, (int)c)))
          throw GroupAxiomViolation(g->id + ": associativity fails at (" + g->names[a] + "," + g->names[b] + "," +
                                    g->names[c] + ")");
  }
  g->inverse.assign(n, -1);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (g->mul((int)a, (int)b) == g->identity) g->inverse[a] = (int)b;
  if (kv.count("generators")) g->generators = split(kv.at("generators"), ',');
  if (kv.count("irreps")) {
    for (const auto& name : split(kv.at("irreps"), ',')) {
      std::map<int, Matrix> gens;
      for (const auto& gn : g->generators) gens[g->index(gn)] = parse_matrix(need(kv, "irrep." + name + "." + gn, origin), origin);
      size_t d = gens.begin()->second.rows();
      std::vector<Matrix> img(n);
      std::vector<bool> known(n, false);
      img[(size_t)g->identity] = Matrix::identity(d);
      known[(size_t)g->identity] = true;
      std::queue<int> q;
      q.push(g->identity);
      while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (const auto& [s, m] : gens) {
          int b = g->mul(a, s);
          if (known[(size_t)b]) continue;
          img[(size_t)b] = img[(size_t)a] * m;
          known[(size_t)b] = true;
          q.push(b);
        }
      }
      for (size_t a = 0; a < n; ++a) {
        if (!known[a]) throw MalformedDefinition(origin + ": generators do not generate the group");
        for (size_t b = 0; b < n; ++b)
          if (!(img[a] * img[b] == img[(size_t)g->mul((int)a, (int)b)]))
            throw GroupAxiomViolation(g->id + ": irrep " + name + " is not a homomorphism");
      }
      g->declared_irreps[name] = img;
    }
  }
  auto raw = std::make_shared<const FiniteGroup>(*g);
  g->points = std::make_shared<PointFamily>(
      g->id, Point{Scalar(g->identity)},
      [raw](const Point& a, const Point& b) { return raw->point(raw->mul(FiniteGroup::element(a), FiniteGroup::element(b))); },
      [raw](const Point& a) { return raw->point(raw->inverse[(size_t)FiniteGroup::element(a)]); },
      [raw](const Point& a) { return "[" + raw->names[(size_t)FiniteGroup::element(a)] + "]"; },
      [raw](Rng& rng) { return raw->point((int)rng.below(raw->order())); });
  return g;
}

}  // namespace

Point UnipotentGroup::mul_points(const Point& a, const Point& b) const {
  Point ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  Point out(n);
  for (size_t k = 0; k < n; ++k) out[k] = mult[k].eval(ab);
  return out;
}

Point UnipotentGroup::inverse_point(const Point& a) const {
  Point out(n);
  for (size_t k = 0; k < n; ++k) out[k] = inv[k].eval(a);
  return out;
}

Poly UnipotentGroup::apply(const Field& v, const Poly& p) const {
  Poly out(p.nvars());
  for (size_t k = 0; k < n; ++k)
    if (!v[k].is_zero()) out += v[k] * p.derivative(k);
  return out;
}

Field UnipotentGroup::adjoint_field(size_t i) const {
  Field v(n);
  for (size_t k = 0; k < n; ++k) v[k] = xi_r[i][k] - xi_l[i][k];
  return v;
}

std::vector<Poly> UnipotentGroup::frame_coefficients(const Field& v) const {
  std::vector<Poly> a(n, Poly(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) a[j] += frame_inv[j][k] * v[k];
  return a;
}

Poly UnipotentGroup::adjoint_pairing(size_t i, size_t j) const {
  return frame_coefficients(adjoint_field(i))[j];
}

Poly UnipotentGroup::pullback_mult(const Poly& p) const { return p.substitute(mult); }

Poly UnipotentGroup::conjugation_pullback(const Poly& p) const {
  std::vector<Poly> g(n), h(n);
  for (size_t i = 0; i < n; ++i) {
    g[i] = Poly::var(2 * n, i);
    h[i] = Poly::var(2 * n, n + i);
  }
  auto cat = [](std::vector<Poly> a, const std::vector<Poly>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto ginv = substitute_all(inv, g);
  auto c = substitute_all(mult, cat(substitute_all(mult, cat(ginv, h)), g));
  return p.substitute(c);
}

bool UnipotentGroup::abelian() const {
  for (const auto& a : f)
    for (const auto& b : a)
      for (const auto& c : b)
        if (c != 0) return false;
  return true;
}

int FiniteGroup::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw MalformedDefinition(id + ": unknown element " + name);
  return (int)(it - names.begin());
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(order(), false);
  for (int g = 0; g < (int)order(); ++g) {
    if (seen[(size_t)g]) continue;
    std::set<int> cls;
    for (int k = 0; k < (int)order(); ++k) cls.insert(mul(mul(k, g), inverse[(size_t)k]));
    for (int c : cls) seen[(size_t)c] = true;
    std::vector<int> v(cls.begin(), cls.end());
    auto pos = std::find(v.begin(), v.end(), g);
    std::rotate(v.begin(), pos, pos + 1);
    out.push_back(v);
  }
  return out;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> c;
  for (int k = 0; k < (int)order(); ++k)
    if (mul(k, g) == mul(g, k)) c.push_back(k);
  return c;
}

bool FiniteGroup::abelian() const {
  for (int a = 0; a < (int)order(); ++a)
    if (centralizer(a).size() != order()) return false;
  return true;
}

const Matrix& SubgroupIrrep::of(int g) const {
  auto it = std::find(elements.begin(), elements.end(), g);
  if (it == elements.end()) throw Error("element outside subgroup");
  return images[(size_t)(it - elements.begin())];
}

namespace {

using UPoly = std::vector<Scalar>;  // coefficients, lowest degree first

UPoly upoly_div(UPoly num, const UPoly& den) {
  UPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1);
  for (size_t i = num.size(); i-- >= den.size();) {
    Scalar c = num[i] / den.back();
    q[i - den.size() + 1] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= c * den[j];
    if (i == den.size() - 1) break;
  }
  return q;
}

UPoly cyclotomic(int d) {
  UPoly p((size_t)d + 1);
  p[0] = -1;
  p[(size_t)d] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = upoly_div(p, cyclotomic(e));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

std::vector<SubgroupIrrep> rational_irreps(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::vector<SubgroupIrrep> out;
  if (subgroup.size() == g.order() && !g.declared_irreps.empty()) {
    for (const auto& [name, imgs] : g.declared_irreps) {
      SubgroupIrrep r;
      r.name = name;
      r.elements = subgroup;
      for (int e : subgroup) r.images.push_back(imgs[(size_t)e]);
      out.push_back(r);
    }
    return out;
  }
  int gen = -1;
  size_t m = subgroup.size();
  for (int e : subgroup) {
    size_t ord = 1;
    for (int x = e; x != g.identity; x = g.mul(x, e)) ++ord;
    if (ord == m) {
      gen = e;
      break;
    }
  }
  if (gen < 0) throw UnsupportedGroup(g.id + ": rational irreducibles of a non-cyclic proper subgroup are not available");
  for (int d = 1; d <= (int)m; ++d) {
    if (m % (size_t)d) continue;
    UPoly phi = cyclotomic(d);
    size_t k = phi.size() - 1;
    Matrix c(k, k);
    for (size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
    for (size_t i = 0; i < k; ++i) c(i, k - 1) = -phi[i];
    SubgroupIrrep r;
    r.name = "phi" + std::to_string(d);
    Matrix pw = Matrix::identity(k);
    int x = g.identity;
    for (size_t s = 0; s < m; ++s) {
      r.elements.push_back(x);
      r.images.push_back(pw);
      pw = pw * c;
      x = g.mul(x, gen);
    }
    out.push_back(r);
  }
  return out;
}

GroupModel load_group_text(const std::string& text, const std::string& origin) {
  auto kv = parse_kv(text, origin);
  GroupModel m;
  const std::string& kind = need(kv, "kind", origin);
  if (kind == "unipotent")
    m.unipotent = load_unipotent(kv, origin);
  else if (kind == "finite")
    m.finite = load_finite(kv, origin);
  else
    throw MalformedDefinition(origin + ": kind must be unipotent or finite");
  m.id = need(kv, "name", origin);
  return m;
}

GroupModel load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownGroup("cannot read group definition " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_group_text(ss.str(), path);
}

std::string corpus_dir() {
  if (const char* env = std::getenv("GH_GROUPS_DIR")) return env;
#ifdef GH_CORPUS_DIR
  return GH_CORPUS_DIR;
#else
  return "groups";
#endif
}

std::vector<std::string> corpus_ids() {
  std::vector<std::string> ids;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir(), ec))
    if (e.is_regular_file() && e.path().extension() == ".group") ids.push_back(e.path().stem().string());
  std::sort(ids.begin(), ids.end());
  return ids;
}

GroupModel load_group(const std::string& id) {
  auto path = std::filesystem::path(corpus_dir()) / (id + ".group");
  if (!std::filesystem::exists(path)) throw UnknownGroup("unknown group '" + id + "' (no " + path.string() + ")");
  return load_group_file(path.string());
}

Report check_group_model(const GroupModel& model, const std::string& prefix) {
  Report rep;
  auto add = [&](const std::string& id, const std::string& identity, bool pass, const std::string& got) {
    CheckRecord r;
    r.id = prefix + "/" + id;
    r.identity = identity;
    r.anchor = "group models";
    r.pass = pass;
    r.expected = "holds";
    r.got = got;
    rep.add(r);
  };
  if (model.finite) {
    const auto& g = *model.finite;
    add("finite-axioms", "associativity, identity and inverses of the table", true,
        std::to_string(g.order()) + " elements");
    auto classes = g.conjugacy_classes();
    size_t total = 0;
    for (const auto& c : classes) total += c.size();
    add("class-equation", "conjugacy classes partition the group", total == g.order(),
        std::to_string(classes.size()) + " classes");
    return rep;
  }
  const auto& g = *model.unipotent;
  size_t n = g.n;
  bool ok = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) ok = ok && field_equal(field_bracket(g, g.xi_r[i], g.xi_l[j]), Field(n, Poly(n)));
  add("fields-commute", "[ξ^R_i, ξ^L_j] = 0", ok, ok ? "0 for all pairs" : "nonzero");
  ok = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Field expect(n, Poly(n));
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) expect[l] += g.xi_r[k][l] * g.f[k][i][j];
      ok = ok && field_equal(field_bracket(g, g.xi_r[i], g.xi_r[j]), expect);
    }
  add("left-invariant-bracket", "[ξ^R_i, ξ^R_j] = Σ_k f^k_{ij} ξ^R_k", ok, ok ? "holds" : "fails");
  ok = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Field expect(n, Poly(n));
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) expect[l] -= g.xi_l[k][l] * g.f[k][i][j];
      ok = ok && field_equal(field_bracket(g, g.xi_l[i], g.xi_l[j]), expect);
    }
  add("right-invariant-bracket", "[ξ^L_i, ξ^L_j] = −Σ_k f^k_{ij} ξ^L_k", ok, ok ? "holds" : "fails");
  ok = true;
  Point e(n, Scalar(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      ok = ok && g.xi_r[i][k].eval(e) == (i == k ? 1 : 0) && g.xi_l[i][k].eval(e) == (i == k ? 1 : 0);
      ok = ok && g.adjoint_field(i)[k].eval(e) == 0;
    }
  add("fields-at-identity", "ξ^R_i(e) = ξ^L_i(e) = ∂_i and ξ^ad_i(e) = 0", ok, ok ? "holds" : "fails");
  std::vector<Poly> gg(n), hh(n);
  for (size_t i = 0; i < n; ++i) {
    gg[i] = Poly::var(2 * n, i);
    hh[i] = Poly::var(2 * n, n + i);
  }
  PolyMatrix ag(n, std::vector<Poly>(n)), ah(n, std::vector<Poly>(n)), agh(n, std::vector<Poly>(n));
  std::vector<Poly> prod(n);
  auto cat = [](std::vector<Poly> a, const std::vector<Poly>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  for (size_t k = 0; k < n; ++k) prod[k] = g.mult[k].substitute(cat(gg, hh));
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      ag[k][i] = g.ad[k][i].substitute(gg);
      ah[k][i] = g.ad[k][i].substitute(hh);
      agh[k][i] = g.ad[k][i].substitute(prod);
    }
  ok = poly_matrix_equal(agh, poly_matmul(ag, ah));
  add("adjoint-coaction", "Ad_{gh} = Ad_g Ad_h (coassociativity of ρ^∨)", ok, ok ? "holds" : "fails");
  ok = poly_matrix_equal(g.ad, poly_identity(n, n)) == g.abelian() &&
       poly_matrix_equal(poly_matmul(g.ad, g.ad_inv), poly_identity(n, n));
  PolyMatrix ad_e(n, std::vector<Poly>(n));
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) ok = ok && g.ad[k][i].eval(e) == (k == i ? 1 : 0);
  add("adjoint-counit", "Ad_e = 1, Ad_g Ad_{g⁻¹} = 1, trivial iff abelian", ok, ok ? "holds" : "fails");
  return rep;
}

Report t1g_group_law_check(const UnipotentGroup& g, int samples, uint64_t seed, bool drop_conjugation,
                           const std::string& prefix) {
  Rng rng(seed);
  size_t n = g.n;
  Tally t;
  t.id = prefix + "/t1g-law";
  t.identity = "∂_t f(g₁e^{tv₁}·g₂e^{tv₂}) = ∂_t f(g₁g₂·e^{t(g₂⁻¹v₁g₂+v₂)}) at t = 0 for all coordinates f";
  t.anchor = "T[1]G group law";
  auto point = [&] {
    Point p(n);
    for (auto& x : p) x = rng.small_rational();
    return p;
  };
  Dual one{1, 0};
  auto mul_dual = [&](const std::vector<Dual>& a, const std::vector<Dual>& b) {
    std::vector<Dual> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    std::vector<Dual> out;
    for (size_t k = 0; k < n; ++k) out.push_back(g.mult[k].eval_as(ab, one));
    return out;
  };
  auto lift = [&](const Point& p) {
    std::vector<Dual> d;
    for (const auto& x : p) d.push_back({x, 0});
    return d;
  };
  auto tangent = [&](const Point& v) {
    std::vector<Dual> d;
    for (const auto& x : v) d.push_back({0, x});
    return d;
  };
  for (int s = 0; s < samples; ++s) {
    Point g1 = point(), g2 = point(), v1 = point(), v2 = point();
    auto lhs = mul_dual(mul_dual(lift(g1), tangent(v1)), mul_dual(lift(g2), tangent(v2)));
    Point w(n);
    for (size_t k = 0; k < n; ++k) {
      w[k] = v2[k];
      if (drop_conjugation)
        w[k] += v1[k];
      else
        for (size_t i = 0; i < n; ++i) w[k] += g.ad_inv[k][i].eval(g2) * v1[i];
    }
    auto rhs = mul_dual(lift(g.mul_points(g1, g2)), tangent(w));
    bool ok = true;
    std::string exp, got;
    for (size_t k = 0; k < n; ++k) {
      ok = ok && lhs[k].a == rhs[k].a && lhs[k].b == rhs[k].b;
      exp += (k ? "," : "") + rhs[k].b.get_str();
      got += (k ? "," : "") + lhs[k].b.get_str();
    }
    t.check(ok, "g1=" + render_point(g1) + " v1=" + render_point(v1) + " g2=" + render_point(g2) + " v2=" + render_point(v2),
            "(" + exp + ")", "(" + got + ")");
  }
  Report rep;
  rep.add(t.record());
  return rep;
}

}  // namespace gh
