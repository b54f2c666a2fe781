#include "genlab/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "genlab/errors.hpp"
#include "genlab/ferrers.hpp"
#include "genlab/poset.hpp"

namespace genlab {

RMatrix rref(RMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

Rational determinant(RMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

RMatrix inverse(const RMatrix& m) {
  const std::size_t n = m.size();
  RMatrix aug(n, RVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  RMatrix r = rref(aug);
  if (r.size() != n) throw InvalidArgument("matrix is singular");
  RMatrix inv(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i][i] != 1) throw InvalidArgument("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = r[i][n + j];
  }
  return inv;
}

RMatrix transpose(const RMatrix& m) {
  if (m.empty()) return m;
  RMatrix t(m.front().size(), RVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RVec multiply(const RMatrix& m, const RVec& v) {
  RVec out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

Hyperplane Hyperplane::make(RVec normal, Rational offset) {
  auto first = std::find_if(normal.begin(), normal.end(), [](const Rational& x) { return x != 0; });
  if (first == normal.end()) throw InvalidArgument("hyperplane normal must be nonzero");
  // Clear denominators, then divide by the content.
  Integer l(1);
  for (const auto& x : normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), offset.get_den_mpz_t());
  Integer g(0);
  for (const auto& x : normal) {
    Integer v = Rational(x * Rational(l)).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Integer ov = Rational(offset * Rational(l)).get_num();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ov.get_mpz_t());
  Rational scale = Rational(l) / Rational(g);
  if (*first < 0) scale = -scale;
  Hyperplane h;
  for (const auto& x : normal) h.normal.push_back(x * scale);
  h.offset = offset * scale;
  return h;
}

RVec Hyperplane::row() const {
  RVec r = normal;
  r.push_back(offset);
  return r;
}

nlohmann::json Hyperplane::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : normal) a.push_back(genlab::to_json(x));
  a.push_back(genlab::to_json(offset));
  return a;
}

Flat Flat::ambient(int d) {
  Flat f;
  f.d_ = d;
  return f;
}

std::optional<Flat> Flat::solve(int d, RMatrix rows) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != d + 1) throw InvalidArgument("augmented row has the wrong length");
  Flat f;
  f.d_ = d;
  f.rows_ = rref(std::move(rows));
  for (const auto& r : f.rows_) {
    bool zero_normal = std::all_of(r.begin(), r.end() - 1, [](const Rational& x) { return x == 0; });
    if (zero_normal) return std::nullopt;
  }
  return f;
}

std::optional<Flat> Flat::intersect(const Hyperplane& h) const {
  if (h.dim() != d_) throw InvalidArgument("hyperplane dimension mismatch");
  RMatrix rows = rows_;
  rows.push_back(h.row());
  return solve(d_, std::move(rows));
}

bool Flat::implies(const RVec& row) const {
  RMatrix rows = rows_;
  rows.push_back(row);
  return rref(std::move(rows)).size() == rows_.size();
}

bool Flat::subset_of(const Flat& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const RVec& r) { return implies(r); });
}

nlohmann::json Arrangement::to_json() const {
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : hyperplanes) hs.push_back(h.to_json());
  nlohmann::json j = {{"name", name}, {"dim", dim}, {"hyperplanes", hs}};
  if (base) {
    nlohmann::json b = nlohmann::json::array();
    for (const auto& r : base->rows()) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : r) row.push_back(genlab::to_json(x));
      b.push_back(row);
    }
    j["base"] = b;
  }
  return j;
}

namespace {

RVec unit(int d, int i) {
  RVec v(static_cast<std::size_t>(d), Rational(0));
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

}  // namespace

Arrangement build_H(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  Arrangement a;
  a.name = "H";
  a.dim = 2 * n + 1;
  for (int i = 1; i <= a.dim; ++i) a.labels.push_back(i);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      RVec v(static_cast<std::size_t>(a.dim), Rational(0));
      v[static_cast<std::size_t>(i - 1)] += 1;
      v[static_cast<std::size_t>(n + i)] -= 1;
      v[static_cast<std::size_t>(j)] -= 1;
      a.hyperplanes.push_back(Hyperplane::make(v));
    }
  }
  return a;
}

Arrangement build_K(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  Arrangement a;
  a.name = "K";
  a.dim = 2 * n + 1;
  for (int i = 1; i <= a.dim; ++i) a.labels.push_back(i);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      RVec v = unit(a.dim, 2 * i - 1);
      v[static_cast<std::size_t>(2 * j - 1)] = -1;
      a.hyperplanes.push_back(Hyperplane::make(v));
    }
  }
  return a;
}

Arrangement build_P(int n) {
  if (n < 3 || n > 5) throw SizeLimit("the deconed arrangement is built for 3 <= n <= 5");
  std::vector<int> labels = reduced_ground(n);
  Arrangement a;
  a.name = "P";
  a.dim = static_cast<int>(labels.size());
  a.labels = labels;
  auto pos = [&](int x) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin()) + 1;
  };
  RVec base = unit(a.dim, pos(1));
  base[static_cast<std::size_t>(pos(2 * n) - 1)] = -1;
  base.push_back(Rational(1));
  a.base = Flat::solve(a.dim, {base});
  FerrersGraph graph = FerrersGraph::build(labels);
  for (const auto& e : graph.edges()) {
    if (e.odd == 1 && e.even == 2 * n) continue;
    RVec v = unit(a.dim, pos(e.odd));
    v[static_cast<std::size_t>(pos(e.even) - 1)] = -1;
    a.hyperplanes.push_back(Hyperplane::make(v));
  }
  return a;
}

bool IntersectionPoset::leq(std::size_t i, std::size_t j) const { return (up_[i][j / 64] >> (j % 64)) & 1u; }

long IntersectionPoset::index_of(const Flat& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Polynomial IntersectionPoset::characteristic_polynomial() const {
  return genlab::characteristic_polynomial(ranks_, mu_);
}

IntersectionPoset intersection_poset(const Arrangement& arr) {
  if (arr.hyperplanes.size() > kMaxArrangementSize)
    throw SizeLimit("intersection posets are capped at " + std::to_string(kMaxArrangementSize) + " hyperplanes");
  Flat base = arr.base ? *arr.base : Flat::ambient(arr.dim);
  const int base_codim = base.codim();

  // Breadth-first closure; rank is codimension inside the base, so BFS
  // layers are ranks.
  std::vector<Flat> found{base};
  std::map<Flat, std::size_t> index{{base, 0}};
  std::vector<std::vector<std::size_t>> children(1);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& h : arr.hyperplanes) {
      std::optional<Flat> g = found[i].intersect(h);
      if (!g || g->codim() == found[i].codim()) continue;
      auto [it, inserted] = index.emplace(*g, found.size());
      if (inserted) {
        found.push_back(*g);
        children.emplace_back();
      }
      children[i].push_back(it->second);
    }
  }
  // Sort by rank, keeping discovery order inside a rank.
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return found[a].codim() < found[b].codim(); });
  std::vector<std::size_t> where(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) where[order[k]] = k;

  IntersectionPoset p;
  const std::size_t n = found.size();
  const std::size_t words = (n + 63) / 64;
  for (std::size_t k = 0; k < n; ++k) {
    p.flats_.push_back(found[order[k]]);
    p.ranks_.push_back(p.flats_.back().codim() - base_codim);
    p.index_.emplace(p.flats_.back(), k);
  }
  p.up_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t k = n; k-- > 0;) {
    auto& row = p.up_[k];
    row[k / 64] |= std::uint64_t{1} << (k % 64);
    for (std::size_t c : children[order[k]]) {
      const auto& cr = p.up_[where[c]];
      for (std::size_t w = 0; w < words; ++w) row[w] |= cr[w];
    }
  }
  p.mu_ = mobius_from_bottom(p.ranks_, [&p](std::size_t a, std::size_t b) { return p.leq(a, b); });
  return p;
}

SetPartition flat_partition(const Flat& f, const std::vector<int>& labels) {
  const int d = f.ambient_dim();
  if (static_cast<int>(labels.size()) != d) throw InvalidArgument("label count must equal the dimension");
  std::vector<int> parent(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) parent[static_cast<std::size_t>(i)] = i;
  for (int u = 0; u < d; ++u) {
    if (parent[static_cast<std::size_t>(u)] != u) continue;
    for (int v = u + 1; v < d; ++v) {
      if (parent[static_cast<std::size_t>(v)] != v) continue;
      RVec row(static_cast<std::size_t>(d + 1), Rational(0));
      row[static_cast<std::size_t>(u)] = 1;
      row[static_cast<std::size_t>(v)] = -1;
      if (f.implies(row)) parent[static_cast<std::size_t>(v)] = u;
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < d; ++i) groups[parent[static_cast<std::size_t>(i)]].push_back(labels[static_cast<std::size_t>(i)]);
  std::vector<std::vector<int>> blocks;
  for (auto& [k, b] : groups) blocks.push_back(std::move(b));
  return SetPartition(std::move(blocks));
}

RMatrix linear_map_matrix(int n) {
  const int d = 2 * n + 1;
  RMatrix a(static_cast<std::size_t>(d), RVec(static_cast<std::size_t>(d), Rational(0)));
  auto set_col = [&](int col, const RVec& v) {
    for (int r = 0; r < d; ++r) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col - 1)] = v[static_cast<std::size_t>(r)];
  };
  for (int i = 1; i <= n; ++i) {
    RVec odd = unit(d, i);
    odd[static_cast<std::size_t>(n + i)] -= 1;
    set_col(2 * i - 1, odd);
    set_col(2 * i, unit(d, i + 1));
  }
  set_col(d, unit(d, 1));
  return a;
}

Flat transport_flat(const Flat& f, const RMatrix& a) {
  RMatrix rows;
  for (const auto& r : f.rows()) {
    if (r.back() != 0) throw InvalidArgument("only central flats can be transported");
    RVec normal(r.begin(), r.end() - 1);
    RVec img = multiply(a, normal);
    img.push_back(Rational(0));
    rows.push_back(std::move(img));
  }
  auto out = Flat::solve(f.ambient_dim(), std::move(rows));
  if (!out) throw InvalidArgument("transported flat is empty");
  return *out;
}

namespace {

// Compares two posets through an index map, reporting the first bad pair.
std::optional<nlohmann::json> order_mismatch(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& a,
                                             const std::function<bool(std::size_t, std::size_t)>& b,
                                             const std::vector<std::size_t>& map) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != b(map[i], map[j])) return nlohmann::json{{"i", i}, {"j", j}};
  return std::nullopt;
}

nlohmann::json flat_json(const Flat& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : f.rows()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : r) row.push_back(to_json(x));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

CheckOutcome verify_linear_isomorphism(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (n > 4) throw SizeLimit("linear isomorphism check is capped at n = 4");
  CheckOutcome o{true, {{"n", n}}};
  RMatrix a = linear_map_matrix(n);
  Rational det = determinant(a);
  o.witness["det"] = to_json(det);
  if (abs(det) != 1) {
    o.ok = false;
    return o;
  }
  Arrangement h = build_H(n);
  Arrangement k = build_K(n);
  // Hyperplanes first: K_{i,j} goes to H_{i,j}.
  for (std::size_t i = 0; i < k.hyperplanes.size(); ++i) {
    RVec img = multiply(a, k.hyperplanes[i].normal);
    if (!(Hyperplane::make(img) == h.hyperplanes[i])) {
      o.ok = false;
      o.witness["hyperplane_mismatch"] = i;
      return o;
    }
  }
  IntersectionPoset lh = intersection_poset(h);
  IntersectionPoset lk = intersection_poset(k);
  o.witness["flats"] = lk.size();
  o.witness["length"] = lh.length();
  if (lh.size() != lk.size()) {
    o.ok = false;
    o.witness["sizes"] = {lk.size(), lh.size()};
    return o;
  }
  std::vector<std::size_t> to_h(lk.size());
  std::vector<char> hit(lh.size(), 0);
  for (std::size_t i = 0; i < lk.size(); ++i) {
    Flat img = transport_flat(lk.flats()[i], a);
    long j = lh.index_of(img);
    if (j < 0 || hit[static_cast<std::size_t>(j)]) {
      o.ok = false;
      o.witness["unmatched_flat"] = flat_json(lk.flats()[i]);
      return o;
    }
    hit[static_cast<std::size_t>(j)] = 1;
    to_h[i] = static_cast<std::size_t>(j);
  }
  if (auto bad = order_mismatch(
          lk.size(), [&](std::size_t x, std::size_t y) { return lk.leq(x, y); },
          [&](std::size_t x, std::size_t y) { return lh.leq(x, y); }, to_h)) {
    o.ok = false;
    o.witness["order_mismatch_linear"] = *bad;
    return o;
  }
  // Coordinate-equality partitions of K's flats against the bond lattice.
  BondLattice bl = build_bond_lattice(2 * n);
  const PartitionPoset& pp = bl.poset;
  if (pp.size() != lk.size()) {
    o.ok = false;
    o.witness["bond_lattice_size"] = pp.size();
    return o;
  }
  std::vector<std::size_t> to_p(lk.size());
  for (std::size_t i = 0; i < lk.size(); ++i) {
    SetPartition full = flat_partition(lk.flats()[i], k.labels);
    // Coordinate 2n+1 appears in no equation and must stay a singleton.
    std::vector<std::vector<int>> blocks;
    for (const auto& b : full.blocks()) {
      if (b == std::vector<int>{2 * n + 1}) continue;
      if (std::find(b.begin(), b.end(), 2 * n + 1) != b.end()) {
        o.ok = false;
        o.witness["isolated_coordinate_joined"] = full.to_string();
        return o;
      }
      blocks.push_back(b);
    }
    long j = pp.index_of(SetPartition(blocks));
    if (j < 0) {
      o.ok = false;
      o.witness["partition_not_in_lattice"] = full.to_string();
      return o;
    }
    to_p[i] = static_cast<std::size_t>(j);
  }
  if (auto bad = order_mismatch(
          lk.size(), [&](std::size_t x, std::size_t y) { return lk.leq(x, y); },
          [&](std::size_t x, std::size_t y) { return pp.leq(x, y); }, to_p)) {
    o.ok = false;
    o.witness["order_mismatch_partition"] = *bad;
    return o;
  }
  Polynomial ch = lh.characteristic_polynomial();
  o.witness["chi"] = ch.to_string();
  o.ok = ch == pp.characteristic_polynomial();
  return o;
}

CheckOutcome verify_reduced_arrangement(int n) {
  Arrangement p = build_P(n);
  IntersectionPoset lp = intersection_poset(p);
  PartitionPoset red = build_reduced(n);
  CheckOutcome o{true, {{"n", n}, {"flats", lp.size()}, {"reduced_elements", red.size()}}};
  if (lp.size() != red.size()) {
    o.ok = false;
    return o;
  }
  std::vector<std::size_t> map(lp.size());
  std::vector<char> hit(red.size(), 0);
  for (std::size_t i = 0; i < lp.size(); ++i) {
    SetPartition sp = flat_partition(lp.flats()[i], p.labels);
    long j = red.index_of(sp);
    if (j < 0 || hit[static_cast<std::size_t>(j)]) {
      o.ok = false;
      o.witness["unmatched"] = sp.to_string();
      return o;
    }
    hit[static_cast<std::size_t>(j)] = 1;
    map[i] = static_cast<std::size_t>(j);
  }
  if (auto bad = order_mismatch(
          lp.size(), [&](std::size_t x, std::size_t y) { return lp.leq(x, y); },
          [&](std::size_t x, std::size_t y) { return red.leq(x, y); }, map)) {
    o.ok = false;
    o.witness["order_mismatch"] = *bad;
    return o;
  }
  Polynomial chi = lp.characteristic_polynomial();
  o.witness["chi"] = chi.to_string();
  o.witness["bounded_regions"] = to_json(zaslavsky_bounded(chi));
  o.ok = chi == red.characteristic_polynomial();
  return o;
}

Integer bounded_regions(int n) { return zaslavsky_bounded(intersection_poset(build_P(n)).characteristic_polynomial()); }

}  // namespace genlab
