#include "tetra/tree.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tetra::tree {

SplitMatrix SplitMatrix::identity(int precision) { return from_rationals(1, 0, 0, 1, precision); }

SplitMatrix SplitMatrix::from_rationals(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                        int precision) {
  return {Padic3::from_rational(a, precision), Padic3::from_rational(b, precision), Padic3::from_rational(c, precision),
          Padic3::from_rational(d, precision)};
}

Padic3 SplitMatrix::determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

bool SplitMatrix::is_scalar() const { return e_[1].is_zero() && e_[2].is_zero() && e_[0].congruent(e_[3]); }

bool SplitMatrix::congruent(const SplitMatrix& o) const {
  for (int i = 0; i < 4; ++i)
    if (!e_[i].congruent(o.e_[i])) return false;
  return true;
}

std::array<int, 4> SplitMatrix::mod3() const {
  std::array<int, 4> r{};
  for (int i = 0; i < 4; ++i) r[i] = static_cast<int>(e_[i].residue(1).get_si());
  return r;
}

SplitMatrix operator*(const SplitMatrix& a, const SplitMatrix& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Padic3 sqrt_minus_two(int precision) { return sqrt_hensel(Padic3::from_rational(-2, precision)); }

SplitMatrix split_quaternion(const quat::Quaternion& q, int precision) {
  const Padic3 v = sqrt_minus_two(precision);
  const Padic3 w = Padic3::from_rational(q.w, precision), x = Padic3::from_rational(q.x, precision),
               y = Padic3::from_rational(q.y, precision), z = Padic3::from_rational(q.z, precision);
  return {w + y - z * v, -x + y * v + z, x + y * v + z, w - y + z * v};
}

bool TreeVertex::is_valid() const {
  if (a < 0 || b < 0 || c < 0 || c >= pow3(static_cast<int>(b))) return false;
  return a == 0 || b == 0 || !mpz_divisible_ui_p(c.get_mpz_t(), 3);
}

bool operator<(const TreeVertex& x, const TreeVertex& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}

std::string to_string(const TreeVertex& v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + "," + v.c.get_str() + ")";
}

SplitMatrix representative(const TreeVertex& v, int precision) {
  return SplitMatrix::from_rationals(Rational(pow3(static_cast<int>(v.a))), 0, Rational(v.c),
                                     Rational(pow3(static_cast<int>(v.b))), precision);
}

namespace {

// Multiply by 3^k exactly.
Padic3 shift(const Padic3& p, int k) {
  if (p.is_zero()) return Padic3::zero(p.absolute_precision() + k);
  return Padic3::from_unit(p.valuation() + k, p.unit(), p.relative_precision());
}

Padic3 unit_part(const Padic3& p) { return Padic3::from_unit(0, p.unit(), p.relative_precision()); }

}  // namespace

TreeVertex canonical_vertex(const SplitMatrix& m) {
  std::array<Padic3, 4> e = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  if (m.determinant().is_zero()) throw PrecisionExhausted("matrix is singular to working precision");

  int minv = 0;
  bool any = false;
  for (const auto& x : e)
    if (!x.is_zero()) {
      minv = any ? std::min(minv, x.valuation()) : x.valuation();
      any = true;
    }
  for (const auto& x : e)
    if (x.is_zero() && x.absolute_precision() < minv) throw PrecisionExhausted("cannot certify the scaling valuation");
  for (auto& x : e) x = shift(x, -minv);

  // Pivot on the top-row entry of least valuation.
  auto& [t0, t1, b0, b1] = e;
  if (t0.is_zero() && t1.is_zero()) throw PrecisionExhausted("top row vanishes to working precision");
  bool swap_cols;
  if (t0.is_zero())
    swap_cols = true;
  else if (t1.is_zero())
    swap_cols = false;
  else
    swap_cols = t1.valuation() < t0.valuation();
  if (swap_cols) {
    std::swap(t0, t1);
    std::swap(b0, b1);
  }
  if (t1.is_zero() && t1.absolute_precision() < t0.valuation())
    throw PrecisionExhausted("cannot certify the pivot valuation");

  if (!t1.is_zero()) b1 = b1 - (t1 * t0.inverse()) * b0;
  const int a = t0.valuation();
  b0 = b0 * unit_part(t0).inverse();
  if (b1.is_zero()) throw PrecisionExhausted("second elementary divisor vanishes to working precision");
  const int b = b1.valuation();
  if (a < 0 || b < 0) throw InternalError("canonical form left the integral lattice");

  TreeVertex v{a, b, b0.residue(b)};
  if (!v.is_valid()) throw InternalError("canonical vertex is not primitive: " + to_string(v));
  return v;
}

std::array<TreeVertex, 4> neighbors(const TreeVertex& v, int precision) {
  const SplitMatrix r = representative(v, precision);
  std::array<TreeVertex, 4> out;
  out[0] = canonical_vertex(r * SplitMatrix::from_rationals(3, 0, 0, 1, precision));
  for (int c = 0; c < 3; ++c) out[1 + c] = canonical_vertex(r * SplitMatrix::from_rationals(1, 0, c, 3, precision));
  return out;
}

TreeVertex act(const SplitMatrix& g, const TreeVertex& v, int precision) {
  return canonical_vertex(g * representative(v, precision));
}

Ball ball(int radius, int precision) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  Ball out;
  std::map<TreeVertex, int> index;
  out.vertices.push_back(TreeVertex{});
  out.depth.push_back(0);
  out.adjacency.emplace_back();
  index[TreeVertex{}] = 0;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    if (out.depth[i] == radius) continue;
    for (const auto& n : neighbors(out.vertices[i], precision)) {
      auto [it, inserted] = index.emplace(n, static_cast<int>(out.vertices.size()));
      if (inserted) {
        out.vertices.push_back(n);
        out.depth.push_back(out.depth[i] + 1);
        out.adjacency.emplace_back();
      }
      int j = it->second;
      auto& adj = out.adjacency[i];
      if (std::find(adj.begin(), adj.end(), j) == adj.end()) {
        adj.push_back(j);
        out.adjacency[j].push_back(static_cast<int>(i));
      }
    }
  }
  out.sizes_by_depth.assign(radius + 1, 0);
  for (int d : out.depth) ++out.sizes_by_depth[d];
  for (std::size_t d = 1; d < out.sizes_by_depth.size(); ++d) out.sizes_by_depth[d] += out.sizes_by_depth[d - 1];
  return out;
}

std::vector<TreeVertex> fixed_vertices(const SplitMatrix& g, int radius, int precision) {
  std::vector<TreeVertex> out;
  for (const auto& v : ball(radius, precision).vertices)
    if (act(g, v, precision) == v) out.push_back(v);
  return out;
}

SplitMatrix word_matrix(const group::GroupWord& w, int precision) {
  return split_quaternion(quat::word_quaternion(w), precision);
}

TransitivityReport verify_simple_transitivity(int max_length, int precision) {
  TransitivityReport rep;
  rep.counts.assign(max_length + 1, 0);
  rep.distance_matches_length = true;
  rep.bipartition = true;
  std::set<TreeVertex> images;
  for (const auto& w : group::normal_forms(max_length)) {
    if (w.perm != group::kIdentityPerm) continue;
    const TreeVertex v = act(word_matrix(w, precision), TreeVertex{}, precision);
    const auto len = static_cast<std::int64_t>(w.length());
    ++rep.counts[w.length()];
    ++rep.total;
    if (v.distance_from_base() != len) rep.distance_matches_length = false;
    if (v.parity() != static_cast<int>(len % 2)) rep.bipartition = false;
    images.insert(v);
  }
  const auto b = ball(max_length, precision);
  const std::set<TreeVertex> ball_set(b.vertices.begin(), b.vertices.end());
  rep.bijection = images.size() == rep.total && images == ball_set;
  return rep;
}

StabilizerReport stabilizer_order(int max_free, int precision) {
  StabilizerReport rep;
  rep.unit_determinants = true;
  rep.no_length_one = true;
  for (const auto& w : group::normal_forms(max_free)) {
    const SplitMatrix g = word_matrix(w, precision);
    ++rep.enumerated;
    if (act(g, TreeVertex{}, precision) != TreeVertex{}) continue;
    ++rep.order;
    if (g.determinant().valuation() != 0) rep.unit_determinants = false;
    if (w.length() == 1) rep.no_length_one = false;
  }
  return rep;
}

namespace {

using M9 = std::array<int, 4>;

M9 mul9(const M9& x, const M9& y) {
  return {(x[0] * y[0] + x[1] * y[2]) % 9, (x[0] * y[1] + x[1] * y[3]) % 9, (x[2] * y[0] + x[3] * y[2]) % 9,
          (x[2] * y[1] + x[3] * y[3]) % 9};
}

std::set<M9> generate9(const std::vector<M9>& gens) {
  const M9 id = {1, 0, 0, 1};
  std::set<M9> seen{id};
  std::vector<M9> todo{id};
  while (!todo.empty()) {
    M9 x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      M9 y = mul9(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

bool trivial_mod3(const M9& x) { return x[0] % 3 == 1 && x[1] % 3 == 0 && x[2] % 3 == 0 && x[3] % 3 == 1; }

}  // namespace

bool RigidityReport::ok() const {
  return conjugation && generators_trivial_mod3 && stabilizer_size == 54 && stabilizer_generated &&
         order3_count > 0 && order3_in_subgroup && order3_trivial_mod3;
}

RigidityReport verify_distance2_rigidity() {
  RigidityReport rep;
  const M9 id = {1, 0, 0, 1};
  const M9 tau = {1, 1, 0, 1};
  const M9 sigma = {2, 0, 0, 5};
  const M9 sigma_inv = {5, 0, 0, 2};
  M9 tau4 = id;
  for (int i = 0; i < 4; ++i) tau4 = mul9(tau4, tau);
  rep.conjugation = mul9(mul9(sigma, tau), sigma_inv) == tau4;
  const M9 tau3 = mul9(mul9(tau, tau), tau);
  const M9 sigma2 = mul9(sigma, sigma);
  rep.generators_trivial_mod3 = trivial_mod3(tau3) && trivial_mod3(sigma2);

  // Elements of SL2(Z/9) preserving the line spanned by e1.
  std::set<M9> stab;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int d = 0; d < 9; ++d)
        if ((a * d) % 9 == 1) stab.insert({a, b, 0, d});
  rep.stabilizer_size = stab.size();
  rep.stabilizer_generated = generate9({tau, sigma}) == stab;

  const auto small = generate9({tau3, sigma2});
  rep.order3_in_subgroup = true;
  rep.order3_trivial_mod3 = true;
  for (const auto& x : stab) {
    if (x == id || mul9(mul9(x, x), x) != id) continue;
    ++rep.order3_count;
    if (!small.count(x)) rep.order3_in_subgroup = false;
    if (!trivial_mod3(x)) rep.order3_trivial_mod3 = false;
  }
  return rep;
}

}  // namespace tetra::tree

namespace tetra::quat {

bool sl2f3_check() {
  std::set<std::array<int, 4>> sl2;
  for (int m = 0; m < 81; ++m) {
    std::array<int, 4> x = {m % 3, m / 3 % 3, m / 9 % 3, m / 27};
    if ((x[0] * x[3] - x[1] * x[2] + 9) % 3 == 1) sl2.insert(x);
  }
  std::set<std::array<int, 4>> image;
  for (const auto& q : binary_tetrahedral()) image.insert(tree::split_quaternion(q).mod3());
  return sl2.size() == 24 && image == sl2;
}

}  // namespace tetra::quat
